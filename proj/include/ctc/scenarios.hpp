#pragma once

#include "ctc/entanglement.hpp"
#include "ctc/fixed_point.hpp"

#include <optional>
#include <string>

namespace ctc {

struct ScenarioReport {
    std::string scenario_id;
    Spectrum spectrum;
    FixedPointSet fixed_set;
    std::vector<std::pair<double, double>> feasible_intervals;  // one per direction
    DensityMatrix selected_ctc = DensityMatrix::trusted(CMatrix::Identity(1, 1));
    std::optional<DensityMatrix> cr_out;  // only when the generating (U, rho_CR) is known
    std::optional<EntanglementReport> entanglement;
    double residual = 0.0;  // ||M vec(selected) - vec(selected)||
};

struct SweepPoint {
    double epsilon;
    ScenarioReport a, b, c;
    double lambda2_a;          // second eigenvalue of M^A
    double lambda2_c;          // second eigenvalue of M^C
    double frob_a_minus_b;     // ||M^A - M^B||_F
    double trace_distance_ac;  // between selected CTC states of A and C
};

struct SweepResult {
    std::vector<double> epsilons;
    std::vector<SweepPoint> points;
};

CMatrix hadamard();
CMatrix cnot();
CMatrix exchange_gate();
CMatrix identity(int d);

// 1/2 Tr|rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Three-qubit interaction (I2 ⊗ E)(CNOT ⊗ I2)(H ⊗ I4): two CR qubits
// prepared in an EPR pair, the second exchanged with the CTC qubit.
InteractionUnitary build_epr_interaction();

ScenarioReport run_epr_scenario(const SelectionRule& rule = {}, const Tolerances& tol = {});

// Permutation unitary swapping 000<->100, 010<->011, 101<->110 on
// |q1 q2 q3> with CR = (q1, q2) and CTC = q3.
InteractionUnitary dejonghe_unitary();

enum class DejongheVariant { A, B, C };

Superoperator dejonghe_M(DejongheVariant variant, double epsilon);

ScenarioReport run_dejonghe(DejongheVariant variant, double epsilon,
                            const SelectionRule& rule = {}, const Tolerances& tol = {});

SweepResult sweep_epsilon(const std::vector<double>& epsilons, const SelectionRule& rule = {},
                          const Tolerances& tol = {});

ScenarioReport solve_problem(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                             const SelectionRule& rule, const Tolerances& tol,
                             const std::string& scenario_id = "solve");

}  // namespace ctc
