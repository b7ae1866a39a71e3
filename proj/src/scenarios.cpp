#include "ctc/scenarios.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctc {

CMatrix hadamard() {
    CMatrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

CMatrix cnot() {
    CMatrix c = CMatrix::Zero(4, 4);
    c(0, 0) = 1.0;
    c(1, 1) = 1.0;
    c(2, 3) = 1.0;
    c(3, 2) = 1.0;
    return c;
}

CMatrix exchange_gate() {
    CMatrix e = CMatrix::Zero(4, 4);
    e(0, 0) = 1.0;
    e(1, 2) = 1.0;
    e(2, 1) = 1.0;
    e(3, 3) = 1.0;
    return e;
}

CMatrix identity(int d) { return CMatrix::Identity(d, d); }

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.mat() - sigma.mat(), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

InteractionUnitary build_epr_interaction() {
    const CMatrix u =
        kron(identity(2), exchange_gate()) * kron(cnot(), identity(2)) * kron(hadamard(), identity(4));
    return InteractionUnitary::validated(4, 2, u);
}

namespace {

ScenarioReport report_from_superoperator(const Superoperator& m, std::string id,
                                         const SelectionRule& rule, const Tolerances& tol) {
    ScenarioReport r;
    r.scenario_id = std::move(id);
    r.spectrum = eigenvalues(m.m, tol);
    r.fixed_set = solve_fixed_point_set(m, tol);
    for (int k = 0; k < r.fixed_set.subspace_dim(); ++k)
        r.feasible_intervals.push_back(feasible_interval(r.fixed_set, k));
    r.selected_ctc = select(r.fixed_set, rule);
    const CVector v = vec_rowmajor(r.selected_ctc.mat());
    r.residual = (m.m * v - v).norm();
    return r;
}

}  // namespace

ScenarioReport run_epr_scenario(const SelectionRule& rule, const Tolerances& tol) {
    const InteractionUnitary u = build_epr_interaction();
    const Superoperator m = build_superoperator_pure(u);
    ScenarioReport r = report_from_superoperator(m, "epr", rule, tol);
    CVector e00 = CVector::Zero(4);
    e00(0) = 1.0;
    const DensityMatrix rho_cr = pure_state(e00);
    r.cr_out = cr_output(u, rho_cr, r.selected_ctc);
    r.entanglement = entanglement_report(*r.cr_out);
    return r;
}

InteractionUnitary dejonghe_unitary() {
    CMatrix u = CMatrix::Zero(8, 8);
    // |q1 q2 q3>, q1 most significant: 000<->100, 010<->011, 101<->110,
    // 001 and 111 fixed.
    const int map[8] = {4, 1, 3, 2, 0, 6, 5, 7};
    for (int c = 0; c < 8; ++c) u(map[c], c) = 1.0;
    return InteractionUnitary::validated(4, 2, u);
}

Superoperator dejonghe_M(DejongheVariant variant, double epsilon) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw ValidationError("dejonghe_M: epsilon must be in [0, 1]");
    CMatrix m = CMatrix::Zero(4, 4);
    switch (variant) {
        case DejongheVariant::A:
            m(0, 0) = 1.0 - epsilon;
            m(0, 3) = epsilon;
            m(1, 2) = epsilon;
            m(2, 1) = epsilon;
            m(3, 0) = epsilon;
            m(3, 3) = 1.0 - epsilon;
            break;
        case DejongheVariant::B:
            m(0, 0) = 1.0;
            m(3, 3) = 1.0;
            break;
        case DejongheVariant::C: {
            const double s = std::sqrt(epsilon * (1.0 - epsilon));
            m(0, 0) = 1.0;
            m(0, 3) = epsilon;
            m(1, 1) = s;
            m(2, 2) = s;
            m(3, 3) = 1.0 - epsilon;
            break;
        }
    }
    return {2, std::move(m), Provenance::Direct};
}

namespace {

std::string variant_id(DejongheVariant v) {
    switch (v) {
        case DejongheVariant::A: return "dejonghe-a";
        case DejongheVariant::B: return "dejonghe-b";
        case DejongheVariant::C: return "dejonghe-c";
    }
    return "dejonghe-?";
}

}  // namespace

ScenarioReport run_dejonghe(DejongheVariant variant, double epsilon, const SelectionRule& rule,
                            const Tolerances& tol) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw ValidationError(
            "run_dejonghe: epsilon must be in (0, 1]; the epsilon -> 0 limit is covered by "
            "sweep diagnostics");
    const Superoperator m = dejonghe_M(variant, epsilon);
    ScenarioReport r = report_from_superoperator(m, variant_id(variant), rule, tol);
    if (variant == DejongheVariant::B) {
        // The only variant whose generating pair is known: U of the
        // permutation above with rho_CR = |00><00|.
        const InteractionUnitary u = dejonghe_unitary();
        CVector e00 = CVector::Zero(4);
        e00(0) = 1.0;
        const DensityMatrix rho_cr = pure_state(e00);
        r.cr_out = cr_output(u, rho_cr, r.selected_ctc);
        r.entanglement = entanglement_report(*r.cr_out);
    }
    return r;
}

SweepResult sweep_epsilon(const std::vector<double>& epsilons, const SelectionRule& rule,
                          const Tolerances& tol) {
    if (epsilons.empty()) throw ValidationError("sweep_epsilon: empty epsilon list");
    for (double e : epsilons)
        if (!(e > 0.0 && e <= 1.0))
            throw ValidationError("sweep_epsilon: epsilon values must be in (0, 1]");

    SweepResult result;
    result.epsilons = epsilons;
    result.points.resize(epsilons.size());

    // epsilon points are independent; results are written by index so the
    // parallel schedule cannot change the output.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(epsilons.size()); ++i) {
        const double eps = epsilons[std::size_t(i)];
        SweepPoint p;
        p.epsilon = eps;
        p.a = run_dejonghe(DejongheVariant::A, eps, rule, tol);
        p.b = run_dejonghe(DejongheVariant::B, eps, rule, tol);
        p.c = run_dejonghe(DejongheVariant::C, eps, rule, tol);
        p.lambda2_a = p.a.spectrum.values[1].real();
        p.lambda2_c = p.c.spectrum.values[1].real();
        p.frob_a_minus_b =
            (dejonghe_M(DejongheVariant::A, eps).m - dejonghe_M(DejongheVariant::B, eps).m).norm();
        p.trace_distance_ac = trace_distance(p.a.selected_ctc, p.c.selected_ctc);
        result.points[std::size_t(i)] = std::move(p);
    }
    return result;
}

ScenarioReport solve_problem(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                             const SelectionRule& rule, const Tolerances& tol,
                             const std::string& scenario_id) {
    const Superoperator m = build_superoperator_mixed(u, rho_cr);
    ScenarioReport r = report_from_superoperator(m, scenario_id, rule, tol);
    r.cr_out = cr_output(u, rho_cr, r.selected_ctc);
    if (r.cr_out->dim() == 4) r.entanglement = entanglement_report(*r.cr_out);
    return r;
}

}  // namespace ctc
