#pragma once

#include "ctc/deutsch.hpp"

#include <optional>

namespace ctc {

// Affine parametrization of the convex set of density-matrix solutions of
// M v = v: every solution is particular + Σ t_k directions[k] for t in the
// feasible (PSD-preserving) region.
struct FixedPointSet {
    int d = 0;
    DensityMatrix particular = DensityMatrix::trusted(CMatrix::Identity(1, 1));
    std::vector<CMatrix> directions;  // traceless Hermitian, Frobenius-orthonormal
    int subspace_dim() const { return int(directions.size()); }
    bool degenerate() const { return !directions.empty(); }
};

struct SelectionRule {
    enum class Kind { MaxEntropy, MinBlochNorm, GivenParameter };
    Kind kind = Kind::MaxEntropy;
    std::vector<double> parameters;  // for GivenParameter: one t per direction
};

// Orthonormal basis of ker(M - I). Errors out when empty: a valid Deutsch
// superoperator always has a lambda = 1 eigenvector.
std::vector<CVector> fixed_subspace(const Superoperator& m, const Tolerances& tol = {});

// Real-linearly independent Hermitian basis of the span of unvec'd raw
// vectors, obtained from the Hermitian/anti-Hermitian split of each.
std::vector<CMatrix> hermitian_fixed_basis(const std::vector<CVector>& raw, int d,
                                           double tol = 1e-9);

// Decomposes the Hermitian fixed span into a particular density-matrix
// solution plus traceless directions.
FixedPointSet density_solutions(const std::vector<CMatrix>& basis, double tol = 1e-9);

// Maximal closed interval of t keeping particular + t D positive
// semidefinite.
std::pair<double, double> feasible_interval(const FixedPointSet& set, int direction_index);

DensityMatrix select(const FixedPointSet& set, const SelectionRule& rule);

// Cesàro-averaged channel iteration, projected to the nearest density
// matrix. Independent of the eigenvalue route; used as a fixed-point oracle.
DensityMatrix iterate_channel_fixed_point(const InteractionUnitary& u,
                                          const DensityMatrix& rho_cr,
                                          const DensityMatrix& sigma0, int n_steps);

// Convenience pipeline: M -> fixed subspace -> Hermitian basis -> solution
// set.
FixedPointSet solve_fixed_point_set(const Superoperator& m, const Tolerances& tol = {});

}  // namespace ctc
