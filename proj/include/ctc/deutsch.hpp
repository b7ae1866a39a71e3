#pragma once

#include "ctc/linalg.hpp"

namespace ctc {

// Hermitian, unit-trace, positive-semidefinite matrix with validated
// invariants.
class DensityMatrix {
public:
    static DensityMatrix validated(CMatrix mat, const Tolerances& tol = {});
    // Skips validation; for states produced by operations that preserve the
    // invariants by construction.
    static DensityMatrix trusted(CMatrix mat);

    int dim() const { return int(mat_.rows()); }
    const CMatrix& mat() const { return mat_; }

private:
    explicit DensityMatrix(CMatrix mat) : mat_(std::move(mat)) {}
    CMatrix mat_;
};

DensityMatrix pure_state(const CVector& psi);

// Interaction unitary on CR ⊗ CTC, with the CR factor first.
class InteractionUnitary {
public:
    static InteractionUnitary validated(int dim_cr, int dim_ctc, CMatrix u,
                                        const Tolerances& tol = {});

    int dim_cr() const { return dim_cr_; }
    int dim_ctc() const { return dim_ctc_; }
    const CMatrix& mat() const { return u_; }

private:
    InteractionUnitary(int dim_cr, int dim_ctc, CMatrix u)
        : dim_cr_(dim_cr), dim_ctc_(dim_ctc), u_(std::move(u)) {}
    int dim_cr_;
    int dim_ctc_;
    CMatrix u_;
};

enum class Provenance { Pure, Mixed, Direct };

// The d² × d² matrix acting on row-major vectorized CTC states.
struct Superoperator {
    int d_ctc;
    CMatrix m;
    Provenance provenance;
};

// d_ctc × d_ctc blocks of u, indexed 1-based by CR row/column.
// blocks(u)[i-1][j-1] is A_ij.
std::vector<std::vector<CMatrix>> extract_blocks(const InteractionUnitary& u);

// Replaces (u, |psi><psi|) by (u (V ⊗ I), |0><0|) with V|0> = psi, leaving
// the channel unchanged. V is the Householder completion of psi.
InteractionUnitary gauge_reduce(const InteractionUnitary& u, const CVector& psi);

// M = Σ_i A_i1 ⊗ conj(A_i1), valid when rho_cr = |0...0><0...0|.
Superoperator build_superoperator_pure(const InteractionUnitary& u_tilde);

// M = Σ_{i,j,k} (rho_cr)_{jk} A_ij ⊗ conj(A_ik), the mixed-state extension.
Superoperator build_superoperator_mixed(const InteractionUnitary& u,
                                        const DensityMatrix& rho_cr);

// Tr_CR(u (rho_cr ⊗ sigma) u†), the CTC-side channel.
DensityMatrix apply_ctc_channel(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                                const DensityMatrix& sigma);

// Tr_CTC(u (rho_cr ⊗ sigma) u†), the post-interaction CR state.
DensityMatrix cr_output(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                        const DensityMatrix& sigma);

// Frobenius norm of the self-consistency violation; zero iff sigma is a
// fixed point of the channel.
double consistency_residual(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                            const DensityMatrix& sigma);

// Trace preservation: ||vec(I)ᵀ m - vec(I)ᵀ||.
double trace_preservation_defect(const Superoperator& s);

// Hermiticity preservation: max |m[(a,b),(c,e)] - conj(m[(b,a),(e,c)])|.
double hermiticity_preservation_defect(const Superoperator& s);

}  // namespace ctc
