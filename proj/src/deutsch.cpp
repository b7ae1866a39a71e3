#include "ctc/deutsch.hpp"

#include <cmath>

namespace ctc {

DensityMatrix DensityMatrix::validated(CMatrix mat, const Tolerances& tol) {
    if (mat.rows() != mat.cols() || mat.rows() < 1)
        throw ValidationError("DensityMatrix: matrix must be square");
    if (!mat.allFinite())
        throw ValidationError("DensityMatrix: non-finite entries");
    const double herm_dev = (mat - mat.adjoint()).norm();
    if (herm_dev > tol.herm * std::max(mat.norm(), 1.0))
        throw ValidationError("DensityMatrix: hermiticity violation " + std::to_string(herm_dev));
    const double trace_dev = std::abs(mat.trace() - Complex(1.0));
    if (trace_dev > 1e-10)
        throw ValidationError("DensityMatrix: trace deviates from 1 by " +
                              std::to_string(trace_dev));
    const double lambda_min = min_eigenvalue(mat);
    if (lambda_min < -1e-10)
        throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(lambda_min));
    return DensityMatrix(std::move(mat));
}

DensityMatrix DensityMatrix::trusted(CMatrix mat) { return DensityMatrix(std::move(mat)); }

DensityMatrix pure_state(const CVector& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-8)
        throw ValidationError("pure_state: vector is not normalized");
    return DensityMatrix::trusted(psi * psi.adjoint());
}

InteractionUnitary InteractionUnitary::validated(int dim_cr, int dim_ctc, CMatrix u,
                                                const Tolerances& tol) {
    (void)tol;
    if (dim_cr < 1 || dim_ctc < 2)
        throw ValidationError("InteractionUnitary: need dim_cr >= 1 and dim_ctc >= 2");
    const Eigen::Index d = Eigen::Index(dim_cr) * dim_ctc;
    if (d > kMaxDim)
        throw ValidationError("InteractionUnitary: total dimension exceeds cap of " +
                              std::to_string(kMaxDim));
    if (u.rows() != d || u.cols() != d)
        throw ValidationError("InteractionUnitary: matrix size does not match dim_cr*dim_ctc");
    const double defect = (u * u.adjoint() - CMatrix::Identity(d, d)).norm();
    if (defect > 1e-8)
        throw ValidationError("InteractionUnitary: unitarity residual " + std::to_string(defect));
    return InteractionUnitary(dim_cr, dim_ctc, std::move(u));
}

std::vector<std::vector<CMatrix>> extract_blocks(const InteractionUnitary& u) {
    const int n = u.dim_cr(), d = u.dim_ctc();
    std::vector<std::vector<CMatrix>> blocks(n, std::vector<CMatrix>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            blocks[i][j] = u.mat().block(i * d, j * d, d, d);
    return blocks;
}

InteractionUnitary gauge_reduce(const InteractionUnitary& u, const CVector& psi) {
    if (psi.size() != u.dim_cr())
        throw ValidationError("gauge_reduce: psi dimension does not match dim_cr");
    if (std::abs(psi.norm() - 1.0) > 1e-8)
        throw ValidationError("gauge_reduce: psi is not normalized");

    const int n = u.dim_cr();
    CMatrix v = CMatrix::Identity(n, n);
    CVector e0 = CVector::Zero(n);
    e0(0) = 1.0;
    if ((psi - e0).norm() > 1e-14) {
        // Householder H with H psi = alpha e0, then V = H diag(alpha,1,...)
        // so that V e0 = psi exactly.
        const Complex p0 = psi(0);
        const Complex alpha = (std::abs(p0) > 0.0) ? -p0 / std::abs(p0) : Complex(-1.0);
        CVector w = psi - alpha * e0;
        CMatrix h = CMatrix::Identity(n, n) - (2.0 / w.squaredNorm()) * (w * w.adjoint());
        v = h;
        v.col(0) *= alpha;
    }
    CMatrix u_tilde = u.mat() * kron(v, CMatrix::Identity(u.dim_ctc(), u.dim_ctc()));
    return InteractionUnitary::validated(u.dim_cr(), u.dim_ctc(), std::move(u_tilde));
}

Superoperator build_superoperator_pure(const InteractionUnitary& u_tilde) {
    const auto blocks = extract_blocks(u_tilde);
    const int d = u_tilde.dim_ctc();
    CMatrix m = CMatrix::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
    for (int i = 0; i < u_tilde.dim_cr(); ++i)
        m += kron(blocks[i][0], blocks[i][0].conjugate());
    return {d, std::move(m), Provenance::Pure};
}

Superoperator build_superoperator_mixed(const InteractionUnitary& u,
                                        const DensityMatrix& rho_cr) {
    if (rho_cr.dim() != u.dim_cr())
        throw ValidationError("build_superoperator_mixed: rho_cr dimension mismatch");
    const auto blocks = extract_blocks(u);
    const int n = u.dim_cr(), d = u.dim_ctc();
    CMatrix m = CMatrix::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Complex w = rho_cr.mat()(j, k);
                if (w != Complex(0.0)) m += w * kron(blocks[i][j], blocks[i][k].conjugate());
            }
    return {d, std::move(m), Provenance::Mixed};
}

namespace {

CMatrix joint_output(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                     const DensityMatrix& sigma) {
    if (rho_cr.dim() != u.dim_cr() || sigma.dim() != u.dim_ctc())
        throw ValidationError("channel: state dimensions do not match the unitary");
    const CMatrix in = kron(rho_cr.mat(), sigma.mat());
    return u.mat() * in * u.mat().adjoint();
}

}  // namespace

DensityMatrix apply_ctc_channel(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                                const DensityMatrix& sigma) {
    CMatrix out = partial_trace(joint_output(u, rho_cr, sigma), u.dim_cr(), u.dim_ctc(),
                                Keep::Second);
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix cr_output(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                        const DensityMatrix& sigma) {
    CMatrix out = partial_trace(joint_output(u, rho_cr, sigma), u.dim_cr(), u.dim_ctc(),
                                Keep::First);
    return DensityMatrix::trusted(std::move(out));
}

double consistency_residual(const InteractionUnitary& u, const DensityMatrix& rho_cr,
                            const DensityMatrix& sigma) {
    return (apply_ctc_channel(u, rho_cr, sigma).mat() - sigma.mat()).norm();
}

double trace_preservation_defect(const Superoperator& s) {
    const CVector vi = vec_rowmajor(CMatrix::Identity(s.d_ctc, s.d_ctc));
    return (vi.adjoint() * s.m - vi.adjoint()).norm();
}

double hermiticity_preservation_defect(const Superoperator& s) {
    const int d = s.d_ctc;
    double worst = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    const Complex lhs = s.m(a * d + b, c * d + e);
                    const Complex rhs = std::conj(s.m(b * d + a, e * d + c));
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

}  // namespace ctc
