#include "ctc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ctc {

namespace {

void check_finite(const CMatrix& m, const char* what) {
    if (!m.allFinite())
        throw ValidationError(std::string(what) + ": non-finite entries");
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    check_finite(a, "kron");
    check_finite(b, "kron");
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix partial_trace(const CMatrix& rho, int dim_first, int dim_second, Keep keep) {
    const Eigen::Index d = Eigen::Index(dim_first) * dim_second;
    if (dim_first < 1 || dim_second < 1 || rho.rows() != d || rho.cols() != d)
        throw ValidationError("partial_trace: matrix is not square of size dim_first*dim_second");
    if (keep == Keep::First) {
        CMatrix out = CMatrix::Zero(dim_first, dim_first);
        for (int i = 0; i < dim_first; ++i)
            for (int j = 0; j < dim_first; ++j)
                for (int k = 0; k < dim_second; ++k)
                    out(i, j) += rho(i * dim_second + k, j * dim_second + k);
        return out;
    }
    CMatrix out = CMatrix::Zero(dim_second, dim_second);
    for (int i = 0; i < dim_second; ++i)
        for (int j = 0; j < dim_second; ++j)
            for (int k = 0; k < dim_first; ++k)
                out(i, j) += rho(k * dim_second + i, k * dim_second + j);
    return out;
}

CVector vec_rowmajor(const CMatrix& rho) {
    if (rho.rows() != rho.cols())
        throw ValidationError("vec_rowmajor: matrix must be square");
    const Eigen::Index d = rho.rows();
    CVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            v(i * d + j) = rho(i, j);
    return v;
}

CMatrix unvec_rowmajor(const CVector& v, int d) {
    if (Eigen::Index(d) * d != v.size())
        throw ValidationError("unvec_rowmajor: vector length is not d^2");
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m(i, j) = v(i * Eigen::Index(d) + j);
    return m;
}

Spectrum eigenvalues(const CMatrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols())
        throw ValidationError("eigenvalues: matrix must be square");
    if (m.rows() > kMaxDim)
        throw ValidationError("eigenvalues: dimension exceeds cap of " + std::to_string(kMaxDim));
    check_finite(m, "eigenvalues");

    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigenvalues: QR iteration failed to converge after " +
                             std::to_string(30 * m.rows()) + " iterations");

    Spectrum s;
    s.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(s.values.begin(), s.values.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });

    // Cluster multiplicity at a scale-relative tolerance.
    const double scale = std::max(1.0, m.norm());
    const double cluster = 1e-8 * scale;
    s.multiplicity.resize(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        int count = 0;
        for (const auto& w : s.values)
            if (std::abs(w - s.values[i]) <= cluster) ++count;
        s.multiplicity[i] = count;
    }
    return s;
}

std::vector<CVector> nullspace(const CMatrix& m, double tol) {
    if (m.rows() != m.cols())
        throw ValidationError("nullspace: matrix must be square");
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() ? sv(0) : 0.0;
    const double threshold = tol * std::max(sigma_max, 1e-300);
    std::vector<CVector> basis;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= threshold || sigma_max == 0.0)
            basis.push_back(svd.matrixV().col(i));
    return basis;
}

HermEigensystem hermitian_eigensystem(const CMatrix& h, const Tolerances& tol) {
    if (h.rows() != h.cols())
        throw ValidationError("hermitian_eigensystem: matrix must be square");
    const double dev = (h - h.adjoint()).norm();
    const double bound = tol.herm * std::max(h.norm(), 1.0);
    if (dev > bound)
        throw ValidationError("hermitian_eigensystem: ||h - h†|| = " + std::to_string(dev) +
                              " exceeds bound " + std::to_string(bound));
    Eigen::SelfAdjointEigenSolver<CMatrix> solver((h + CMatrix(h.adjoint())) / 2.0);
    if (solver.info() != Eigen::Success)
        throw NumericalError("hermitian_eigensystem: solver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver((h + CMatrix(h.adjoint())) / 2.0,
                                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace ctc
