#include "ctc/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ctc {

namespace {

double herm_inner(const CMatrix& a, const CMatrix& b) {
    return (a.adjoint() * b).trace().real();
}

// Component of x orthogonal (real Frobenius inner product) to an
// orthonormal family.
CMatrix deflate(CMatrix x, const std::vector<CMatrix>& family) {
    for (const auto& f : family) x -= herm_inner(f, x) * f;
    return x;
}

CMatrix clamped_log(const CMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
    Eigen::VectorXd logp(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < logp.size(); ++i)
        logp(i) = std::log(std::max(es.eigenvalues()(i), 1e-14));
    return es.eigenvectors() * logp.asDiagonal() * es.eigenvectors().adjoint();
}

// Euclidean projection of a real vector onto the probability simplex.
Eigen::VectorXd simplex_project(Eigen::VectorXd p) {
    std::vector<double> u(p.data(), p.data() + p.size());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0.0, theta = 0.0;
    int rho_idx = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cum += u[i];
        const double t = (cum - 1.0) / double(i + 1);
        if (u[i] - t > 0) {
            rho_idx = int(i);
            theta = t;
        }
    }
    (void)rho_idx;
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = std::max(p(i) - theta, 0.0);
    return p;
}

CMatrix affine_point(const FixedPointSet& set, const std::vector<double>& t) {
    CMatrix rho = set.particular.mat();
    for (std::size_t k = 0; k < t.size(); ++k) rho += t[k] * set.directions[k];
    return rho;
}

}  // namespace

std::vector<CVector> fixed_subspace(const Superoperator& m, const Tolerances& tol) {
    const Eigen::Index n = m.m.rows();
    std::vector<CVector> basis = nullspace(m.m - CMatrix::Identity(n, n), tol.nullspace);
    if (basis.empty())
        throw NumericalError(
            "fixed_subspace: ker(M - I) is empty; M is not a valid Deutsch superoperator");
    return basis;
}

std::vector<CMatrix> hermitian_fixed_basis(const std::vector<CVector>& raw, int d, double tol) {
    // The raw span has complex dimension k; if it is †-closed its Hermitian
    // elements form a real-linear space of dimension k, generated by the
    // (H + H†)/2 and (H - H†)/(2i) splits.
    std::vector<CMatrix> basis;
    for (const auto& v : raw) {
        const CMatrix h = unvec_rowmajor(v, d);
        const CMatrix parts[2] = {(h + CMatrix(h.adjoint())) / 2.0,
                                  (h - CMatrix(h.adjoint())) / Complex(0.0, 2.0)};
        for (const auto& p : parts) {
            CMatrix q = deflate(p, basis);
            if (q.norm() > tol) basis.push_back(q / q.norm());
        }
    }
    if (basis.size() != raw.size())
        throw NumericalError("hermitian_fixed_basis: span is not †-closed at tolerance (got " +
                             std::to_string(basis.size()) + " Hermitian elements from " +
                             std::to_string(raw.size()) + " raw vectors)");
    // Each Hermitian element must itself lie in the raw span.
    for (const auto& b : basis) {
        CVector vb = vec_rowmajor(b);
        CVector res = vb;
        for (const auto& r : raw) res -= r.dot(vb) * r;
        if (res.norm() > tol * vb.norm())
            throw NumericalError("hermitian_fixed_basis: Hermitian split left the raw span");
    }
    return basis;
}

FixedPointSet density_solutions(const std::vector<CMatrix>& basis, double tol) {
    if (basis.empty()) throw ValidationError("density_solutions: empty basis");
    const int d = int(basis.front().rows());

    // Trace-carrying element.
    int anchor = -1;
    double best = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const double t = std::abs(basis[k].trace().real());
        if (t > best) {
            best = t;
            anchor = int(k);
        }
    }
    if (anchor < 0 || best < tol)
        throw NumericalError("density_solutions: no trace-1 element in the fixed span");
    CMatrix p0 = basis[anchor] / basis[anchor].trace().real();

    std::vector<CMatrix> directions;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (int(k) == anchor) continue;
        CMatrix dmat = basis[k] - basis[k].trace().real() * p0;
        dmat = deflate(dmat, directions);
        if (dmat.norm() > tol) directions.push_back(dmat / dmat.norm());
    }

    // Find a PSD point: maximize the (concave) minimum eigenvalue over the
    // affine slice by subgradient ascent.
    std::vector<double> t(directions.size(), 0.0);
    auto point = [&](const std::vector<double>& s) {
        CMatrix rho = p0;
        for (std::size_t k = 0; k < s.size(); ++k) rho += s[k] * directions[k];
        return rho;
    };
    double lambda = min_eigenvalue(p0);
    if (lambda < -1e-10 && !directions.empty()) {
        std::vector<double> best_t = t;
        double best_lambda = lambda;
        for (int iter = 0; iter < 2000 && best_lambda < 1e-12; ++iter) {
            Eigen::SelfAdjointEigenSolver<CMatrix> es(point(t));
            const CVector v = es.eigenvectors().col(0);
            const double step = 0.5 / std::sqrt(double(iter + 1));
            for (std::size_t k = 0; k < t.size(); ++k)
                t[k] += step * (v.adjoint() * directions[k] * v)(0).real();
            const double l = min_eigenvalue(point(t));
            if (l > best_lambda) {
                best_lambda = l;
                best_t = t;
            }
        }
        t = best_t;
        lambda = best_lambda;
    }
    if (lambda < -1e-10)
        throw NumericalError("density_solutions: no positive-semidefinite element found");

    CMatrix rho = point(t);
    rho = (rho + CMatrix(rho.adjoint())) / 2.0;
    rho /= rho.trace().real();

    FixedPointSet set;
    set.d = d;
    set.particular = DensityMatrix::trusted(std::move(rho));
    set.directions = std::move(directions);
    return set;
}

std::pair<double, double> feasible_interval(const FixedPointSet& set, int direction_index) {
    if (direction_index < 0 || direction_index >= set.subspace_dim())
        throw ValidationError("feasible_interval: direction index out of range");
    const CMatrix& dir = set.directions[direction_index];
    if (dir.norm() < 1e-12)
        throw ValidationError("feasible_interval: zero direction matrix");

    // Unit trace + PSD bounds ||rho||_F by 1, so |t| <= 2 for a unit-norm
    // traceless direction.
    auto lambda_at = [&](double t) { return min_eigenvalue(set.particular.mat() + t * dir); };
    auto boundary = [&](double sign) {
        double lo = 0.0, hi = sign * 2.5;
        if (lambda_at(hi) >= -1e-12) return hi;  // whole bracket feasible (cannot happen for dir != 0)
        for (int i = 0; i < 80; ++i) {
            const double mid = (lo + hi) / 2.0;
            if (lambda_at(mid) >= -1e-12)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    };
    return {boundary(-1.0), boundary(+1.0)};
}

namespace {

// Minimum-Frobenius-norm point of the affine slice (for a qubit this is the
// minimum-Bloch-radius, i.e. maximum-entropy, point).
std::vector<double> frobenius_minimizer(const FixedPointSet& set) {
    std::vector<double> t(set.directions.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        t[k] = -herm_inner(set.directions[k], set.particular.mat());
    return t;
}

std::vector<double> entropy_ascent(const FixedPointSet& set, std::vector<double> t) {
    // Projected gradient ascent with step halving; dS/dt_k = -Tr(D_k ln rho).
    auto entropy = [](const CMatrix& rho) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
        double s = 0.0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double p = es.eigenvalues()(i);
            if (p > 1e-14) s -= p * std::log(p);
        }
        return s;
    };
    double step = 0.5;
    for (int iter = 0; iter < 5000; ++iter) {
        const CMatrix rho = affine_point(set, t);
        const CMatrix logr = clamped_log(rho);
        std::vector<double> grad(t.size());
        double gnorm = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            grad[k] = -(set.directions[k] * logr).trace().real();
            gnorm += grad[k] * grad[k];
        }
        if (std::sqrt(gnorm) < 1e-10) break;
        const double s0 = entropy(rho);
        bool moved = false;
        while (step > 1e-14) {
            std::vector<double> trial = t;
            for (std::size_t k = 0; k < t.size(); ++k) trial[k] += step * grad[k];
            const CMatrix rt = affine_point(set, trial);
            if (min_eigenvalue(rt) >= -1e-12 && entropy(rt) > s0) {
                t = trial;
                moved = true;
                break;
            }
            step /= 2.0;
        }
        if (!moved) break;
    }
    return t;
}

}  // namespace

DensityMatrix select(const FixedPointSet& set, const SelectionRule& rule) {
    std::vector<double> t(set.directions.size(), 0.0);
    switch (rule.kind) {
        case SelectionRule::Kind::GivenParameter:
            if (rule.parameters.size() != t.size())
                throw ValidationError("select: expected " + std::to_string(t.size()) +
                                      " parameters, got " +
                                      std::to_string(rule.parameters.size()));
            t = rule.parameters;
            break;
        case SelectionRule::Kind::MaxEntropy:
        case SelectionRule::Kind::MinBlochNorm: {
            if (t.empty()) return set.particular;
            t = frobenius_minimizer(set);
            if (min_eigenvalue(affine_point(set, t)) < -1e-10) {
                // The norm minimizer can leave the PSD cone for d > 2; walk
                // the entropy ascent from the feasible particular instead.
                t.assign(t.size(), 0.0);
                t = entropy_ascent(set, t);
            } else if (rule.kind == SelectionRule::Kind::MaxEntropy && set.d > 2) {
                t = entropy_ascent(set, t);
            }
            break;
        }
    }
    CMatrix rho = affine_point(set, t);
    const double lambda = min_eigenvalue(rho);
    if (lambda < -1e-10)
        throw InfeasibleError("select: requested point has negative eigenvalue " +
                              std::to_string(lambda));
    rho = (rho + CMatrix(rho.adjoint())) / 2.0;
    return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix iterate_channel_fixed_point(const InteractionUnitary& u,
                                          const DensityMatrix& rho_cr,
                                          const DensityMatrix& sigma0, int n_steps) {
    if (n_steps < 1) throw ValidationError("iterate_channel_fixed_point: n_steps must be >= 1");
    CMatrix sigma = sigma0.mat();
    // Burn-in kills the transient geometrically before the Cesàro average
    // starts; the average then handles peripheral spectrum.
    for (int k = 0; k < n_steps; ++k)
        sigma = apply_ctc_channel(u, rho_cr, DensityMatrix::trusted(sigma)).mat();
    CMatrix acc = CMatrix::Zero(sigma.rows(), sigma.cols());
    for (int k = 0; k < n_steps; ++k) {
        sigma = apply_ctc_channel(u, rho_cr, DensityMatrix::trusted(sigma)).mat();
        acc += sigma;
    }
    CMatrix avg = acc / double(n_steps);
    avg = (avg + CMatrix(avg.adjoint())) / 2.0;

    // Nearest density matrix: project the eigenvalues onto the simplex.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(avg);
    const Eigen::VectorXd p = simplex_project(es.eigenvalues());
    CMatrix rho =
        es.eigenvectors() * p.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    return DensityMatrix::trusted(std::move(rho));
}

FixedPointSet solve_fixed_point_set(const Superoperator& m, const Tolerances& tol) {
    const auto raw = fixed_subspace(m, tol);
    const auto basis = hermitian_fixed_basis(raw, m.d_ctc, tol.nullspace);
    return density_solutions(basis, tol.nullspace);
}

}  // namespace ctc
