#include "ctc/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace ctc {

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.mat(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-14) s -= p * std::log(p);
    }
    return std::max(s, 0.0);
}

double purity(const DensityMatrix& rho) {
    return (rho.mat() * rho.mat()).trace().real();
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw ValidationError("concurrence: defined for two-qubit states only");
    CMatrix yy = CMatrix::Zero(4, 4);  // sigma_y ⊗ sigma_y
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const CMatrix r = rho.mat() * yy * rho.mat().conjugate() * yy;
    Eigen::ComplexEigenSolver<CMatrix> es(r, false);
    std::vector<double> lam(4);
    for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(es.eigenvalues()(i).real(), 0.0));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

bool is_product(const DensityMatrix& rho, double tol) {
    if (rho.dim() != 4) throw ValidationError("is_product: defined for two-qubit states only");
    const CMatrix a = partial_trace(rho.mat(), 2, 2, Keep::First);
    const CMatrix b = partial_trace(rho.mat(), 2, 2, Keep::Second);
    return (rho.mat() - kron(a, b)).norm() <= tol;
}

EntanglementReport entanglement_report(const DensityMatrix& rho, double product_tol) {
    EntanglementReport r;
    r.entropy_nats = von_neumann_entropy(rho);
    r.purity = purity(rho);
    r.product_tol = product_tol;
    if (rho.dim() == 4) {
        r.concurrence = concurrence(rho);
        r.is_product = is_product(rho, product_tol);
    }
    return r;
}

}  // namespace ctc
