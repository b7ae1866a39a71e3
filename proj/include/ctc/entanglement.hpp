#pragma once

#include "ctc/deutsch.hpp"

#include <optional>

namespace ctc {

struct EntanglementReport {
    double entropy_nats = 0.0;
    double purity = 1.0;
    std::optional<double> concurrence;  // two-qubit states only
    bool is_product = false;
    double product_tol = 1e-9;
};

// -Tr(rho ln rho) in nats; eigenvalues below 1e-14 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

// True iff rho is within tol of the product of its marginals.
bool is_product(const DensityMatrix& rho, double tol = 1e-9);

EntanglementReport entanglement_report(const DensityMatrix& rho, double product_tol = 1e-9);

}  // namespace ctc
