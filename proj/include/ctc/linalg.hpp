#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Thrown when an input fails a structural precondition (dimensions,
// normalization, hermiticity, unitarity, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical kernel fails (non-convergence, empty fixed
// subspace, no PSD element in a fixed span).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a user-supplied selection parameter leaves the feasible set.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double eig = 1e-10;        // relative eigenvalue accuracy
    double herm = 1e-10;       // hermiticity, relative to ||h||
    double nullspace = 1e-9;   // singular value threshold, relative to sigma_max
};

inline constexpr int kMaxDim = 64;

// Eigenvalues sorted by descending modulus, ties broken by descending real
// part then descending imaginary part. multiplicity[i] is the size of the
// numerical cluster containing values[i].
struct Spectrum {
    std::vector<Complex> values;
    std::vector<int> multiplicity;
};

enum class Keep { First, Second };

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Reduced matrix of a bipartite operator on C^{dim_first} ⊗ C^{dim_second}.
CMatrix partial_trace(const CMatrix& rho, int dim_first, int dim_second, Keep keep);

// Row-major vectorization: vec([[a,b],[c,d]]) = (a,b,c,d)^T, so that
// vec(A rho B†) = kron(A, conj(B)) vec(rho).
CVector vec_rowmajor(const CMatrix& rho);
CMatrix unvec_rowmajor(const CVector& v, int d);

// Full complex spectrum of a (generally non-normal) square matrix.
Spectrum eigenvalues(const CMatrix& m, const Tolerances& tol = {});

// Orthonormal basis of the numerical nullspace: vectors v with
// ||m v|| <= tol * ||m||. Empty result is valid.
std::vector<CVector> nullspace(const CMatrix& m, double tol);

struct HermEigensystem {
    Eigen::VectorXd values;  // ascending
    CMatrix vectors;         // columns, orthonormal
};

HermEigensystem hermitian_eigensystem(const CMatrix& h, const Tolerances& tol = {});

double min_eigenvalue(const CMatrix& h);

inline double frobenius(const CMatrix& m) { return m.norm(); }

}  // namespace ctc
