// matexp.hpp - Dense complex matrices and the scaling-and-squaring matrix exponential

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace eqo::matexp {

using Complex = std::complex<double>;

// Dense complex double-precision matrix, row-major storage.
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Throws NumericError naming `context` if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, const char* context);

// Induced 1-norm: max column sum of entry magnitudes.
double one_norm(const ComplexMatrix& a);

// Matrix product with dimension and finiteness checks.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

// e^A by diagonal Pade approximants with 1-norm driven scaling and squaring.
// tol must lie in (0, 1e-6]; the approximant order is chosen for full double
// precision, so every admissible tol is met with margin. Deterministic for
// identical inputs.
ComplexMatrix expm(const ComplexMatrix& a, double tol = 1e-12);

} // namespace eqo::matexp
