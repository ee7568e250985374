#pragma once

#include <complex>
#include <vector>

#include "pidlab/matrix.hpp"

namespace pidlab {

/// exp(a*t) by scaling-and-squaring on a fixed-order truncated Taylor series.
/// Target relative accuracy 1e-10 for well-conditioned inputs.
Matrix matrix_exponential(const Matrix& a, double t);

/// Solve a*x = b by LU with partial pivoting; b may have several columns.
/// Throws NumericalFailureError on a (numerically) singular pivot.
Matrix solve(const Matrix& a, const Matrix& b);

/// Explicit dense inverse via LU solves against the identity.
Matrix inverse(const Matrix& a);

/// Singular values in descending order, by one-sided Jacobi. Accurate for
/// small singular values, which the rank diagnostics rely on.
std::vector<double> singular_values(const Matrix& a);

/// Full complex spectrum with multiplicity plus the largest real part.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    double spectral_abscissa = 0.0;
};

/// Eigenvalues of a general square matrix: Householder reduction to upper
/// Hessenberg followed by Francis double-shift QR. Eigenvalues only; no
/// Schur vectors, no Jordan chains. Throws NumericalFailureError if the
/// sweep cap (100 * N) is exceeded.
Spectrum eigenvalues(const Matrix& a);

}  // namespace pidlab
