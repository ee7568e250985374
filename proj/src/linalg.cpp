#include "pidlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pidlab/errors.hpp"

namespace pidlab {

Matrix matrix_exponential(const Matrix& a, double t) {
    if (!a.square()) {
        throw InvalidInputError("matrix_exponential: matrix must be square");
    }
    if (!std::isfinite(t) || !a.all_finite()) {
        throw InvalidInputError("matrix_exponential: non-finite input");
    }
    const std::size_t n = a.rows();

    Matrix at = a;
    at *= t;

    // Scale so the Taylor argument has norm <= 1/2, expand to a fixed
    // order (truncation below 1e-19 at that norm), then square back up.
    const double norm = inf_norm(at);
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        at *= std::ldexp(1.0, -squarings);
    }

    constexpr int kOrder = 16;
    Matrix result = Matrix::identity(n);
    // Horner evaluation: I + B(I + B/2 (I + B/3 (...)))
    for (int k = kOrder; k >= 1; --k) {
        result = Matrix::identity(n) + (at * result) * (1.0 / k);
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

namespace {

// LU with partial pivoting, in place. Returns the pivot rows.
std::vector<std::size_t> lu_factor(Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> pivots(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::fabs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0 || !std::isfinite(best)) {
            throw NumericalFailureError("lu_factor: singular pivot at column " +
                                        std::to_string(k));
        }
        pivots[k] = p;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a(i, k) /= a(k, k);
            const double m = a(i, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    return pivots;
}

Matrix lu_solve(const Matrix& lu, const std::vector<std::size_t>& pivots, Matrix b) {
    const std::size_t n = lu.rows();
    const std::size_t m = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        if (pivots[k] != k) {
            for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(pivots[k], j));
        }
    }
    // Ly = Pb
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            const double l = lu(i, k);
            for (std::size_t j = 0; j < m; ++j) b(i, j) -= l * b(k, j);
        }
    }
    // Ux = y
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) {
            const double u = lu(ii, k);
            for (std::size_t j = 0; j < m; ++j) b(ii, j) -= u * b(k, j);
        }
        const double d = lu(ii, ii);
        for (std::size_t j = 0; j < m; ++j) b(ii, j) /= d;
    }
    return b;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b) {
    if (!a.square()) {
        throw InvalidInputError("solve: coefficient matrix must be square");
    }
    if (a.rows() != b.rows()) {
        throw InvalidInputError("solve: right-hand side row count mismatch");
    }
    Matrix lu = a;
    const auto pivots = lu_factor(lu);
    return lu_solve(lu, pivots, b);
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

std::vector<double> singular_values(const Matrix& a) {
    if (a.empty() || !a.all_finite()) {
        throw InvalidInputError("singular_values: empty or non-finite input");
    }
    // Work on the orientation with fewer columns.
    Matrix w = a.rows() >= a.cols() ? a : a.transposed();
    const std::size_t m = w.rows();
    const std::size_t n = w.cols();

    // One-sided Jacobi: rotate column pairs until all are orthogonal.
    constexpr int kMaxSweeps = 60;
    const double tol = 1e-15;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    app += w(i, p) * w(i, p);
                    aqq += w(i, q) * w(i, q);
                    apq += w(i, p) * w(i, q);
                }
                if (std::fabs(apq) <= tol * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, tau) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double wp = w(i, p);
                    const double wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += w(i, j) * w(i, j);
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

}  // namespace pidlab
