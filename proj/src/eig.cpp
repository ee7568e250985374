#include <cmath>
#include <string>
#include <vector>

#include "pidlab/errors.hpp"
#include "pidlab/linalg.hpp"

// Eigenvalues of a general real matrix: Householder reduction to upper
// Hessenberg form, then Francis double-shift QR iteration. This follows the
// Algol procedures orthes/hqr (Martin and Wilkinson, Handbook for Automatic
// Computation, Vol. II) in their eigenvalue-only form: no Schur vectors are
// accumulated and deflated blocks are simply read off.

namespace pidlab {

namespace {

void hessenberg_reduce(Matrix& h) {
    const std::size_t nn = h.rows();
    if (nn < 3) return;
    std::vector<double> ort(nn, 0.0);
    const std::size_t high = nn - 1;

    for (std::size_t m = 1; m <= high - 1; ++m) {
        double scale = 0.0;
        for (std::size_t i = m; i <= high; ++i) scale += std::fabs(h(i, m - 1));
        if (scale == 0.0) continue;

        double hsum = 0.0;
        for (std::size_t i = high + 1; i-- > m;) {
            ort[i] = h(i, m - 1) / scale;
            hsum += ort[i] * ort[i];
        }
        double g = std::sqrt(hsum);
        if (ort[m] > 0) g = -g;
        hsum -= ort[m] * g;
        ort[m] -= g;

        // Householder similarity H <- (I - u u^T / hsum) H (I - u u^T / hsum)
        for (std::size_t j = m; j < nn; ++j) {
            double f = 0.0;
            for (std::size_t i = high + 1; i-- > m;) f += ort[i] * h(i, j);
            f /= hsum;
            for (std::size_t i = m; i <= high; ++i) h(i, j) -= f * ort[i];
        }
        for (std::size_t i = 0; i <= high; ++i) {
            double f = 0.0;
            for (std::size_t j = high + 1; j-- > m;) f += ort[j] * h(i, j);
            f /= hsum;
            for (std::size_t j = m; j <= high; ++j) h(i, j) -= f * ort[j];
        }
        h(m, m - 1) = scale * g;
    }

    // Clear the Householder remnants below the subdiagonal.
    for (std::size_t i = 2; i < nn; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix; fills the real and
// imaginary eigenvalue parts. Throws when the sweep cap is exceeded.
void hqr_eigenvalues(Matrix& h, std::vector<double>& d, std::vector<double>& e,
                     long sweep_cap) {
    const long nn = static_cast<long>(h.rows());
    long n = nn - 1;
    const double eps = std::ldexp(1.0, -52);
    double exshift = 0.0;
    double p = 0, q = 0, r = 0, s = 0, z = 0, w = 0, x = 0, y = 0;

    double norm = 0.0;
    for (long i = 0; i < nn; ++i)
        for (long j = std::max(i - 1, 0L); j < nn; ++j) norm += std::fabs(h(i, j));

    long iter = 0;
    long total_sweeps = 0;
    while (n >= 0) {
        // Look for a single small subdiagonal element.
        long l = n;
        while (l > 0) {
            s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
            if (s == 0.0) s = norm;
            if (std::fabs(h(l, l - 1)) < eps * s) break;
            --l;
        }

        if (l == n) {
            // One root found.
            d[n] = h(n, n) + exshift;
            e[n] = 0.0;
            --n;
            iter = 0;
        } else if (l == n - 1) {
            // Two roots found.
            w = h(n, n - 1) * h(n - 1, n);
            p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
            q = p * p + w;
            z = std::sqrt(std::fabs(q));
            x = h(n, n) + exshift;
            if (q >= 0) {
                z = (p >= 0) ? p + z : p - z;
                d[n - 1] = x + z;
                d[n] = (z != 0.0) ? x - w / z : d[n - 1];
                e[n - 1] = 0.0;
                e[n] = 0.0;
            } else {
                d[n - 1] = x + p;
                d[n] = x + p;
                e[n - 1] = z;
                e[n] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // Form the implicit double shift.
            x = h(n, n);
            y = h(n - 1, n - 1);
            w = h(n, n - 1) * h(n - 1, n);

            if (iter == 10 || iter == 20) {
                // Exceptional shift.
                exshift += x;
                for (long i = 0; i <= n; ++i) h(i, i) -= x;
                s = std::fabs(h(n, n - 1)) + std::fabs(h(n - 1, n - 2));
                x = y = 0.75 * s;
                w = -0.4375 * s * s;
            }

            ++iter;
            if (++total_sweeps > sweep_cap) {
                throw NumericalFailureError(
                    "eigenvalues: QR iteration cap exceeded after " +
                    std::to_string(total_sweeps - 1) + " sweeps");
            }

            // Look for two consecutive small subdiagonal elements.
            long m = n - 2;
            while (m >= l) {
                z = h(m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - r - s;
                r = h(m + 2, m + 1);
                s = std::fabs(p) + std::fabs(q) + std::fabs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                if (std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r)) <
                    eps * (std::fabs(p) *
                           (std::fabs(h(m - 1, m - 1)) + std::fabs(z) +
                            std::fabs(h(m + 1, m + 1))))) {
                    break;
                }
                --m;
            }
            for (long i = m + 2; i <= n; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // Double QR sweep on rows l..n, columns m..n.
            for (long k = m; k <= n - 1; ++k) {
                const bool notlast = (k != n - 1);
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                    if (x == 0.0) continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
                if (s == 0.0) continue;
                if (k != m) {
                    h(k, k - 1) = -s * x;
                } else if (l != m) {
                    h(k, k - 1) = -h(k, k - 1);
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for (long j = k; j <= n; ++j) {
                    p = h(k, j) + q * h(k + 1, j);
                    if (notlast) {
                        p += r * h(k + 2, j);
                        h(k + 2, j) -= p * z;
                    }
                    h(k, j) -= p * x;
                    h(k + 1, j) -= p * y;
                }
                for (long i = l; i <= std::min(n, k + 3); ++i) {
                    p = x * h(i, k) + y * h(i, k + 1);
                    if (notlast) {
                        p += z * h(i, k + 2);
                        h(i, k + 2) -= p * r;
                    }
                    h(i, k) -= p;
                    h(i, k + 1) -= p * q;
                }
            }
        }
    }
}

}  // namespace

Spectrum eigenvalues(const Matrix& a) {
    if (!a.square()) {
        throw InvalidInputError("eigenvalues: matrix must be square");
    }
    if (a.rows() > 256) {
        throw InvalidInputError("eigenvalues: desk-scale solver, N <= 256 required");
    }
    if (!a.all_finite()) {
        throw InvalidInputError("eigenvalues: non-finite input");
    }
    const std::size_t n = a.rows();

    Spectrum spec;
    if (n == 1) {
        spec.eigenvalues = {std::complex<double>(a(0, 0), 0.0)};
        spec.spectral_abscissa = a(0, 0);
        return spec;
    }

    Matrix h = a;
    hessenberg_reduce(h);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    hqr_eigenvalues(h, d, e, 100L * static_cast<long>(n));

    spec.eigenvalues.reserve(n);
    double abscissa = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        spec.eigenvalues.emplace_back(d[i], e[i]);
        abscissa = std::max(abscissa, d[i]);
    }
    spec.spectral_abscissa = abscissa;
    return spec;
}

}  // namespace pidlab
