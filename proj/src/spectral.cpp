#include "asrnn/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace asrnn {

namespace {

constexpr double kDeflationTol = 1e-12;

// Parlett-Reinsch balancing (scaling only, radix 2). Similarity transform,
// leaves eigenvalues unchanged while equalizing row/column norms.
void balance(Matrix& a) {
    const std::size_t n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::fabs(a(j, i));
                r += std::fabs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / 2.0;
            while (c < g) {
                f *= 2.0;
                c *= 4.0;
            }
            g = r * 2.0;
            while (c > g) {
                f /= 2.0;
                c /= 4.0;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double g_inv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) a(i, j) *= g_inv;
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form, in place. Eigenvalues
// only, so the orthogonal factor is not accumulated.
void hessenberg(Matrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) scale += std::fabs(a(i, k));
        if (scale == 0.0) continue;
        double sigma2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            sigma2 += v[i] * v[i];
        }
        const double x0 = v[k + 1];
        const double alpha = -std::copysign(std::sqrt(sigma2), x0);
        v[k + 1] -= alpha;
        double vv = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vv += v[i] * v[i];
        if (vv == 0.0) continue;
        const double beta = 2.0 / vv;
        // Left: A <- (I - beta v v^T) A on rows k+1..n-1, columns k..n-1.
        for (std::size_t j = k; j < n; ++j) {
            double w = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) w += v[i] * a(i, j);
            w *= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= w * v[i];
        }
        // Right: A <- A (I - beta v v^T) on columns k+1..n-1, all rows.
        for (std::size_t i = 0; i < n; ++i) {
            double w = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) w += a(i, j) * v[j];
            w *= beta;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= w * v[j];
        }
        a(k + 1, k) = alpha * scale;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

// Francis implicit double-shift QR with 1x1/2x2 deflation on an upper
// Hessenberg matrix. Returns eigenvalues; clears `converged` if the total
// sweep budget is exhausted (remaining entries filled from the diagonal).
std::vector<Complex> francis_qr(Matrix& a, std::size_t max_sweeps, bool& converged) {
    const int n = static_cast<int>(a.rows());
    std::vector<Complex> eig(n);
    converged = true;
    if (n == 0) return eig;

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::fabs(a(i, j));
    if (anorm == 0.0) anorm = 1.0;

    double t_shift = 0.0;
    std::size_t sweeps = 0;
    int en = n - 1;
    while (en >= 0) {
        int its = 0;
        for (;;) {
            // Smallest l with negligible subdiagonal a(l, l-1).
            int l = 0;
            for (int i = en; i >= 1; --i) {
                double s = std::fabs(a(i - 1, i - 1)) + std::fabs(a(i, i));
                if (s == 0.0) s = anorm;
                if (std::fabs(a(i, i - 1)) <= kDeflationTol * s) {
                    a(i, i - 1) = 0.0;
                    l = i;
                    break;
                }
            }
            double x = a(en, en);
            if (l == en) {  // single real eigenvalue
                eig[en] = Complex(x + t_shift, 0.0);
                --en;
                break;
            }
            double y = a(en - 1, en - 1);
            double w = a(en, en - 1) * a(en - 1, en);
            if (l == en - 1) {  // 2x2 block: real pair or conjugate pair
                double p = 0.5 * (y - x);
                double q = p * p + w;
                double z = std::sqrt(std::fabs(q));
                x += t_shift;
                if (q >= 0.0) {
                    z = p + std::copysign(z, p);
                    eig[en - 1] = Complex(x + z, 0.0);
                    eig[en] = (z != 0.0) ? Complex(x - w / z, 0.0) : Complex(x + z, 0.0);
                } else {
                    eig[en - 1] = Complex(x + p, z);
                    eig[en] = Complex(x + p, -z);
                }
                en -= 2;
                break;
            }
            if (sweeps >= max_sweeps) {
                converged = false;
                for (int i = 0; i <= en; ++i) eig[i] = Complex(a(i, i) + t_shift, 0.0);
                return eig;
            }
            if (its != 0 && its % 10 == 0) {
                // Exceptional shift to break symmetric limit cycles.
                t_shift += x;
                for (int i = 0; i <= en; ++i) a(i, i) -= x;
                double s = std::fabs(a(en, en - 1)) + std::fabs(a(en - 1, en - 2));
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            ++its;
            ++sweeps;
            // Locate the row m to start the bulge so that the two
            // subdiagonals above it are already small.
            double p = 0.0, q = 0.0, r = 0.0;
            int m;
            for (m = en - 2; m >= l; --m) {
                double z = a(m, m);
                double rr = x - z;
                double ss = y - z;
                p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                q = a(m + 1, m + 1) - z - rr - ss;
                r = a(m + 2, m + 1);
                double scale = std::fabs(p) + std::fabs(q) + std::fabs(r);
                p /= scale;
                q /= scale;
                r /= scale;
                if (m == l) break;
                const double u = std::fabs(a(m, m - 1)) * (std::fabs(q) + std::fabs(r));
                const double v = std::fabs(p) * (std::fabs(a(m - 1, m - 1)) + std::fabs(z) +
                                                 std::fabs(a(m + 1, m + 1)));
                if (u <= 2.22e-16 * v) break;
            }
            for (int i = m + 2; i <= en; ++i) a(i, i - 2) = 0.0;
            for (int i = m + 3; i <= en; ++i) a(i, i - 3) = 0.0;
            // Chase the bulge from row m down to en.
            for (int k = m; k <= en - 1; ++k) {
                const bool notlast = (k != en - 1);
                if (k != m) {
                    p = a(k, k - 1);
                    q = a(k + 1, k - 1);
                    r = notlast ? a(k + 2, k - 1) : 0.0;
                    x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                    if (x == 0.0) continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
                if (k == m) {
                    if (l != m) a(k, k - 1) = -a(k, k - 1);
                } else {
                    a(k, k - 1) = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                double z = r / s;
                q /= p;
                r /= p;
                for (int j = k; j <= en; ++j) {  // row modification
                    double pp = a(k, j) + q * a(k + 1, j);
                    if (notlast) {
                        pp += r * a(k + 2, j);
                        a(k + 2, j) -= pp * z;
                    }
                    a(k + 1, j) -= pp * y;
                    a(k, j) -= pp * x;
                }
                const int i_max = std::min(en, k + 3);
                for (int i = l; i <= i_max; ++i) {  // column modification
                    double pp = x * a(i, k) + y * a(i, k + 1);
                    if (notlast) {
                        pp += z * a(i, k + 2);
                        a(i, k + 2) -= pp * r;
                    }
                    a(i, k + 1) -= pp * q;
                    a(i, k) -= pp;
                }
            }
        }
    }
    return eig;
}

bool spectrum_less(const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

}  // namespace

Matrix expand_antisymmetric(const AntisymmetricParam& p) {
    if (p.upper.size() != AntisymmetricParam::upper_size(p.n)) {
        throw ValidationError("antisymmetric upper storage has wrong length");
    }
    Matrix m(p.n, p.n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = i + 1; j < p.n; ++j, ++idx) {
            m(i, j) = p.upper[idx];
            m(j, i) = -p.upper[idx];
        }
    }
    return m;
}

ComplexSpectrum eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("eigenvalues: matrix must be square");
    if (m.rows() > 1024) throw ValidationError("eigenvalues: n > 1024 not supported");
    ComplexSpectrum spec;
    spec.source_dim = m.rows();
    if (m.rows() == 0) return spec;
    Matrix a = m;
    balance(a);
    hessenberg(a);
    spec.values = francis_qr(a, 100 * m.rows(), spec.converged);
    std::sort(spec.values.begin(), spec.values.end(), spectrum_less);
    return spec;
}

bool verify_dw_imaginary(const std::vector<double>& d_diag, const AntisymmetricParam& w,
                         double tol) {
    if (d_diag.size() != w.n) throw ValidationError("verify_dw_imaginary: size mismatch");
    for (double d : d_diag) {
        if (d == 0.0) throw ValidationError("verify_dw_imaginary: D is not invertible");
    }
    Matrix dw = expand_antisymmetric(w);
    for (std::size_t i = 0; i < w.n; ++i)
        for (std::size_t j = 0; j < w.n; ++j) dw(i, j) *= d_diag[i];
    const ComplexSpectrum spec = eigenvalues(dw);
    if (!spec.converged) throw NumericalError("verify_dw_imaginary: eigensolver did not converge");
    double max_re = 0.0, max_mod = 0.0;
    for (const Complex& v : spec.values) {
        max_re = std::max(max_re, std::fabs(v.real()));
        max_mod = std::max(max_mod, std::abs(v));
    }
    return max_re <= tol * (1.0 + max_mod);
}

SpectrumStats spectral_stats(const ComplexSpectrum& s) {
    if (s.values.empty()) throw ValidationError("spectral_stats: empty spectrum");
    double mean = 0.0;
    for (const Complex& v : s.values) mean += std::abs(v);
    mean /= static_cast<double>(s.values.size());
    double var = 0.0;
    for (const Complex& v : s.values) {
        const double d = std::abs(v) - mean;
        var += d * d;
    }
    var /= static_cast<double>(s.values.size());
    return {mean, std::sqrt(var)};
}

}  // namespace asrnn
