#pragma once

// Shared test oracles. Everything here is independent of the library's
// computation paths: polynomial root finding, LU determinants and planted
// orthogonal similarity transforms are used to cross-check the eigensolver
// and gradient code, not to implement them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "asrnn/matrix.hpp"
#include "asrnn/rng.hpp"

namespace testutil {

using asrnn::Complex;
using asrnn::Matrix;

inline double rel_err(double a, double b) {
    return std::fabs(a - b) / std::max(1e-8, std::fabs(a) + std::fabs(b));
}

inline double max_rel_err(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, rel_err(a.data()[i], b.data()[i]));
    return worst;
}

// Roots of a monic polynomial z^d + c[d-1] z^{d-1} + ... + c[0] by
// Durand-Kerner iteration. Plenty for the degree <= 3 cross-checks.
inline std::vector<Complex> poly_roots(const std::vector<double>& coeffs) {
    const std::size_t d = coeffs.size();
    auto eval = [&](Complex z) {
        Complex acc(1.0, 0.0);
        for (std::size_t k = d; k-- > 0;) acc = acc * z + coeffs[k];
        return acc;
    };
    std::vector<Complex> roots(d);
    for (std::size_t i = 0; i < d; ++i)
        roots[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i + 1));
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            Complex denom(1.0, 0.0);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const Complex delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return roots;
}

// Monic characteristic polynomial coefficients (low order first) for n <= 3.
inline std::vector<double> char_poly(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return {-m(0, 0)};
    if (n == 2) {
        const double tr = m(0, 0) + m(1, 1);
        const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return {det, -tr};
    }
    const double tr = m(0, 0) + m(1, 1) + m(2, 2);
    double minors = 0.0;
    minors += m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    minors += m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    minors += m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return {-det, minors, -tr};
}

// Determinant via LU with partial pivoting.
inline double lu_det(Matrix a) {
    const std::size_t n = a.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

// Solve A x = b via Gaussian elimination with partial pivoting.
inline std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
        x[k] = acc / a(k, k);
    }
    return x;
}

// Orthogonal Q from the Householder QR of a Gaussian matrix.
inline Matrix random_orthogonal(std::size_t n, asrnn::SeededRng& rng) {
    Matrix a = asrnn::seeded_gaussian(n, n, 0.0, 1.0, rng);
    Matrix q = Matrix::identity(n);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            v[i] = a(i, k);
            norm2 += v[i] * v[i];
        }
        const double alpha = -std::copysign(std::sqrt(norm2), v[k]);
        v[k] -= alpha;
        double vv = 0.0;
        for (std::size_t i = k; i < n; ++i) vv += v[i] * v[i];
        if (vv == 0.0) continue;
        const double beta = 2.0 / vv;
        for (std::size_t j = 0; j < n; ++j) {  // apply to remaining A columns
            double w = 0.0;
            for (std::size_t i = k; i < n; ++i) w += v[i] * a(i, j);
            w *= beta;
            for (std::size_t i = k; i < n; ++i) a(i, j) -= w * v[i];
        }
        for (std::size_t j = 0; j < n; ++j) {  // accumulate Q
            double w = 0.0;
            for (std::size_t i = k; i < n; ++i) w += v[i] * q(i, j);
            w *= beta;
            for (std::size_t i = k; i < n; ++i) q(i, j) -= w * v[i];
        }
    }
    return asrnn::transpose(q);  // q currently holds Q^T
}

}  // namespace testutil
