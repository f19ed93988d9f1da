#pragma once

#include <cstddef>
#include <vector>

#include "asrnn/matrix.hpp"

namespace asrnn {

// Strict upper triangle of the hidden transition matrix, row-major:
// (0,1),(0,2),...,(0,n-1),(1,2),... The expanded matrix U - U^T is
// antisymmetric by construction, so its eigenvalues are purely imaginary.
struct AntisymmetricParam {
    std::size_t n = 0;
    std::vector<double> upper;

    static std::size_t upper_size(std::size_t n) { return n * (n - 1) / 2; }
    // Flat index of entry (i, j), requires i < j.
    std::size_t index(std::size_t i, std::size_t j) const {
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
};

// M = U - U^T; antisymmetric with zero diagonal, exact by construction.
Matrix expand_antisymmetric(const AntisymmetricParam& p);

// Eigenvalues sorted by (modulus desc, re desc, im desc) so comparisons are
// deterministic. `converged == false` flags partial results after the QR
// sweep budget is exhausted.
struct ComplexSpectrum {
    std::vector<Complex> values;
    std::size_t source_dim = 0;
    bool converged = true;
};

struct SpectrumStats {
    double mean_modulus = 0.0;
    double std_modulus = 0.0;  // population std
};

// General real eigensolver: balancing, Householder Hessenberg reduction,
// Francis double-shift QR with 1x1/2x2 deflation. Subdiagonal deflation at
// 1e-12 relative; gives up (converged=false) after 100*n sweeps.
ComplexSpectrum eigenvalues(const Matrix& m);

// Executable form of the D*W proposition: true iff every eigenvalue of
// diag(d) * expand(w) has |Re| <= tol * (1 + max modulus). D must be
// invertible (all d_diag nonzero).
bool verify_dw_imaginary(const std::vector<double>& d_diag, const AntisymmetricParam& w,
                         double tol);

// Mean and population std of the eigenvalue moduli.
SpectrumStats spectral_stats(const ComplexSpectrum& s);

}  // namespace asrnn
