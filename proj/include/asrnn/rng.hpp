#pragma once

#include <cstdint>

#include "asrnn/matrix.hpp"

namespace asrnn {

// xoshiro256++ seeded via SplitMix64, Gaussians via Box-Muller. The whole
// chain is fixed and platform-independent: identical seeds give identical
// streams everywhere. Substreams for per-sample noise are derived as
// SeededRng(seed ^ index) per the dataset conventions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64();
    // Uniform in [0, 1), 53-bit resolution.
    double next_unit();
    // Standard normal; Box-Muller, the second variate of each pair is cached.
    double next_gaussian();
    // Uniform integer in [0, bound) via 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t bound);

    SeededRng substream(std::uint64_t index) const { return SeededRng(seed_ ^ index); }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

// Distinct deterministic stream for a (base, tag) pair; used where a module
// needs several independent streams from one configured seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

// rows x cols matrix of i.i.d. N(mean, std^2) draws, row-major draw order.
Matrix seeded_gaussian(std::size_t rows, std::size_t cols, double mean, double std,
                       SeededRng& rng);

}  // namespace asrnn
