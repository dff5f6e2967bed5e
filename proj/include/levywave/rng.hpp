#pragma once

// Counter-based random streams (Philox4x32-10, Salmon et al. SC 2011).
//
// Every (seed, replicate, substream) triple names an independent stream whose
// output depends only on those three integers, never on draw order elsewhere.
// Replicates and grid cells therefore get disjoint streams that can be
// generated in any order, on any number of threads, with identical results.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace levywave {

namespace detail {

inline constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
inline constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    const std::uint32_t out0 = hi1 ^ ctr[1] ^ key[0];
    const std::uint32_t out1 = lo1;
    const std::uint32_t out2 = hi0 ^ ctr[3] ^ key[1];
    const std::uint32_t out3 = lo0;
    ctr[0] = out0;
    ctr[1] = out1;
    ctr[2] = out2;
    ctr[3] = out3;
}

} // namespace detail

/// One 10-round Philox4x32 block: 4 output words from a 128-bit counter and
/// a 64-bit key.
inline void philox4x32(const std::uint32_t counter[4], const std::uint32_t key[2],
                       std::uint32_t out[4]) {
    std::uint32_t ctr[4] = {counter[0], counter[1], counter[2], counter[3]};
    std::uint32_t k[2] = {key[0], key[1]};
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += detail::kPhiloxW32A;
            k[1] += detail::kPhiloxW32B;
        }
        detail::philox_round(ctr, k);
    }
    out[0] = ctr[0];
    out[1] = ctr[1];
    out[2] = ctr[2];
    out[3] = ctr[3];
}

/// A splittable random stream keyed by (seed, replicate, substream).
///
/// Counter layout: word 0 is the running block index, word 1 the replicate
/// (must fit 32 bits), words 2-3 the substream (e.g. a linear grid-cell
/// index). The key carries the experiment seed, so distinct seeds give
/// unrelated streams.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t replicate, std::uint64_t substream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          base_{0u,
                static_cast<std::uint32_t>(replicate),
                static_cast<std::uint32_t>(substream),
                static_cast<std::uint32_t>(substream >> 32)},
          block_(0), cursor_(4) {}

    std::uint32_t next_u32() {
        if (cursor_ == 4) {
            std::uint32_t ctr[4] = {block_, base_[1], base_[2], base_[3]};
            philox4x32(ctr, key_, buffer_);
            ++block_;
            cursor_ = 0;
        }
        return buffer_[cursor_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return (hi << 32) | lo;
    }

    /// Uniform draw on (0, 1]; safe as a log() argument.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Exponential with the given rate, by inversion.
    double exponential(double rate) {
        return -std::log(uniform()) / rate;
    }

    /// Standard normal via Box-Muller (cosine branch).
    double normal() {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        return r * std::cos(theta);
    }

    /// Poisson count by sequential inversion; means above 25 are split into
    /// independent chunks so the running term never underflows.
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 25.0) {
            total += poisson_small(25.0);
            mean -= 25.0;
        }
        return total + poisson_small(mean);
    }

private:
    std::uint64_t poisson_small(double mean) {
        if (mean <= 0.0) return 0;
        const double u = uniform();
        double term = std::exp(-mean);
        double cdf = term;
        std::uint64_t k = 0;
        while (u > cdf) {
            ++k;
            term *= mean / static_cast<double>(k);
            cdf += term;
            if (k > 2000) break; // cdf saturated at 1 within rounding
        }
        return k;
    }

    std::uint32_t key_[2];
    std::uint32_t base_[4];
    std::uint32_t block_;
    std::uint32_t buffer_[4] = {0, 0, 0, 0};
    int cursor_;
};

} // namespace levywave
