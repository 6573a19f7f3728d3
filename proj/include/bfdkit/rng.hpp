// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace bfdkit {

/// Deterministic generator for the synthetic-scene code. The algorithm is
/// pinned here, not delegated to the standard library, so that scenes can be
/// reproduced bit-for-bit from the seed by any reimplementation:
///
///   state    <- state + 0x9E3779B97F4A7C15 (mod 2^64)
///   z        <- state
///   z        <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2^64)
///   z        <- (z XOR (z >> 27)) * 0x94D049BB133111EB (mod 2^64)
///   output   <- z XOR (z >> 31)
///
/// (the splitmix64 finalizer). Derived draws:
///   unit()        = (output >> 11) * 2^-53, uniform in [0, 1)
///   uniform(a,b)  = a + (b - a) * unit()
///   below(n)      = floor(n * unit())
///   gauss()       = sum of 12 unit() draws minus 6 (Irwin-Hall; avoids
///                   transcendental functions whose rounding varies by libm)
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double unit() noexcept { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * unit(); }

    std::uint64_t below(std::uint64_t n) noexcept { return std::uint64_t(double(n) * unit()); }

    double gauss() noexcept {
        double s = 0.0;
        for (int i = 0; i < 12; ++i)
            s += unit();
        return s - 6.0;
    }

    /// Independent child stream (for per-image seeds off a dataset seed).
    [[nodiscard]] static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept {
        Rng r(seed ^ (0xA24BAED4963EE407ULL * (stream + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace bfdkit
