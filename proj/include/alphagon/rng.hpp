#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace alphagon {

// Stream mixer used for seeding and for deriving independent substreams.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Deterministic across platforms: the engine is fully specified by the
// standard and all variate mappings below are hand-rolled (the stdlib
// distribution templates are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(SplitMix64(seed).next()) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in [lo, hi] via multiply-shift.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        auto wide = static_cast<unsigned __int128>(next_u64()) * range;
        return lo + static_cast<std::int64_t>(wide >> 64);
    }

    // Standard normal via Box-Muller (polar form avoided to keep the
    // consumption pattern fixed: exactly two draws per call).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0x1.0p-60) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace alphagon
