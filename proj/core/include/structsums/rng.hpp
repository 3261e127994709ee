#pragma once

#include <cstdint>
#include <cmath>

namespace structsums {

/// Seedable, portable pseudorandom generator (xoshiro256++ seeded via
/// splitmix64). All randomness in the generators and experiments flows
/// through this class in a documented order, so a (spec, seed) pair replays
/// exactly on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        // splitmix64 expansion of the 64-bit seed into the 256-bit state.
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            s = z ^ (z >> 31);
        }
    }

    /// Next raw 64-bit word (xoshiro256++).
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // Lemire rejection-free-ish reduction with a widening multiply;
        // rejection keeps it exactly uniform.
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Standard normal deviate (Box-Muller; the second value is discarded to
    /// keep the draw order a simple function of the stream).
    double normal01() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Standard normal truncated to [-3, 3] by rejection.
    double truncated_normal3() {
        double z = normal01();
        while (z < -3.0 || z > 3.0) z = normal01();
        return z;
    }

    /// Derive an independent stream for a sub-task (sample index, repeat
    /// index, ...). Pure function of (seed, index); documented so pipelines
    /// replay even when sub-tasks run in parallel.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

/// Step-length laws of the random-walk protocol, all valued in [0, 1].
enum class StepLaw { Z1, Z2, Z3 };

/// Draw one realization of the given step law.
///   Z1: uniform on [0, 1)
///   Z2: Zn/6 + 1/2 where Zn is standard normal truncated to [-3, 3]
///   Z3: frac(Zn/6 + 1)
inline double draw_step(Rng& rng, StepLaw law) {
    switch (law) {
    case StepLaw::Z1: return rng.uniform01();
    case StepLaw::Z2: return rng.truncated_normal3() / 6.0 + 0.5;
    case StepLaw::Z3: {
        const double x = rng.truncated_normal3() / 6.0 + 1.0;
        return x - std::floor(x);
    }
    }
    return 0.0; // unreachable
}

} // namespace structsums
