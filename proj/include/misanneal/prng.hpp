#ifndef MISANNEAL_PRNG_HPP
#define MISANNEAL_PRNG_HPP

#include <cmath>
#include <cstdint>

namespace misanneal {

// Deterministic random numbers used by the graph generators and the ensemble
// driver.  Everything downstream (generated graphs, derived member seeds,
// Lanczos start vectors) is a pure function of the seeds passed in, so runs
// are bit-reproducible across platforms.  The exact algorithms and draw
// orders are part of the output contract:
//
//   splitmix64   state' = state + 0x9E3779B97F4A7C15
//                z = state'; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
//                z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31
//   xoshiro256** seeded with the first four splitmix64 outputs
//   uniform01    (next() >> 11) * 2^-53, in [0, 1)
//   below(k)     rejection sampling: draw r until r < floor(2^64/k)*k,
//                return r % k  (unbiased)

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// The i-th output (0-based) of a splitmix64 stream seeded with `master`.
// Used to derive independent member seeds for ensemble runs.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t i) {
    std::uint64_t z = master + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, k), unbiased via rejection.  k >= 1.
    std::uint64_t below(std::uint64_t k) {
        const std::uint64_t limit = (~std::uint64_t{0} / k) * k;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % k;
    }

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace misanneal

#endif
