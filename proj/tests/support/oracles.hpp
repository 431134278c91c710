#ifndef MISANNEAL_TESTS_ORACLES_HPP
#define MISANNEAL_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// Deliberately written from the algorithm definitions, not by calling into
// the code under test: the PRNG is a from-scratch transcription, independence
// checks scan the raw edge list, and the reference propagator is a classical
// RK4 on the same matrix the finite-difference oracle validates elsewhere.

#include <complex>
#include <cstdint>
#include <vector>

#include "misanneal/basis.hpp"
#include "misanneal/dynamics.hpp"
#include "misanneal/gauge.hpp"
#include "misanneal/graph.hpp"

namespace oracle {

// ---- PRNG reference ------------------------------------------------------

inline std::uint64_t sm64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct RefSplitMix {
    std::uint64_t s;
    std::uint64_t operator()() { return sm64_mix(s += 0x9E3779B97F4A7C15ULL); }
};

struct RefXoshiro {
    std::uint64_t st[4];

    explicit RefXoshiro(std::uint64_t seed) {
        RefSplitMix sm{seed};
        for (auto& w : st) w = sm();
    }

    static std::uint64_t rl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t operator()() {
        const std::uint64_t out = rl(st[1] * 5, 7) * 9;
        const std::uint64_t t = st[1] << 17;
        st[2] ^= st[0];
        st[3] ^= st[1];
        st[1] ^= st[2];
        st[0] ^= st[3];
        st[2] ^= t;
        st[3] = rl(st[3], 45);
        return out;
    }
};

// ---- Set / graph references ---------------------------------------------

// Independence tested against the raw edge list, not adjacency masks.
inline bool independent_by_edges(const misanneal::Graph& g, std::uint64_t mask) {
    for (const auto& [u, v] : g.edges())
        if (((mask >> u) & 1ULL) && ((mask >> v) & 1ULL)) return false;
    return true;
}

// Every independent set by brute subset enumeration (n <= 20).
inline std::vector<std::uint64_t> all_independent_sets(const misanneal::Graph& g) {
    std::vector<std::uint64_t> out;
    const int n = g.num_vertices();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
        if (independent_by_edges(g, mask)) out.push_back(mask);
    return out;
}

inline int popcount64(std::uint64_t x) {
    int c = 0;
    for (; x; x &= x - 1) ++c;
    return c;
}

struct BruteMis {
    int alpha = 0;
    std::uint64_t count = 0;
};

inline BruteMis brute_mis(const misanneal::Graph& g) {
    BruteMis res;
    for (const auto mask : all_independent_sets(g)) {
        const int size = popcount64(mask);
        if (size > res.alpha) {
            res.alpha = size;
            res.count = 1;
        } else if (size == res.alpha) {
            ++res.count;
        }
    }
    return res;
}

// ---- Reference propagator ------------------------------------------------

// Classical RK4 on d psi / dt = i A(theta(t)) psi with uniform steps.  A
// completely different discretization from the production integrator; the
// matrix itself is validated against the finite-difference Berry connection.
inline misanneal::VectorC rk4_reference(const misanneal::IsBasis& basis,
                                        const misanneal::Schedule& sched,
                                        misanneal::VectorC psi, long steps) {
    using misanneal::VectorC;
    const double h = sched.duration() / static_cast<double>(steps);
    const std::complex<double> iu(0, 1);
    auto deriv = [&](double t, const VectorC& y) {
        const misanneal::GaugeMatrix a = misanneal::assemble_gauge(
            basis, {sched.theta_at(t), sched.omega_phi, sched.omega_theta});
        return VectorC(iu * a.apply(y));
    };
    for (long k = 0; k < steps; ++k) {
        const double t = k * h;
        const VectorC k1 = deriv(t, psi);
        const VectorC k2 = deriv(t + h / 2, psi + (h / 2) * k1);
        const VectorC k3 = deriv(t + h / 2, psi + (h / 2) * k2);
        const VectorC k4 = deriv(t + h, psi + h * k3);
        psi += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return psi;
}

}  // namespace oracle

#endif
