#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "misanneal/basis.hpp"
#include "misanneal/gauge.hpp"
#include "misanneal/graph.hpp"
#include "misanneal/prng.hpp"
#include "support/oracles.hpp"

using namespace misanneal;

namespace {

// Direct Ising sum over edges with s = +1 for bit 1, -1 for bit 0.
double spin_sum_energy(std::uint64_t config, const Graph& g, double delta) {
    double e = 0.0;
    for (const auto& [u, v] : g.edges()) {
        const double su = ((config >> u) & 1ULL) ? 1.0 : -1.0;
        const double sv = ((config >> v) & 1ULL) ? 1.0 : -1.0;
        e += su + sv + su * sv;
    }
    return delta * e;
}

}  // namespace

TEST_CASE("h0_energy equals the explicit Ising sum") {
    const Graph g = gen_gnp(9, 0.5, 21);
    for (std::uint64_t config = 0; config < (1ULL << 9); ++config) {
        CHECK(h0_energy(config, g, 1.0) == spin_sum_energy(config, g, 1.0));
        CHECK(h0_energy(config, g, 2.5) == spin_sum_energy(config, g, 2.5));
    }
}

TEST_CASE("h0 ground manifold is the independent sets with gap 4*delta") {
    for (const std::uint64_t seed : {31ULL, 32ULL, 33ULL}) {
        const Graph g = gen_gnm(10, 13, seed);
        const double m = g.num_edges();
        const H0Scan scan = h0_exhaustive_scan(g, 1.0);
        CHECK(scan.ground_energy == -m);
        CHECK(scan.first_excited == -m + 4.0);
        CHECK(scan.ground_degeneracy == oracle::all_independent_sets(g).size());

        // Every independent set sits exactly at the ground energy.
        for (const auto mask : oracle::all_independent_sets(g))
            CHECK(h0_energy(mask, g, 1.0) == -m);

        const H0Scan scaled = h0_exhaustive_scan(g, 2.0);
        CHECK(scaled.ground_energy == -2.0 * m);
        CHECK(scaled.first_excited == -2.0 * m + 8.0);
        CHECK(scaled.ground_degeneracy == scan.ground_degeneracy);
    }
}

TEST_CASE("h0 scan on an edgeless graph reports a flat spectrum") {
    const H0Scan scan = h0_exhaustive_scan(edgeless(5), 1.0);
    CHECK(scan.ground_energy == 0.0);
    CHECK(scan.first_excited == 0.0);
    CHECK(scan.ground_degeneracy == 32);
}

TEST_CASE("gauge matrix entries follow the closed forms") {
    const Graph g = spider(2);
    const IsBasis basis = build_basis(g);
    const int n = g.num_vertices();
    const GaugeParams params{1.1, 0.8, 0.3};
    const GaugeMatrix a = assemble_gauge(basis, params);

    CHECK(a.dimension() == static_cast<std::int64_t>(basis.dimension()));
    const double c2 = std::cos(params.theta / 2) * std::cos(params.theta / 2);
    const double s2 = std::sin(params.theta / 2) * std::sin(params.theta / 2);
    for (std::size_t j = 0; j < basis.dimension(); ++j) {
        const double nj = basis.size_of(j);
        const double expected = -(nj * s2 + (n - nj) * c2) * params.omega_phi;
        CHECK(a.diagonal[static_cast<Eigen::Index>(j)] ==
              doctest::Approx(expected).epsilon(1e-14));
    }

    CHECK(a.entries.size() == basis.hops().size());
    const std::complex<double> expected_coupling(
        std::sin(params.theta) / 2 * params.omega_phi, params.omega_theta / 2);
    for (const auto& e : a.entries) {
        CHECK(e.row > e.col);
        // Row is the larger set: the +omega_theta/2 imaginary part sits on
        // the (larger, smaller) element.
        CHECK(basis.size_of(static_cast<std::size_t>(e.row)) ==
              basis.size_of(static_cast<std::size_t>(e.col)) + 1);
        CHECK(std::abs(e.value - expected_coupling) < 1e-15);
    }
}

TEST_CASE("gauge apply agrees with the dense materialization") {
    const Graph g = gen_gnp(8, 0.4, 55);
    const IsBasis basis = build_basis(g);
    const GaugeMatrix a = assemble_gauge(basis, {2.0, 1.3, 0.7});
    const auto dense = a.dense();
    CHECK(dense.isApprox(dense.adjoint()));

    Xoshiro256StarStar rng(9);
    VectorC x(dense.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        x[i] = std::complex<double>(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    const VectorC via_apply = a.apply(x);
    const VectorC via_dense = dense * x;
    CHECK((via_apply - via_dense).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("assembled gauge matches the finite-difference Berry connection") {
    std::vector<Graph> cases{spider(2), Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
                             Graph(3, {{0, 1}, {1, 2}, {0, 2}}), gen_gnp(6, 0.5, 77)};
    Xoshiro256StarStar rng(0x5eed);
    for (const Graph& g : cases) {
        const IsBasis basis = build_basis(g);
        for (int k = 0; k < 3; ++k) {
            const double theta = 0.15 + rng.uniform01() * 2.8;
            const double w_phi = 0.5 + rng.uniform01();
            const double w_th = rng.uniform01() * 0.4;
            const GaugeMatrix analytic = assemble_gauge(basis, {theta, w_phi, w_th});
            const GaugeMatrix fd =
                berry_connection_fd(basis, theta, 0.7, w_th, w_phi, 1e-6);
            const double dev =
                (analytic.dense() - fd.dense()).cwiseAbs().maxCoeff();
            CHECK(dev < 1e-7);
        }
    }
}

TEST_CASE("finite-difference connection has no couplings beyond one hop") {
    const Graph g = gen_gnp(6, 0.5, 123);
    const IsBasis basis = build_basis(g);
    const GaugeMatrix fd = berry_connection_fd(basis, 1.3, 0.2, 0.25, 0.9, 1e-6);
    for (const auto& e : fd.entries) {
        const int dist = oracle::popcount64(
            basis.state(static_cast<std::size_t>(e.row)) ^
            basis.state(static_cast<std::size_t>(e.col)));
        if (dist >= 2) CHECK(std::abs(e.value) < 1e-8);
    }
}

TEST_CASE("edgeless gauge gap equals hypot(omega_phi, omega_theta) at every theta") {
    const GaugeParams p0{0.0, 1.0, 0.0};
    CHECK(edgeless_reference_gap(4, p0) == doctest::Approx(1.0).epsilon(1e-15));
    const GaugeParams p1{0.0, 0.6, 0.8};
    CHECK(edgeless_reference_gap(3, p1) == doctest::Approx(1.0).epsilon(1e-14));

    // Dense eigensolve confirms the splitting is theta-independent.
    const IsBasis basis = build_basis(edgeless(3));
    for (const double theta : {0.3, 1.2, 2.1, 3.0}) {
        const GaugeMatrix a = assemble_gauge(basis, {theta, 0.9, 0.5});
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.dense());
        const auto& evs = es.eigenvalues();
        double lambda1 = evs[evs.size() - 1];
        for (Eigen::Index i = 1; i < evs.size(); ++i)
            if (evs[i] - evs[0] > 1e-8) {
                lambda1 = evs[i];
                break;
            }
        const double expected = std::hypot(0.9, 0.5);
        CHECK(lambda1 - evs[0] == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("scaling a gauge matrix scales its action") {
    const IsBasis basis = build_basis(spider(1));
    GaugeMatrix a = assemble_gauge(basis, {1.0, 1.0, 0.2});
    const auto before = a.dense();
    a *= 2.0;
    CHECK((a.dense() - 2.0 * before).cwiseAbs().maxCoeff() < 1e-15);
}
