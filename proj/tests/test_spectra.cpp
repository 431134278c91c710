#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "misanneal/basis.hpp"
#include "misanneal/errors.hpp"
#include "misanneal/gauge.hpp"
#include "misanneal/lanczos.hpp"
#include "misanneal/spectra.hpp"

using namespace misanneal;

TEST_CASE("gap scan input validation") {
    const IsBasis basis = build_basis(spider(1));
    CHECK_THROWS_AS(gap_scan(basis, 1.0, 0.0, 1), ParseError);
    CHECK_THROWS_AS(gap_scan(basis, 0.0, 0.0, 11), ParseError);
    CHECK_THROWS_AS(gap_scan(basis, -1.0, 0.0, 11), ParseError);
    const IsBasis degenerate(1, {0}, {});
    CHECK_THROWS_AS(gap_scan(degenerate, 1.0, 0.0, 11), ParseError);
}

TEST_CASE("gap scan grid covers [0, pi] uniformly") {
    const IsBasis basis = build_basis(spider(2));
    const GapCurve curve = gap_scan(basis, 1.0, 0.0, 21);
    CHECK(curve.thetas.size() == 21);
    CHECK(curve.thetas.front() == 0.0);
    CHECK(curve.thetas.back() == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    for (std::size_t k = 1; k < curve.thetas.size(); ++k) {
        CHECK(curve.thetas[k] > curve.thetas[k - 1]);
        CHECK(curve.thetas[k] - curve.thetas[k - 1] ==
              doctest::Approx(std::numbers::pi / 20).epsilon(1e-12));
    }
    for (std::size_t k = 0; k < curve.gap.size(); ++k) {
        CHECK(curve.gap[k] == curve.lambda1[k] - curve.lambda0[k]);
        CHECK(curve.gap[k] > 0.0);
    }
    CHECK(curve.min_gap <= *std::min_element(curve.gap.begin(), curve.gap.end()));
    CHECK(curve.theta_at_min >= 0.0);
    CHECK(curve.theta_at_min <= std::numbers::pi);
}

TEST_CASE("edgeless gap is exactly omega_phi at every theta") {
    for (const int n : {2, 4}) {
        const IsBasis basis = build_basis(edgeless(n));
        const GapCurve curve = gap_scan(basis, 1.0, 0.0, 51);
        for (const double g : curve.gap) CHECK(std::abs(g - 1.0) < 1e-11);
        CHECK(std::abs(curve.min_gap - 1.0) < 1e-11);
    }
    // Nonzero omega_theta tilts the splitting to hypot(omega_phi, omega_theta).
    const IsBasis basis = build_basis(edgeless(3));
    const GapCurve curve = gap_scan(basis, 0.8, 0.6, 31);
    for (const double g : curve.gap) CHECK(std::abs(g - 1.0) < 1e-10);
}

TEST_CASE("every graph has gap omega_phi at the sweep endpoints") {
    // At theta = 0 the ground state is the empty set at -n*omega_phi; at
    // theta = pi it is the maximum set at -alpha*omega_phi.  Both endpoints
    // sit one omega_phi below the nearest level.
    for (const auto& g : {gen_gnp(7, 0.5, 2), gen_gnm(8, 10, 4), spider(3)}) {
        const IsBasis basis = build_basis(g);
        const GapCurve curve = gap_scan(basis, 1.0, 0.0, 11);
        CHECK(curve.gap.front() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(curve.gap.back() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(curve.lambda0.front() ==
              doctest::Approx(-static_cast<double>(g.num_vertices())).epsilon(1e-13));
        CHECK(curve.lambda0.back() ==
              doctest::Approx(-static_cast<double>(exact_mis(g).alpha)).epsilon(1e-13));
    }
}

TEST_CASE("gap scan values match a direct dense eigensolve") {
    const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    const IsBasis basis = build_basis(k3);
    const GapCurve curve = gap_scan(basis, 1.1, 0.15, 21);
    for (std::size_t k = 0; k < curve.thetas.size(); ++k) {
        const GaugeMatrix a =
            assemble_gauge(basis, {curve.thetas[k], 1.1, 0.15});
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            a.dense(), Eigen::EigenvaluesOnly);
        const auto& lam = es.eigenvalues();
        CHECK(curve.lambda0[k] == doctest::Approx(lam[0]).epsilon(1e-12));
        const double tol = 1e-10 * std::max(1.0, std::abs(lam[0]));
        for (Eigen::Index i = 1; i < lam.size(); ++i)
            if (lam[i] - lam[0] > tol) {
                CHECK(curve.lambda1[k] == doctest::Approx(lam[i]).epsilon(1e-12));
                break;
            }
    }
}

TEST_CASE("refined minimum improves on a coarse grid") {
    const IsBasis basis = build_basis(spider(2));
    const GapCurve coarse = gap_scan(basis, 1.0, 0.0, 15);
    const GapCurve fine = gap_scan(basis, 1.0, 0.0, 301);
    // The golden-section refinement of the coarse scan should land on the
    // same minimum as a 20x finer grid.
    CHECK(std::abs(coarse.min_gap - fine.min_gap) < 1e-6);
    CHECK(std::abs(coarse.theta_at_min - fine.theta_at_min) < 1e-2);
    CHECK(coarse.min_gap <= *std::min_element(coarse.gap.begin(), coarse.gap.end()));
}

TEST_CASE("gap scan is independent of parallelism") {
    const IsBasis basis = build_basis(spider(3));
    GapScanOptions serial;
    serial.parallelism = 1;
    GapScanOptions parallel;
    parallel.parallelism = 4;
    const GapCurve a = gap_scan(basis, 1.0, 0.1, 31, serial);
    const GapCurve b = gap_scan(basis, 1.0, 0.1, 31, parallel);
    CHECK(a.lambda0 == b.lambda0);
    CHECK(a.lambda1 == b.lambda1);
    CHECK(a.gap == b.gap);
    CHECK(a.min_gap == b.min_gap);
    CHECK(a.theta_at_min == b.theta_at_min);
}

TEST_CASE("iterative eigensolver path agrees with dense above the cutoff"
          * doctest::timeout(600)) {
    // spider(7) has dimension 2315, just over the dense dispatch cutoff, so
    // the scan uses the Lanczos path; check it against a one-off dense solve
    // near the gap minimum and at a generic angle.
    const IsBasis basis = build_basis(spider(7));
    REQUIRE(basis.dimension() == 2315);
    for (const double theta : {2.31, 1.1}) {
        const GaugeMatrix a = assemble_gauge(basis, {theta, 1.0, 0.0});
        const double tol = 1e-10 * std::max(1.0, std::abs(a.diagonal.minCoeff()));
        LanczosOptions lopt;
        lopt.seed = 0x5eedf00d;
        const LowestPair kr = lowest_two_distinct_lanczos(a, tol, lopt);
        const LowestPair dn = lowest_two_distinct_dense(a, tol);
        CHECK(kr.lambda0 == doctest::Approx(dn.lambda0).epsilon(1e-9));
        CHECK(kr.lambda1 == doctest::Approx(dn.lambda1).epsilon(1e-9));
    }
}

TEST_CASE("log gap fit recovers exact linear data") {
    std::vector<std::pair<double, double>> points;
    for (int n = 4; n <= 9; ++n)
        points.emplace_back(n, std::exp(0.05 - 0.33 * n));
    const LogGapFit fit = fit_log_gap(points);
    CHECK(fit.slope == doctest::Approx(-0.33).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(0.05).epsilon(1e-10));
    CHECK(fit.max_residual < 1e-12);
}

TEST_CASE("log gap fit reports the worst residual") {
    std::vector<std::pair<double, double>> points;
    for (int n = 1; n <= 5; ++n) points.emplace_back(n, std::exp(-0.5 * n));
    points[2].second *= std::exp(0.2);  // bump one point off the line
    const LogGapFit fit = fit_log_gap(points);
    CHECK(fit.max_residual > 0.1);
    CHECK(fit.max_residual < 0.2);
}

TEST_CASE("log gap fit input validation") {
    CHECK_THROWS_AS(fit_log_gap({{1, 0.5}, {2, 0.4}}), ParseError);
    CHECK_THROWS_AS(fit_log_gap({{1, 0.5}, {2, 0.0}, {3, 0.3}}), ParseError);
    CHECK_THROWS_AS(fit_log_gap({{1, 0.5}, {2, -0.1}, {3, 0.3}}), ParseError);
    CHECK_THROWS_AS(fit_log_gap({{2, 0.5}, {2, 0.4}, {2, 0.3}}), ParseError);
}
