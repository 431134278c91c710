#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "misanneal/analysis.hpp"
#include "misanneal/basis.hpp"
#include "misanneal/dynamics.hpp"
#include "misanneal/errors.hpp"
#include "support/oracles.hpp"

using namespace misanneal;

TEST_CASE("schedule construction and theta sweep") {
    const Schedule s = make_schedule(10.0, 5);
    CHECK(s.total_time == 10.0);
    CHECK(s.omega_phi == 1.0);
    CHECK(s.omega_theta == doctest::Approx(std::numbers::pi / 10.0).epsilon(1e-15));
    CHECK(s.duration() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(s.theta_at(0.0) == 0.0);
    CHECK(s.theta_at(s.duration()) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(s.steps == 4000);

    // Doubling omega_phi halves the wall-clock duration at fixed T.
    const Schedule fast = make_schedule(10.0, 5, 2.0);
    CHECK(fast.duration() == doctest::Approx(5.0).epsilon(1e-15));

    const Schedule bygamma = schedule_for_graph(4, 2.0);
    CHECK(bygamma.total_time == doctest::Approx(16.0).epsilon(1e-15));
    CHECK(bygamma.gamma == 2.0);

    CHECK_THROWS_AS(make_schedule(0.0, 5), ParseError);
    CHECK_THROWS_AS(make_schedule(-3.0, 5), ParseError);
    CHECK_THROWS_AS(make_schedule(10.0, 5, 0.0), ParseError);
    CHECK_THROWS_AS(make_schedule(10.0, 5, 1.0, 1), ParseError);
}

TEST_CASE("default step count grows with time and size") {
    CHECK(default_steps(10.0, 10) == 4000);
    CHECK(default_steps(100.0, 20) == 10000);
    CHECK(default_steps(196.0, 14) == 13720);
    CHECK(default_steps(1.0, 1) == 4000);
}

TEST_CASE("initial state is the empty set") {
    const IsBasis basis = build_basis(spider(2));
    const VectorC psi = initial_state(basis);
    CHECK(psi.size() == static_cast<Eigen::Index>(basis.dimension()));
    CHECK(psi[0] == std::complex<double>(1.0, 0.0));
    CHECK(psi.norm() == 1.0);
    CHECK(basis.state(0) == 0);
}

TEST_CASE("midpoint integrator matches a brute-force reference on the triangle") {
    const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    const IsBasis basis = build_basis(k3);
    const Schedule sched = make_schedule(9.0, 3);
    const VectorC psi0 = initial_state(basis);

    const VectorC ref = oracle::rk4_reference(basis, sched, psi0, 200000);
    CHECK(std::abs(ref.norm() - 1.0) < 1e-10);

    const VectorC mid = evolve(basis, sched, psi0);
    CHECK((mid - ref).cwiseAbs().maxCoeff() < 1e-6);

    EvolveOptions cf4;
    cf4.integrator = Integrator::kCf4;
    const VectorC quad = evolve(basis, sched, psi0, cf4);
    CHECK((quad - ref).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("integrator convergence orders") {
    const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    const IsBasis basis = build_basis(k3);
    const VectorC psi0 = initial_state(basis);
    const VectorC ref =
        oracle::rk4_reference(basis, make_schedule(9.0, 3), psi0, 200000);

    auto err_at = [&](Integrator integ, int steps) {
        const Schedule s = make_schedule(9.0, 3, 1.0, steps);
        EvolveOptions opts;
        opts.integrator = integ;
        return (evolve(basis, s, psi0, opts) - ref).cwiseAbs().maxCoeff();
    };

    // Midpoint-exponential halves the step: error drops ~4x.
    const double m1 = err_at(Integrator::kMidpoint, 50);
    const double m2 = err_at(Integrator::kMidpoint, 100);
    CHECK(m1 / m2 > 3.0);
    CHECK(m1 / m2 < 5.5);

    // The two-exponential scheme drops ~16x.
    const double c1 = err_at(Integrator::kCf4, 50);
    const double c2 = err_at(Integrator::kCf4, 100);
    CHECK(c1 / c2 > 10.0);
    CHECK(c1 / c2 < 24.0);
    CHECK(c2 < m2);
}

TEST_CASE("evolution preserves the norm to tolerance") {
    const IsBasis basis = build_basis(spider(3));
    const Schedule sched = make_schedule(30.0, 7);
    const VectorC psi = evolve(basis, sched, initial_state(basis));
    CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    const double nbar = mean_size(psi, basis);
    CHECK(nbar > 0.0);
    CHECK(nbar <= basis.max_size());
}

TEST_CASE("evolution is linear in a global phase") {
    const IsBasis basis = build_basis(gen_gnp(6, 0.5, 9));
    const Schedule sched = make_schedule(3.0, 6, 1.0, 64);
    const std::complex<double> phase = std::exp(std::complex<double>(0, 1.234));
    const VectorC base = evolve(basis, sched, initial_state(basis));
    const VectorC rotated = evolve(basis, sched, phase * initial_state(basis));
    CHECK((rotated - phase * base).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("doubling the step count changes the result below tolerance") {
    const IsBasis basis = build_basis(spider(2));
    const Schedule sched = schedule_for_graph(5, 2.0);
    Schedule doubled = sched;
    doubled.steps *= 2;
    const VectorC a = evolve(basis, sched, initial_state(basis));
    const VectorC b = evolve(basis, doubled, initial_state(basis));
    CHECK(std::abs(mean_size(a, basis) - mean_size(b, basis)) < 1e-6);
}

TEST_CASE("trajectory sampling lands on exact theta boundaries") {
    const IsBasis basis = build_basis(gen_gnp(6, 0.5, 3));
    Schedule sched = make_schedule(4.0, 6, 1.0, 97);  // steps not divisible by samples
    const VectorC psi0 = initial_state(basis);
    const auto traj = evolve_trajectory(basis, sched, psi0, 5);

    CHECK(traj.size() == 5);
    CHECK(traj.front().theta == 0.0);
    CHECK((traj.front().psi - psi0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(traj.back().theta == std::numbers::pi);
    for (std::size_t k = 1; k < traj.size(); ++k) {
        CHECK(traj[k].theta > traj[k - 1].theta);
        CHECK(std::abs(traj[k].psi.norm() - 1.0) < 1e-8);
    }
    // Snapshots sit on integrator step boundaries: theta = pi * j / steps.
    for (const auto& point : traj) {
        const double frac = point.theta / std::numbers::pi * 97.0;
        CHECK(std::abs(frac - std::round(frac)) < 1e-9);
    }

    // The final trajectory point is the evolve output, bit for bit.
    const VectorC direct = evolve(basis, sched, psi0);
    CHECK((traj.back().psi - direct).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trajectory input validation") {
    const IsBasis basis = build_basis(spider(1));
    const Schedule sched = make_schedule(2.0, 3, 1.0, 16);
    CHECK_THROWS_AS(evolve_trajectory(basis, sched, initial_state(basis), 1), ParseError);
    VectorC wrong = VectorC::Zero(3);
    wrong[0] = 1.0;
    CHECK_THROWS_AS(evolve_trajectory(basis, sched, wrong, 2), ParseError);
}

TEST_CASE("norm drift on a non-unit input is refused, not renormalized") {
    const IsBasis basis = build_basis(spider(1));
    const Schedule sched = make_schedule(2.0, 3, 1.0, 16);
    const VectorC scaled = 2.0 * initial_state(basis);
    CHECK_THROWS_AS(evolve(basis, sched, scaled), ConvergenceError);
    try {
        evolve(basis, sched, scaled);
    } catch (const ConvergenceError& e) {
        CHECK(e.code() == "norm_drift");
    }
}
