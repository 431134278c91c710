#ifndef MISANNEAL_DYNAMICS_HPP
#define MISANNEAL_DYNAMICS_HPP

#include <vector>

#include "misanneal/basis.hpp"
#include "misanneal/lanczos.hpp"

namespace misanneal {

// Annealing schedule: phase rate omega_phi, polar rate omega_theta =
// pi*omega_phi/T, so theta = omega_theta*t sweeps 0..pi over the run.  The
// run lasts pi/omega_theta = T/omega_phi time units (= T at the default
// omega_phi = 1).
struct Schedule {
    double total_time = 1.0;   // T
    double gamma = 0.0;        // exponent when T = n^gamma; 0 if T was given directly
    double omega_phi = 1.0;
    double omega_theta = 0.0;  // pi * omega_phi / T
    int steps = 0;

    double duration() const;   // pi / omega_theta
    double theta_at(double t) const { return omega_theta * t; }
};

// Step count heuristic keeping the per-step phase small; grows with both run
// time and system size.
int default_steps(double total_time, int n);

// steps <= 0 selects default_steps.
Schedule make_schedule(double total_time, int n, double omega_phi = 1.0, int steps = 0);

// T = n^gamma.
Schedule schedule_for_graph(int n, double gamma = 2.0, double omega_phi = 1.0,
                            int steps = 0);

enum class Integrator {
    kMidpoint,  // psi <- exp(i h A(t + h/2)) psi, one exponential per step
    kCf4,       // commutator-free 4th order, two exponentials per step
};

struct EvolveOptions {
    Integrator integrator = Integrator::kMidpoint;
    KrylovOptions krylov;
    double norm_tol = 1e-8;
};

// Unit amplitude on the empty set (basis index 0).
VectorC initial_state(const IsBasis& basis);

// Integrates d psi / dt = i A(theta(t)) psi over the full sweep and returns
// psi at theta = pi.  Norm drift beyond norm_tol throws
// ConvergenceError("norm_drift"); no silent renormalization.
VectorC evolve(const IsBasis& basis, const Schedule& schedule, const VectorC& psi0,
               const EvolveOptions& opts = {});

struct TrajectoryPoint {
    double theta;
    VectorC psi;
};

// Snapshots at (approximately) uniformly spaced theta, always including
// theta = 0 (= psi0) and theta = pi.  Snapshots land on integrator step
// boundaries, so the final point is bit-identical to evolve's output.
std::vector<TrajectoryPoint> evolve_trajectory(const IsBasis& basis,
                                               const Schedule& schedule,
                                               const VectorC& psi0, int sample_count,
                                               const EvolveOptions& opts = {});

}  // namespace misanneal

#endif
