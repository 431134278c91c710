#include "misanneal/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "misanneal/errors.hpp"
#include "misanneal/gauge.hpp"

namespace misanneal {

double Schedule::duration() const { return std::numbers::pi / omega_theta; }

int default_steps(double total_time, int n) {
    const double scaled = 50.0 * total_time * std::max(1.0, n / 10.0);
    return std::max(4000, static_cast<int>(std::ceil(scaled)));
}

Schedule make_schedule(double total_time, int n, double omega_phi, int steps) {
    if (!(total_time > 0)) throw ParseError("total time must be positive");
    if (!(omega_phi > 0)) throw ParseError("omega_phi must be positive");
    Schedule s;
    s.total_time = total_time;
    s.omega_phi = omega_phi;
    s.omega_theta = std::numbers::pi * omega_phi / total_time;
    s.steps = steps > 0 ? steps : default_steps(total_time, n);
    if (s.steps < 2) throw ParseError("schedule needs at least 2 steps");
    return s;
}

Schedule schedule_for_graph(int n, double gamma, double omega_phi, int steps) {
    Schedule s = make_schedule(std::pow(n, gamma), n, omega_phi, steps);
    s.gamma = gamma;
    return s;
}

VectorC initial_state(const IsBasis& basis) {
    VectorC psi = VectorC::Zero(static_cast<Eigen::Index>(basis.dimension()));
    psi[0] = 1.0;
    return psi;
}

namespace {

// Rebuilds the gauge matrix in place as theta moves; the hop structure and
// the shared off-diagonal value never change shape.
class GaugeUpdater {
public:
    explicit GaugeUpdater(const IsBasis& basis)
        : n_(basis.num_vertices()),
          sizes_(Eigen::Map<const Eigen::VectorXi>(
                     basis.sizes().data(),
                     static_cast<Eigen::Index>(basis.sizes().size()))
                     .cast<double>()) {
        m_.diagonal.resize(sizes_.size());
        m_.entries.reserve(basis.hops().size());
        for (const auto& h : basis.hops()) m_.entries.push_back({h.hi, h.lo, {}});
    }

    const GaugeMatrix& at(double theta, double omega_phi, double omega_theta) {
        const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
        m_.diagonal = -omega_phi * (n_ * c2 - std::cos(theta) * sizes_.array());
        set_coupling({std::sin(theta) / 2 * omega_phi, omega_theta / 2});
        return m_;
    }

    // a*A(theta_x) + b*A(theta_y), legal because the structure is shared.
    const GaugeMatrix& combo(double a, double theta_x, double b, double theta_y,
                             double omega_phi, double omega_theta) {
        const double cx = std::cos(theta_x / 2) * std::cos(theta_x / 2);
        const double cy = std::cos(theta_y / 2) * std::cos(theta_y / 2);
        m_.diagonal = -omega_phi * (a * (n_ * cx - std::cos(theta_x) * sizes_.array()) +
                                    b * (n_ * cy - std::cos(theta_y) * sizes_.array()));
        const std::complex<double> z =
            a * std::complex<double>(std::sin(theta_x) / 2 * omega_phi, omega_theta / 2) +
            b * std::complex<double>(std::sin(theta_y) / 2 * omega_phi, omega_theta / 2);
        set_coupling(z);
        return m_;
    }

private:
    void set_coupling(std::complex<double> z) {
        for (auto& e : m_.entries) e.value = z;
    }

    int n_;
    Eigen::ArrayXd sizes_;
    GaugeMatrix m_;
};

VectorC step_exp(const GaugeMatrix& m, double h, const VectorC& psi,
                 const KrylovOptions& krylov) {
    try {
        return expi_apply(m, h, psi, krylov);
    } catch (const ConvergenceError&) {
        if (m.dimension() > 4096) throw;
        return expi_apply_dense(m, h, psi);
    }
}

// CF4 node offsets (Gauss points) and exponent weights.
constexpr double kGaussLo = 0.5 - 0.28867513459481287;  // 1/2 - sqrt(3)/6
constexpr double kGaussHi = 0.5 + 0.28867513459481287;
constexpr double kWeightLo = 0.25 - 0.28867513459481287;  // 1/4 - sqrt(3)/6
constexpr double kWeightHi = 0.25 + 0.28867513459481287;

}  // namespace

VectorC evolve(const IsBasis& basis, const Schedule& schedule, const VectorC& psi0,
               const EvolveOptions& opts) {
    auto traj = evolve_trajectory(basis, schedule, psi0, 2, opts);
    return std::move(traj.back().psi);
}

std::vector<TrajectoryPoint> evolve_trajectory(const IsBasis& basis,
                                               const Schedule& schedule,
                                               const VectorC& psi0, int sample_count,
                                               const EvolveOptions& opts) {
    if (sample_count < 2) throw ParseError("trajectory needs at least 2 samples");
    if (psi0.size() != static_cast<Eigen::Index>(basis.dimension()))
        throw ParseError("state dimension does not match basis");
    const int steps = schedule.steps;
    const double h = schedule.duration() / steps;
    const double w_phi = schedule.omega_phi;
    const double w_th = schedule.omega_theta;

    GaugeUpdater gauge(basis);
    std::vector<TrajectoryPoint> out;
    out.reserve(static_cast<std::size_t>(sample_count));
    out.push_back({0.0, psi0});

    VectorC psi = psi0;
    int next_sample = 1;
    for (int k = 0; k < steps; ++k) {
        const double t = k * h;
        if (opts.integrator == Integrator::kMidpoint) {
            psi = step_exp(gauge.at(w_th * (t + 0.5 * h), w_phi, w_th), h, psi,
                           opts.krylov);
        } else {
            const double th1 = w_th * (t + kGaussLo * h);
            const double th2 = w_th * (t + kGaussHi * h);
            psi = step_exp(gauge.combo(kWeightHi, th1, kWeightLo, th2, w_phi, w_th), h,
                           psi, opts.krylov);
            psi = step_exp(gauge.combo(kWeightLo, th1, kWeightHi, th2, w_phi, w_th), h,
                           psi, opts.krylov);
        }
        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > opts.norm_tol)
            throw ConvergenceError("norm_drift",
                                   "norm drift " + std::to_string(drift) +
                                       " after step " + std::to_string(k + 1));
        // Snapshot whenever we cross the next uniform boundary; the last step
        // always lands the theta = pi sample.
        while (next_sample < sample_count &&
               static_cast<long long>(k) + 1 >=
                   (static_cast<long long>(steps) * next_sample) / (sample_count - 1)) {
            // theta after step j is pi * j / steps by construction; the final
            // step is pinned to exactly pi.
            const double theta =
                k + 1 == steps ? std::numbers::pi : std::numbers::pi * (k + 1) / steps;
            out.push_back({theta, psi});
            ++next_sample;
        }
    }
    return out;
}

}  // namespace misanneal
