#include "misanneal/gauge.hpp"

#include <bit>
#include <cmath>

#include "misanneal/errors.hpp"

namespace misanneal {

double h0_energy(std::uint64_t config, const Graph& g, double delta) {
    int both_up = 0;
    for (const auto& [u, v] : g.edges())
        if (((config >> u) & 1ULL) && ((config >> v) & 1ULL)) ++both_up;
    return delta * (-g.num_edges() + 4 * both_up);
}

GaugeMatrix assemble_gauge(const IsBasis& basis, const GaugeParams& params) {
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    const int n = basis.num_vertices();
    const double s2 = std::sin(params.theta / 2) * std::sin(params.theta / 2);
    const double c2 = 1.0 - s2;

    GaugeMatrix a;
    a.diagonal.resize(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const double nj = basis.size_of(static_cast<std::size_t>(j));
        a.diagonal[j] = -(nj * s2 + (n - nj) * c2) * params.omega_phi;
    }
    // Every hop shares the same coupling; sign fixed by putting it on the
    // (larger set, smaller set) element.
    const std::complex<double> z(std::sin(params.theta) / 2 * params.omega_phi,
                                 params.omega_theta / 2);
    a.entries.reserve(basis.hops().size());
    for (const auto& h : basis.hops()) a.entries.push_back({h.hi, h.lo, z});
    return a;
}

namespace {

using C2 = Eigen::Vector2cd;

// Single-qubit eigenvectors of the rotated frame: `up` for a vertex in the
// set, `down` otherwise.
C2 qubit_up(double theta, double phi) {
    return {std::cos(theta / 2),
            std::exp(std::complex<double>(0, phi)) * std::sin(theta / 2)};
}

C2 qubit_down(double theta, double phi) {
    return {std::sin(theta / 2),
            -std::exp(std::complex<double>(0, phi)) * std::cos(theta / 2)};
}

}  // namespace

GaugeMatrix berry_connection_fd(const IsBasis& basis, double theta, double phi,
                                double d_theta_dt, double d_phi_dt, double fd_step) {
    const auto dim = basis.dimension();
    if (dim > 4096 || basis.num_vertices() > 12)
        throw Error("fd_scale", "finite-difference validation limited to dim <= 4096, n <= 12");
    const int n = basis.num_vertices();

    // All qubits see the same angles, so one overlap table serves every
    // vertex: tab[shift][a][b] = <qubit_a(t0) | qubit_b(t0 + shift*h)>.
    std::complex<double> tab[2][2][2];
    const C2 bra[2] = {qubit_down(theta, phi), qubit_up(theta, phi)};
    for (int shift = 0; shift < 2; ++shift) {
        const double dt = (shift == 0 ? -fd_step : fd_step);
        const double th = theta + d_theta_dt * dt;
        const double ph = phi + d_phi_dt * dt;
        const C2 ket[2] = {qubit_down(th, ph), qubit_up(th, ph)};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) tab[shift][a][b] = bra[a].dot(ket[b]);
    }

    GaugeMatrix out;
    out.diagonal.resize(static_cast<Eigen::Index>(dim));
    const std::complex<double> iu(0, 1);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col <= row; ++col) {
            std::complex<double> plus = 1.0, minus = 1.0;
            for (int q = 0; q < n; ++q) {
                const int a = static_cast<int>((basis.state(row) >> q) & 1ULL);
                const int b = static_cast<int>((basis.state(col) >> q) & 1ULL);
                plus *= tab[1][a][b];
                minus *= tab[0][a][b];
            }
            const std::complex<double> val = iu * (plus - minus) / (2 * fd_step);
            if (row == col)
                out.diagonal[static_cast<Eigen::Index>(row)] = val.real();
            else if (std::abs(val) > 1e-14)
                out.entries.push_back({static_cast<std::int32_t>(row),
                                       static_cast<std::int32_t>(col), val});
        }
    }
    return out;
}

double edgeless_reference_gap(int /*n*/, const GaugeParams& params) {
    return std::hypot(params.omega_phi, params.omega_theta);
}

H0Scan h0_exhaustive_scan(const Graph& g, double delta) {
    const int n = g.num_vertices();
    if (n > 20)
        throw ParseError("exhaustive spectrum sweep limited to n <= 20");
    H0Scan scan{0.0, 0.0, 0};
    bool have_second = false;
    double best = 0.0, second = 0.0;
    for (std::uint64_t config = 0; config < (1ULL << n); ++config) {
        const double e = h0_energy(config, g, delta);
        if (config == 0 || e < best - 1e-12) {
            if (config != 0 && (!have_second || best < second)) {
                second = best;
                have_second = true;
            }
            best = e;
            scan.ground_degeneracy = 1;
        } else if (e < best + 1e-12) {
            ++scan.ground_degeneracy;
        } else if (!have_second || e < second) {
            second = e;
            have_second = true;
        }
    }
    scan.ground_energy = best;
    scan.first_excited = have_second ? second : best;
    return scan;
}

}  // namespace misanneal
