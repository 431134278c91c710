#ifndef MISANNEAL_GAUGE_HPP
#define MISANNEAL_GAUGE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "misanneal/basis.hpp"
#include "misanneal/graph.hpp"

namespace misanneal {

// Instantaneous rotating-frame parameters: polar angle and the two drive
// rates.
struct GaugeParams {
    double theta = 0.0;        // radians, [0, pi]
    double omega_phi = 1.0;    // dphi/dt, > 0
    double omega_theta = 0.0;  // dtheta/dt, >= 0
};

// Hermitian matrix stored as a real diagonal plus strictly-lower-triangle
// entries (row > col); the upper triangle is implied by conjugation.  For the
// gauge matrix the off-diagonal support is exactly the hop set.
template <typename Real = double>
struct SparseHermitian {
    using Complex = std::complex<Real>;
    using VectorC = Eigen::Vector<Complex, Eigen::Dynamic>;

    struct Entry {
        std::int32_t row;  // row > col
        std::int32_t col;
        Complex value;
    };

    Eigen::Vector<Real, Eigen::Dynamic> diagonal;
    std::vector<Entry> entries;

    std::int64_t dimension() const { return diagonal.size(); }

    // y = M x.
    void apply(const VectorC& x, VectorC& y) const {
        y.array() = diagonal.template cast<Complex>().array() * x.array();
        for (const auto& e : entries) {
            y[e.row] += e.value * x[e.col];
            y[e.col] += std::conj(e.value) * x[e.row];
        }
    }

    VectorC apply(const VectorC& x) const {
        VectorC y(x.size());
        apply(x, y);
        return y;
    }

    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> dense() const {
        Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> m =
            diagonal.template cast<Complex>().asDiagonal();
        for (const auto& e : entries) {
            m(e.row, e.col) = e.value;
            m(e.col, e.row) = std::conj(e.value);
        }
        return m;
    }

    SparseHermitian& operator*=(Real c) {
        diagonal *= c;
        for (auto& e : entries) e.value *= c;
        return *this;
    }
};

using GaugeMatrix = SparseHermitian<double>;

// Ising-form energy of a spin configuration under the edge Hamiltonian
// sum_edges (s_i + s_j + s_i s_j), scaled by delta.  Bit=1 means spin up.
// Equals -m*delta + 4*delta*(#edges with both endpoints up), so the ground
// manifold (energy -m*delta) is exactly the independent sets and the gap to
// the first excited level is 4*delta.
double h0_energy(std::uint64_t config, const Graph& g, double delta);

// Gauge matrix A(theta) on the independent-set basis:
//   diagonal[j] = -(N_j sin^2(t/2) + (n - N_j) cos^2(t/2)) * omega_phi
//   A[hi, lo]   = (sin(t)/2) * omega_phi + (i/2) * omega_theta  on hops
// where hi is the state with one more vertex.  All other off-diagonal
// elements vanish.
GaugeMatrix assemble_gauge(const IsBasis& basis, const GaugeParams& params);

// Finite-difference Berry connection i<E_a|d/dt|E_b> from the explicit
// product eigenstates, with theta(t), phi(t) advancing at the given rates.
// Central differences with step fd_step.  Entries keep every pair whose
// magnitude exceeds 1e-14, so couplings outside the hop set (expected zero
// up to FD truncation) stay visible to tests.  Validation-scale only.
GaugeMatrix berry_connection_fd(const IsBasis& basis, double theta, double phi,
                                double d_theta_dt, double d_phi_dt, double fd_step);

// Spectral gap of the edgeless-graph gauge matrix: independent spins in a
// common drive field, level splitting sqrt(omega_phi^2 + omega_theta^2)
// independent of n.  Pass omega_theta = 0 for the pure-phase-drive value
// omega_phi.
double edgeless_reference_gap(int n, const GaugeParams& params);

// Exhaustive 2^n sweep of h0_energy.  Ground energy is -m*delta with the
// independent sets as the degenerate ground manifold and first excited
// level -m*delta + 4*delta.
struct H0Scan {
    double ground_energy;
    double first_excited;        // ground_energy when the spectrum is flat
    std::uint64_t ground_degeneracy;
};

H0Scan h0_exhaustive_scan(const Graph& g, double delta);

}  // namespace misanneal

#endif
