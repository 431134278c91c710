#ifndef MISANNEAL_SPECTRA_HPP
#define MISANNEAL_SPECTRA_HPP

#include <cstdint>
#include <vector>

#include "misanneal/basis.hpp"
#include "misanneal/lanczos.hpp"

namespace misanneal {

// Instantaneous spectrum of A(theta) along a theta grid.  lambda1 is the
// second-lowest *distinct* eigenvalue (degenerate ground sweeps are not
// avoided crossings), distinctness at tolerance 1e-10 * max(1, |lambda0|).
struct GapCurve {
    std::vector<double> thetas;   // strictly increasing, endpoints 0 and pi
    std::vector<double> lambda0;
    std::vector<double> lambda1;
    std::vector<double> gap;      // lambda1 - lambda0
    double min_gap = 0.0;         // refined minimum, <= every grid gap
    double theta_at_min = 0.0;
};

struct GapScanOptions {
    int parallelism = 1;
    std::uint64_t seed = 0x67617073;   // Lanczos start-vector stream
    double refine_theta_tol = 1e-6;    // golden-section bracket width
    int max_refine_evals = 80;
};

// Eigensolve at each of grid_points uniformly spaced theta in [0, pi]
// (dense for dimensions <= 2048, Lanczos above), then golden-section
// refinement of the minimum around the grid argmin.
GapCurve gap_scan(const IsBasis& basis, double omega_phi, double omega_theta,
                  int grid_points, const GapScanOptions& opts = {});

// Least-squares fit of ln(gap) against n.
struct LogGapFit {
    double intercept;
    double slope;
    double max_residual;  // max |ln(gap_i) - (intercept + slope * n_i)|
};

LogGapFit fit_log_gap(const std::vector<std::pair<double, double>>& points);

}  // namespace misanneal

#endif
