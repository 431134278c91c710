#include "misanneal/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "misanneal/errors.hpp"
#include "misanneal/gauge.hpp"
#include "misanneal/parallel.hpp"
#include "misanneal/prng.hpp"

namespace misanneal {

namespace {

double distinct_tol_for(double lambda0) {
    return 1e-10 * std::max(1.0, std::abs(lambda0));
}

// Exactly diagonal matrices (sin(theta)=0 with omega_theta=0) break the
// Krylov iteration's usefulness; read the two lowest distinct diagonal
// entries directly.
LowestPair diagonal_lowest_pair(const GaugeMatrix& m) {
    std::vector<double> d(m.diagonal.data(), m.diagonal.data() + m.diagonal.size());
    std::sort(d.begin(), d.end());
    const double tol = distinct_tol_for(d[0]);
    for (std::size_t k = 1; k < d.size(); ++k)
        if (d[k] - d[0] > tol) return {d[0], d[k]};
    throw ConvergenceError("eig_noconv", "fully degenerate diagonal spectrum");
}

LowestPair lowest_pair_at(const IsBasis& basis, double theta, double omega_phi,
                          double omega_theta, std::uint64_t scan_seed) {
    const GaugeMatrix a = assemble_gauge(basis, {theta, omega_phi, omega_theta});
    // sin(pi) evaluates to ~1e-16, so test the coupling magnitude rather
    // than theta itself; every hop shares one value by construction.
    const double diag_scale = std::abs(a.diagonal.minCoeff());
    const bool no_coupling =
        a.entries.empty() || std::abs(a.entries.front().value) < 1e-13 * diag_scale;
    if (no_coupling) return diagonal_lowest_pair(a);

    LanczosOptions lopt;
    lopt.seed = scan_seed ^ SplitMix64(std::bit_cast<std::uint64_t>(theta)).next();
    if (a.dimension() <= kDenseEigCutoff) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.dense(),
                                                           Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw ConvergenceError("eig_noconv", "dense eigensolve failed");
        const auto& lam = es.eigenvalues();
        const double tol = distinct_tol_for(lam[0]);
        for (Eigen::Index k = 1; k < lam.size(); ++k)
            if (lam[k] - lam[0] > tol) return {lam[0], lam[k]};
        throw ConvergenceError("eig_noconv", "no distinct second eigenvalue");
    }
    // The most negative diagonal entry lower-bounds lambda0 (variationally),
    // which fixes the distinctness tolerance without a preliminary solve.
    const double tol = distinct_tol_for(a.diagonal.minCoeff());
    return lowest_two_distinct_lanczos(a, tol, lopt);
}

}  // namespace

GapCurve gap_scan(const IsBasis& basis, double omega_phi, double omega_theta,
                  int grid_points, const GapScanOptions& opts) {
    if (basis.dimension() < 2)
        throw ParseError("gap scan needs basis dimension >= 2");
    if (grid_points < 2) throw ParseError("gap scan needs at least 2 grid points");
    if (!(omega_phi > 0)) throw ParseError("omega_phi must be positive");

    GapCurve curve;
    curve.thetas.resize(static_cast<std::size_t>(grid_points));
    curve.lambda0.resize(curve.thetas.size());
    curve.lambda1.resize(curve.thetas.size());
    curve.gap.resize(curve.thetas.size());
    for (int k = 0; k < grid_points; ++k)
        curve.thetas[static_cast<std::size_t>(k)] =
            std::numbers::pi * k / (grid_points - 1);

    parallel_for_index(
        curve.thetas.size(), opts.parallelism, [&](std::size_t k) {
            const auto pair = lowest_pair_at(basis, curve.thetas[k], omega_phi,
                                             omega_theta, opts.seed);
            curve.lambda0[k] = pair.lambda0;
            curve.lambda1[k] = pair.lambda1;
            curve.gap[k] = pair.lambda1 - pair.lambda0;
        });

    const auto arg_min = static_cast<std::size_t>(
        std::min_element(curve.gap.begin(), curve.gap.end()) - curve.gap.begin());
    curve.min_gap = curve.gap[arg_min];
    curve.theta_at_min = curve.thetas[arg_min];

    // Golden-section refinement inside the bracketing grid cells.
    double lo = curve.thetas[arg_min > 0 ? arg_min - 1 : 0];
    double hi = curve.thetas[std::min(arg_min + 1, curve.thetas.size() - 1)];
    if (hi > lo) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        auto gap_at = [&](double theta) {
            const auto pair =
                lowest_pair_at(basis, theta, omega_phi, omega_theta, opts.seed);
            return pair.lambda1 - pair.lambda0;
        };
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = gap_at(x1);
        double f2 = gap_at(x2);
        int evals = 2;
        while (hi - lo > opts.refine_theta_tol && evals < opts.max_refine_evals) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = gap_at(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = gap_at(x2);
            }
            ++evals;
        }
        const double best = std::min(f1, f2);
        if (best < curve.min_gap) {
            curve.min_gap = best;
            curve.theta_at_min = f1 < f2 ? x1 : x2;
        }
    }
    return curve;
}

LogGapFit fit_log_gap(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw ParseError("log-gap fit needs at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, gap] : points) {
        if (!(gap > 0)) throw ParseError("log-gap fit requires positive gaps");
        const double y = std::log(gap);
        sx += n;
        sy += y;
        sxx += n * n;
        sxy += n * y;
    }
    const double count = static_cast<double>(points.size());
    const double denom = count * sxx - sx * sx;
    if (denom <= 0) throw ParseError("log-gap fit needs spread in n");
    LogGapFit fit;
    fit.slope = (count * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / count;
    fit.max_residual = 0;
    for (const auto& [n, gap] : points)
        fit.max_residual = std::max(
            fit.max_residual,
            std::abs(std::log(gap) - (fit.intercept + fit.slope * n)));
    return fit;
}

}  // namespace misanneal
