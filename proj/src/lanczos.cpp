#include "misanneal/lanczos.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "misanneal/errors.hpp"
#include "misanneal/prng.hpp"

namespace misanneal {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// u = exp(i * scale * T) * e1 for real symmetric tridiagonal T given by
// (diag, sub), scaled so the result has norm `amplitude`.
VectorC tridiag_expi_e1(const VectorXd& diag, const VectorXd& sub, double scale,
                        double amplitude) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eig_noconv", "tridiagonal eigensolve failed");
    const auto& q = es.eigenvectors();
    const auto& lam = es.eigenvalues();
    VectorC phases(lam.size());
    for (Eigen::Index k = 0; k < lam.size(); ++k)
        phases[k] = std::exp(std::complex<double>(0, scale * lam[k])) * q(0, k);
    return amplitude * (q * phases);
}

double spectral_scale(const GaugeMatrix& m) {
    double s = 1.0;
    for (Eigen::Index j = 0; j < m.diagonal.size(); ++j)
        s = std::max(s, std::abs(m.diagonal[j]));
    for (const auto& e : m.entries) s = std::max(s, std::abs(e.value));
    return s;
}

}  // namespace

VectorC expi_apply(const GaugeMatrix& m, double scale, const VectorC& x,
                   const KrylovOptions& opts) {
    const auto dim = m.dimension();
    const double beta0 = x.norm();
    if (beta0 == 0.0 || scale == 0.0) return x;

    const int cap = static_cast<int>(std::min<std::int64_t>(opts.max_dim, dim));
    const double breakdown = 1e-13 * spectral_scale(m);

    std::vector<VectorC> v;
    v.reserve(static_cast<std::size_t>(cap) + 1);
    v.push_back(x / beta0);
    VectorXd alpha(cap), beta(cap);
    VectorC w(dim);

    for (int j = 0; j < cap; ++j) {
        m.apply(v.back(), w);
        if (j > 0) w -= beta[j - 1] * v[static_cast<std::size_t>(j - 1)];
        alpha[j] = v.back().dot(w).real();
        w -= alpha[j] * v.back();
        // One reorthogonalization pass keeps the projected problem clean at
        // these subspace sizes.
        for (const auto& vk : v) w -= vk.dot(w) * vk;
        beta[j] = w.norm();

        const bool happy = beta[j] < breakdown;
        if (happy || j + 1 == cap || j >= 1) {
            const VectorC u =
                tridiag_expi_e1(alpha.head(j + 1), beta.head(j), scale, beta0);
            // Generalized-residual estimate beta_j * |(exp)_{j,0}|; no |scale|
            // factor, which keeps it conservative for the small steps used here.
            const double err = happy ? 0.0 : beta[j] * std::abs(u[j]);
            if (happy || err < opts.tol * beta0) {
                VectorC y = VectorC::Zero(dim);
                for (int k = 0; k <= j; ++k) y += u[k] * v[static_cast<std::size_t>(k)];
                return y;
            }
            if (j + 1 == cap) break;
        }
        v.push_back(w / beta[j]);
    }
    throw ConvergenceError("krylov_stall",
                           "Krylov propagator did not converge in " +
                               std::to_string(cap) + " iterations");
}

VectorC expi_apply_dense(const GaugeMatrix& m, double scale, const VectorC& x) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m.dense());
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eig_noconv", "dense eigensolve failed");
    const VectorC coeffs = es.eigenvectors().adjoint() * x;
    VectorC rotated(coeffs.size());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k)
        rotated[k] =
            std::exp(std::complex<double>(0, scale * es.eigenvalues()[k])) * coeffs[k];
    return es.eigenvectors() * rotated;
}

namespace {

LowestPair pick_two_distinct(const VectorXd& sorted, double distinct_tol) {
    const double lambda0 = sorted[0];
    for (Eigen::Index k = 1; k < sorted.size(); ++k)
        if (sorted[k] - lambda0 > distinct_tol) return {lambda0, sorted[k]};
    throw ConvergenceError("eig_noconv",
                           "no second distinct eigenvalue within resolution");
}

}  // namespace

LowestPair lowest_two_distinct_dense(const GaugeMatrix& m, double distinct_tol) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m.dense(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eig_noconv", "dense eigensolve failed");
    return pick_two_distinct(es.eigenvalues(), distinct_tol);
}

LowestPair lowest_two_distinct_lanczos(const GaugeMatrix& m, double distinct_tol,
                                       const LanczosOptions& opts) {
    const auto dim = m.dimension();
    const int cap = static_cast<int>(std::min<std::int64_t>(opts.max_iter, dim));
    const double scale = spectral_scale(m);
    const double stab_tol = 1e-12 * scale;

    Xoshiro256StarStar rng(opts.seed);
    VectorC start(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        start[j] = std::complex<double>(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    start.normalize();

    std::vector<VectorC> v;
    v.push_back(start);
    VectorXd alpha(cap), beta(cap);
    VectorC w(dim);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es;

    double prev0 = 0.0, prev1 = 0.0;
    bool have_prev = false;
    int stable = 0;

    for (int j = 0; j < cap; ++j) {
        m.apply(v.back(), w);
        if (j > 0) w -= beta[j - 1] * v[static_cast<std::size_t>(j - 1)];
        alpha[j] = v.back().dot(w).real();
        w -= alpha[j] * v.back();
        for (const auto& vk : v) w -= vk.dot(w) * vk;  // full reorthogonalization
        beta[j] = w.norm();
        // With full reorthogonalization, spanning the reachable subspace
        // collapses beta to roundoff, so this is true Krylov exhaustion (and
        // the projected spectrum is exact there).  Hitting the iteration cap
        // without it is a convergence failure, reported below.
        const bool exhausted = beta[j] < 1e-13 * scale;
        const bool last = j + 1 == cap;

        if (exhausted || last || (j >= 2 && j % 10 == 0)) {
            es.computeFromTridiagonal(alpha.head(j + 1), beta.head(j),
                                      Eigen::EigenvaluesOnly);
            if (es.info() != Eigen::Success)
                throw ConvergenceError("eig_noconv", "tridiagonal eigensolve failed");
            if (exhausted) return pick_two_distinct(es.eigenvalues(), distinct_tol);

            const auto pair = pick_two_distinct(es.eigenvalues(), distinct_tol);
            if (have_prev && std::abs(pair.lambda0 - prev0) < stab_tol &&
                std::abs(pair.lambda1 - prev1) < stab_tol)
                ++stable;
            else
                stable = 0;
            prev0 = pair.lambda0;
            prev1 = pair.lambda1;
            have_prev = true;

            if (stable >= 2) {
                // Confirm with explicit Ritz residuals beta_j * |bottom row|.
                es.computeFromTridiagonal(alpha.head(j + 1), beta.head(j),
                                          Eigen::ComputeEigenvectors);
                const auto& lam = es.eigenvalues();
                const auto& q = es.eigenvectors();
                int idx1 = -1;
                for (Eigen::Index k = 1; k <= j; ++k)
                    if (lam[k] - lam[0] > distinct_tol) {
                        idx1 = static_cast<int>(k);
                        break;
                    }
                const double r0 = beta[j] * std::abs(q(j, 0));
                const double r1 = idx1 < 0 ? scale : beta[j] * std::abs(q(j, idx1));
                if (idx1 >= 0 && r0 < opts.tol * scale && r1 < opts.tol * scale)
                    return {lam[0], lam[idx1]};
                stable = 0;
            }
        }
        if (!last) v.push_back(w / beta[j]);
    }
    throw ConvergenceError("eig_noconv", "Lanczos eigensolve did not converge in " +
                                             std::to_string(cap) + " iterations");
}

LowestPair lowest_two_distinct(const GaugeMatrix& m, double distinct_tol,
                               const LanczosOptions& opts) {
    if (m.dimension() <= kDenseEigCutoff)
        return lowest_two_distinct_dense(m, distinct_tol);
    return lowest_two_distinct_lanczos(m, distinct_tol, opts);
}

}  // namespace misanneal
