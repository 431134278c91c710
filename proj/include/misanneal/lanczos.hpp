#ifndef MISANNEAL_LANCZOS_HPP
#define MISANNEAL_LANCZOS_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "misanneal/gauge.hpp"

namespace misanneal {

using VectorC = Eigen::VectorXcd;

// Krylov propagator controls.  tol is the residual bound on the projected
// exponential, absolute against a unit-norm input.
struct KrylovOptions {
    int max_dim = 48;
    double tol = 1e-12;
};

// y = exp(i * scale * M) * x for Hermitian M, via Lanczos projection: the
// small projected tridiagonal is exponentiated by dense eigendecomposition.
// Exact on happy breakdown.  Throws ConvergenceError("krylov_stall") if the
// residual estimate never reaches tol within max_dim iterations.
VectorC expi_apply(const GaugeMatrix& m, double scale, const VectorC& x,
                   const KrylovOptions& opts = {});

// Reference path: full dense eigendecomposition.  Validation scale only.
VectorC expi_apply_dense(const GaugeMatrix& m, double scale, const VectorC& x);

// Two lowest distinct eigenvalues; eigenvalues closer than distinct_tol are
// treated as one level.
struct LowestPair {
    double lambda0;
    double lambda1;
};

struct LanczosOptions {
    int max_iter = 600;
    double tol = 1e-11;             // residual, relative to spectral scale
    std::uint64_t seed = 0x6d697361;  // start-vector stream
};

// Dense solve for every eigenvalue, then pick the two lowest distinct ones.
LowestPair lowest_two_distinct_dense(const GaugeMatrix& m, double distinct_tol);

// Lanczos with full reorthogonalization from a seeded random start vector.
// Convergence: the two target Ritz values stabilize across checks, confirmed
// by an explicit residual test.  Throws ConvergenceError("eig_noconv") if
// max_iter is exhausted first.
LowestPair lowest_two_distinct_lanczos(const GaugeMatrix& m, double distinct_tol,
                                       const LanczosOptions& opts = {});

// Dispatches on dimension: dense up to kDenseEigCutoff, Lanczos above.
inline constexpr std::int64_t kDenseEigCutoff = 2048;
LowestPair lowest_two_distinct(const GaugeMatrix& m, double distinct_tol,
                               const LanczosOptions& opts = {});

}  // namespace misanneal

#endif
