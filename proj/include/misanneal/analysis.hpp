#ifndef MISANNEAL_ANALYSIS_HPP
#define MISANNEAL_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "misanneal/basis.hpp"
#include "misanneal/dynamics.hpp"
#include "misanneal/graph.hpp"

namespace misanneal {

// Size observable N_bar = sum_j |a_j|^2 N_j.
double mean_size(const VectorC& psi, const IsBasis& basis);

// Approximation ratio r = N_bar / alpha, in [0, 1].
double ratio(const VectorC& psi, const IsBasis& basis, const MisResult& mis);

// Total probability on the maximum-size states.
double mis_probability(const VectorC& psi, const IsBasis& basis);

enum class GeneratorKind { kGnp, kGnm, kSpider, kEdgeless };

// Seedable graph family; `n` is the leg count for spiders and the vertex
// count otherwise.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::kGnp;
    int n = 0;
    double p = 0.5;  // gnp only
    int m = 0;       // gnm only

    Graph make(std::uint64_t seed) const;
    std::string name() const;       // "gnp" | "gnm" | "spider" | "edgeless"
    int num_vertices() const;       // vertices of the generated graphs

    static GeneratorSpec gnp(int n, double p) { return {GeneratorKind::kGnp, n, p, 0}; }
    static GeneratorSpec gnm(int n, int m) { return {GeneratorKind::kGnm, n, 0.0, m}; }
    static GeneratorSpec gnm_equal_n(int n) { return gnm(n, n); }
    static GeneratorSpec spider_legs(int legs) {
        return {GeneratorKind::kSpider, legs, 0.0, 0};
    }
    static GeneratorSpec edgeless_n(int n) {
        return {GeneratorKind::kEdgeless, n, 0.0, 0};
    }
};

// Schedule recipe applied to each member graph: T = n^gamma unless
// total_time > 0 pins it, steps <= 0 picks the default step count.
struct ScheduleSpec {
    double gamma = 2.0;
    double total_time = 0.0;
    double omega_phi = 1.0;
    int steps = 0;

    Schedule make(int n) const;
};

// One anneal outcome.  A member whose basis overflows the cap is recorded
// with skipped = true and excluded from aggregates.
struct RunRecord {
    int n = 0;
    int m = 0;
    std::string generator;
    std::uint64_t seed = 0;
    int alpha = 0;
    double mean_size = 0.0;
    double ratio = 0.0;
    double mis_probability = 0.0;
    double runtime_ms = 0.0;
    bool skipped = false;
    std::string skip_reason;
};

struct EnsembleOptions {
    int parallelism = 1;
    std::size_t basis_cap = kDefaultBasisCap;
    EvolveOptions evolve;
    // Re-run every member at doubled steps and record the largest |delta
    // N_bar|; triples the cost, used by convergence checks.
    bool step_doubling_check = false;
};

struct EnsembleResult {
    GeneratorSpec generator;
    ScheduleSpec schedule;
    int count = 0;
    std::uint64_t master_seed = 0;
    std::vector<RunRecord> runs;     // one per member, index order
    double r_bar = 0.0;              // mean ratio over completed members
    double r_variance = 0.0;         // population variance over completed members
    double r_stderr = 0.0;           // sqrt(variance / completed)
    int skip_count = 0;
    double max_step_doubling_dn = 0.0;  // only when step_doubling_check
};

// Member i uses seed split_seed(master_seed, i): generate, enumerate basis,
// solve MIS exactly, anneal, score.  Aggregates are independent of the
// parallelism degree.
EnsembleResult run_ensemble(const GeneratorSpec& generator, int count,
                            const ScheduleSpec& schedule, std::uint64_t master_seed,
                            const EnsembleOptions& opts = {});

}  // namespace misanneal

#endif
