#include "misanneal/analysis.hpp"

#include <chrono>
#include <cmath>

#include "misanneal/errors.hpp"
#include "misanneal/parallel.hpp"
#include "misanneal/prng.hpp"

namespace misanneal {

double mean_size(const VectorC& psi, const IsBasis& basis) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < psi.size(); ++j)
        acc += std::norm(psi[j]) * basis.size_of(static_cast<std::size_t>(j));
    return acc;
}

double ratio(const VectorC& psi, const IsBasis& basis, const MisResult& mis) {
    if (mis.alpha < 1) throw ParseError("ratio needs alpha >= 1");
    return mean_size(psi, basis) / mis.alpha;
}

double mis_probability(const VectorC& psi, const IsBasis& basis) {
    double acc = 0.0;
    for (const auto j : basis.mis_indices())
        acc += std::norm(psi[static_cast<Eigen::Index>(j)]);
    return acc;
}

Graph GeneratorSpec::make(std::uint64_t seed) const {
    switch (kind) {
        case GeneratorKind::kGnp:
            return gen_gnp(n, p, seed);
        case GeneratorKind::kGnm:
            return gen_gnm(n, m, seed);
        case GeneratorKind::kSpider:
            return spider(n);
        case GeneratorKind::kEdgeless:
            return edgeless(n);
    }
    throw ParseError("unknown generator kind");
}

std::string GeneratorSpec::name() const {
    switch (kind) {
        case GeneratorKind::kGnp:
            return "gnp";
        case GeneratorKind::kGnm:
            return "gnm";
        case GeneratorKind::kSpider:
            return "spider";
        case GeneratorKind::kEdgeless:
            return "edgeless";
    }
    return "unknown";
}

int GeneratorSpec::num_vertices() const {
    return kind == GeneratorKind::kSpider ? 2 * n + 1 : n;
}

Schedule ScheduleSpec::make(int n) const {
    if (total_time > 0) return make_schedule(total_time, n, omega_phi, steps);
    return schedule_for_graph(n, gamma, omega_phi, steps);
}

EnsembleResult run_ensemble(const GeneratorSpec& generator, int count,
                            const ScheduleSpec& schedule, std::uint64_t master_seed,
                            const EnsembleOptions& opts) {
    if (count < 1) throw ParseError("ensemble count must be >= 1");
    EnsembleResult result;
    result.generator = generator;
    result.schedule = schedule;
    result.count = count;
    result.master_seed = master_seed;
    result.runs.resize(static_cast<std::size_t>(count));
    std::vector<double> doubling_dn(static_cast<std::size_t>(count), 0.0);

    parallel_for_index(
        static_cast<std::size_t>(count), opts.parallelism, [&](std::size_t i) {
            RunRecord& rec = result.runs[i];
            rec.seed = split_seed(master_seed, i);
            rec.generator = generator.name();
            const auto t0 = std::chrono::steady_clock::now();
            const Graph g = generator.make(rec.seed);
            rec.n = g.num_vertices();
            rec.m = g.num_edges();
            try {
                const IsBasis basis = build_basis(g, opts.basis_cap);
                const MisResult mis = exact_mis(g);
                const Schedule sched = schedule.make(g.num_vertices());
                const VectorC psi = evolve(basis, sched, initial_state(basis), opts.evolve);
                rec.alpha = mis.alpha;
                rec.mean_size = mean_size(psi, basis);
                rec.ratio = ratio(psi, basis, mis);
                rec.mis_probability = mis_probability(psi, basis);
                if (opts.step_doubling_check) {
                    Schedule doubled = sched;
                    doubled.steps = 2 * sched.steps;
                    const VectorC psi2 =
                        evolve(basis, doubled, initial_state(basis), opts.evolve);
                    doubling_dn[i] = std::abs(mean_size(psi2, basis) - rec.mean_size);
                }
            } catch (const CapExceededError& err) {
                rec.skipped = true;
                rec.skip_reason = err.what();
            }
            rec.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        });

    double sum = 0.0, sum_sq = 0.0;
    int completed = 0;
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const auto& rec = result.runs[i];
        if (rec.skipped) {
            ++result.skip_count;
            continue;
        }
        sum += rec.ratio;
        sum_sq += rec.ratio * rec.ratio;
        ++completed;
        result.max_step_doubling_dn =
            std::max(result.max_step_doubling_dn, doubling_dn[i]);
    }
    if (completed > 0) {
        result.r_bar = sum / completed;
        result.r_variance = std::max(0.0, sum_sq / completed - result.r_bar * result.r_bar);
        result.r_stderr = std::sqrt(result.r_variance / completed);
    }
    return result;
}

}  // namespace misanneal
