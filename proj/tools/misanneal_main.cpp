// Command-line front end: graph generation, H0/gauge validation, gap scans,
// single anneals, and seeded ensembles with reproducible file outputs.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include "misanneal/analysis.hpp"
#include "misanneal/dynamics.hpp"
#include "misanneal/errors.hpp"
#include "misanneal/gauge.hpp"
#include "misanneal/output.hpp"
#include "misanneal/prng.hpp"
#include "misanneal/spectra.hpp"
#include "misanneal/version.hpp"

namespace {

using namespace misanneal;
namespace fs = std::filesystem;

struct CommonFlags {
    std::string out_dir = ".";
    std::string format = "csv";
};

struct GraphFlags {
    std::vector<std::string> gnp;  // N P
    std::vector<std::string> gnm;  // N M
    int gnm_equal_n = -1;
    int spider_legs = -1;
    int edgeless_n = -1;
    std::string graph_file;
    std::uint64_t seed = 0;
};

struct ScheduleFlags {
    double total_time = 0.0;
    double gamma = 2.0;
    double omega_phi = 1.0;
    int steps = 0;

    ScheduleSpec spec() const {
        ScheduleSpec s;
        s.gamma = gamma;
        s.total_time = total_time;
        s.omega_phi = omega_phi;
        s.steps = steps;
        return s;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--out", flags.out_dir, "Output directory (created if missing)");
    cmd->add_option("--format", flags.format, "Table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_graph_source(CLI::App* cmd, GraphFlags& flags, bool allow_file = true) {
    cmd->add_option("--gnp", flags.gnp, "G(n,p): N P")->expected(2);
    cmd->add_option("--gnm", flags.gnm, "G(n,m): N M")->expected(2);
    cmd->add_option("--gnm-equal-n", flags.gnm_equal_n, "G(n,m) with m = n");
    cmd->add_option("--spider", flags.spider_legs, "Spider graph with N legs");
    cmd->add_option("--edgeless", flags.edgeless_n, "Edgeless graph on N vertices");
    if (allow_file) cmd->add_option("--graph", flags.graph_file, "Graph file to load");
    cmd->add_option("--seed", flags.seed, "Generator seed (64-bit)");
}

void add_schedule(CLI::App* cmd, ScheduleFlags& flags) {
    cmd->add_option("--total-time", flags.total_time, "Run time T (overrides --gamma)");
    cmd->add_option("--gamma", flags.gamma, "Exponent in T = n^gamma");
    cmd->add_option("--omega-phi", flags.omega_phi, "Phase drive rate");
    cmd->add_option("--steps", flags.steps, "Integrator steps (0 = auto)");
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": \"" + text + "\"");
    }
}

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": \"" + text + "\"");
    }
}

// Exactly one source; returns the generator spec, or nullopt for --graph.
std::optional<GeneratorSpec> generator_of(const GraphFlags& flags) {
    int sources = 0;
    std::optional<GeneratorSpec> gen;
    if (!flags.gnp.empty()) {
        ++sources;
        gen = GeneratorSpec::gnp(parse_int(flags.gnp[0], "--gnp N"),
                                 parse_real(flags.gnp[1], "--gnp P"));
    }
    if (!flags.gnm.empty()) {
        ++sources;
        gen = GeneratorSpec::gnm(parse_int(flags.gnm[0], "--gnm N"),
                                 parse_int(flags.gnm[1], "--gnm M"));
    }
    if (flags.gnm_equal_n >= 0) {
        ++sources;
        gen = GeneratorSpec::gnm_equal_n(flags.gnm_equal_n);
    }
    if (flags.spider_legs >= 0) {
        ++sources;
        gen = GeneratorSpec::spider_legs(flags.spider_legs);
    }
    if (flags.edgeless_n >= 0) {
        ++sources;
        gen = GeneratorSpec::edgeless_n(flags.edgeless_n);
    }
    if (!flags.graph_file.empty()) ++sources;
    if (sources != 1)
        throw ParseError("exactly one graph source required "
                         "(--gnp | --gnm | --gnm-equal-n | --spider | --edgeless | --graph)");
    return gen;
}

Graph graph_of(const GraphFlags& flags, std::string& label) {
    const auto gen = generator_of(flags);
    if (!gen) {
        label = "file";
        return load_graph_file(flags.graph_file);
    }
    label = gen->name();
    return gen->make(flags.seed);
}

Json graph_config_json(const GraphFlags& flags) {
    Json j;
    if (!flags.gnp.empty()) j["gnp"] = {flags.gnp[0], flags.gnp[1]};
    if (!flags.gnm.empty()) j["gnm"] = {flags.gnm[0], flags.gnm[1]};
    if (flags.gnm_equal_n >= 0) j["gnm_equal_n"] = flags.gnm_equal_n;
    if (flags.spider_legs >= 0) j["spider"] = flags.spider_legs;
    if (flags.edgeless_n >= 0) j["edgeless"] = flags.edgeless_n;
    if (!flags.graph_file.empty()) j["graph"] = flags.graph_file;
    j["seed"] = flags.seed;
    return j;
}

Json schedule_json(const Schedule& s) {
    Json j;
    j["total_time"] = s.total_time;
    if (s.gamma > 0) j["gamma"] = s.gamma;
    j["omega_phi"] = s.omega_phi;
    j["omega_theta"] = s.omega_theta;
    j["steps"] = s.steps;
    return j;
}

void write_manifest(const CommonFlags& common, const std::string& subcommand,
                    Json config, const std::vector<std::string>& outputs) {
    Json m;
    m["tool"] = kProjectName;
    m["version"] = kProjectVersion;
    m["subcommand"] = subcommand;
    m["config"] = std::move(config);
    m["outputs"] = outputs;
    write_text_file((fs::path(common.out_dir) / "manifest.json").string(),
                    m.dump(2) + "\n");
}

void ensure_out_dir(const CommonFlags& common) {
    fs::create_directories(common.out_dir);
}

std::string out_path(const CommonFlags& common, const std::string& name) {
    return (fs::path(common.out_dir) / name).string();
}

// ---- gen ----------------------------------------------------------------

int run_gen(const CommonFlags& common, const GraphFlags& gflags) {
    ensure_out_dir(common);
    std::string label;
    const Graph g = graph_of(gflags, label);
    save_graph_file(g, out_path(common, "graph.txt"));
    Json config = graph_config_json(gflags);
    write_manifest(common, "gen", std::move(config), {"graph.txt"});
    std::cout << label << " graph: n=" << g.num_vertices() << " m=" << g.num_edges()
              << " -> " << out_path(common, "graph.txt") << "\n";
    return 0;
}

// ---- validate -----------------------------------------------------------

int run_validate(const CommonFlags& common, const GraphFlags& gflags, double delta,
                 int tuples) {
    ensure_out_dir(common);
    std::string label;
    const Graph g = graph_of(gflags, label);
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (n > 14) throw ParseError("validate needs n <= 14 for the exhaustive sweep");

    const IsBasis basis = build_basis(g);
    bool all_ok = true;
    Json report;
    report["n"] = n;
    report["m"] = m;
    report["dimension"] = basis.dimension();

    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "ok:   " : "FAIL: ") << name << " (" << detail << ")\n";
        report["checks"][name] = ok;
        all_ok = all_ok && ok;
    };

    const H0Scan scan = h0_exhaustive_scan(g, delta);
    check("ground_energy", scan.ground_energy == -m * delta,
          "found " + format_double(scan.ground_energy) + ", expected " +
              format_double(-m * delta));
    check("ground_degeneracy", scan.ground_degeneracy == basis.dimension(),
          std::to_string(scan.ground_degeneracy) + " states vs dimension " +
              std::to_string(basis.dimension()));
    if (m > 0)
        check("first_excited", scan.first_excited == -m * delta + 4 * delta,
              "found " + format_double(scan.first_excited) + ", expected " +
                  format_double(-m * delta + 4 * delta));
    else
        std::cout << "note: edgeless graph has a flat spectrum, gap check skipped\n";

    if (n <= 12 && basis.dimension() <= 4096) {
        Xoshiro256StarStar rng(0xba11ad);
        double worst = 0.0, worst_far = 0.0;
        for (int k = 0; k < tuples; ++k) {
            const double theta = rng.uniform01() * 3.1;
            const double w_phi = 0.5 + rng.uniform01();
            const double w_th = rng.uniform01() * 0.2;
            const GaugeMatrix analytic =
                assemble_gauge(basis, {theta, w_phi, w_th});
            const GaugeMatrix fd =
                berry_connection_fd(basis, theta, 0.3, w_th, w_phi, 1e-6);
            const auto diff = (analytic.dense() - fd.dense()).eval();
            double far = 0.0;
            for (const auto& e : fd.entries) {
                const auto pop_row = basis.size_of(static_cast<std::size_t>(e.row));
                const auto pop_col = basis.size_of(static_cast<std::size_t>(e.col));
                if (std::abs(pop_row - pop_col) != 1)
                    far = std::max(far, std::abs(e.value));
            }
            worst = std::max(worst, diff.cwiseAbs().maxCoeff());
            worst_far = std::max(worst_far, far);
        }
        check("gauge_matches_fd", worst < 1e-6,
              "max deviation " + format_double(worst) + " over " +
                  std::to_string(tuples) + " tuples");
        check("no_far_couplings", worst_far < 1e-8,
              "max non-hop coupling " + format_double(worst_far));
    } else {
        std::cout << "note: finite-difference cross-check skipped (needs n <= 12, "
                     "dimension <= 4096)\n";
    }

    report["pass"] = all_ok;
    write_text_file(out_path(common, "validate.json"), report.dump(2) + "\n");
    Json config = graph_config_json(gflags);
    config["delta"] = delta;
    write_manifest(common, "validate", std::move(config), {"validate.json"});
    return all_ok ? 0 : 1;
}

// ---- gap-scan -----------------------------------------------------------

int run_gap_scan(const CommonFlags& common, const GraphFlags& gflags,
                 const ScheduleFlags& sflags, int grid, bool include_omega_theta,
                 bool svg, int parallelism) {
    ensure_out_dir(common);
    std::string label;
    const Graph g = graph_of(gflags, label);
    const IsBasis basis = build_basis(g);

    double omega_theta = 0.0;
    if (include_omega_theta) {
        const Schedule s = sflags.spec().make(g.num_vertices());
        omega_theta = s.omega_theta;
    }
    GapScanOptions opts;
    opts.parallelism = parallelism;
    const GapCurve curve =
        gap_scan(basis, sflags.omega_phi, omega_theta, grid, opts);

    std::vector<std::string> outputs;
    if (common.format == "json") {
        Json rows = Json::array();
        for (std::size_t k = 0; k < curve.thetas.size(); ++k)
            rows.push_back({{"theta", curve.thetas[k]},
                            {"lambda0", curve.lambda0[k]},
                            {"lambda1", curve.lambda1[k]},
                            {"gap", curve.gap[k]}});
        write_text_file(out_path(common, "gap_curve.json"), rows.dump(2) + "\n");
        outputs.push_back("gap_curve.json");
    } else {
        write_text_file(out_path(common, "gap_curve.csv"), gap_curve_csv(curve));
        outputs.push_back("gap_curve.csv");
    }
    write_text_file(
        out_path(common, "gap_summary.json"),
        gap_summary_json(g.num_vertices(), basis.dimension(), curve).dump(2) + "\n");
    outputs.push_back("gap_summary.json");

    if (svg) {
        SvgSeries series{label + " gap", {}};
        for (std::size_t k = 0; k < curve.thetas.size(); ++k)
            series.points.emplace_back(curve.thetas[k], curve.gap[k]);
        write_text_file(out_path(common, "gap_curve.svg"),
                        svg_line_chart("Spectral gap of A(theta)", "theta", "gap",
                                       {series}));
        outputs.push_back("gap_curve.svg");
    }

    Json config = graph_config_json(gflags);
    config["grid"] = grid;
    config["omega_phi"] = sflags.omega_phi;
    config["include_omega_theta"] = include_omega_theta;
    if (include_omega_theta) config["omega_theta"] = omega_theta;
    write_manifest(common, "gap-scan", std::move(config), outputs);
    std::cout << "min gap " << format_double(curve.min_gap) << " at theta "
              << format_double(curve.theta_at_min) << " (dimension "
              << basis.dimension() << ")\n";
    return 0;
}

// ---- anneal -------------------------------------------------------------

int run_anneal(const CommonFlags& common, const GraphFlags& gflags,
               const ScheduleFlags& sflags, int trajectory_samples, bool dump_basis) {
    ensure_out_dir(common);
    std::string label;
    const Graph g = graph_of(gflags, label);
    const IsBasis basis = build_basis(g);
    const MisResult mis = exact_mis(g);
    const Schedule sched = sflags.spec().make(g.num_vertices());

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<TrajectoryPoint> trajectory;
    VectorC psi;
    if (trajectory_samples > 0) {
        trajectory = evolve_trajectory(basis, sched, initial_state(basis),
                                       trajectory_samples);
        psi = trajectory.back().psi;
    } else {
        psi = evolve(basis, sched, initial_state(basis));
    }
    const double runtime_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();

    RunRecord rec;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    rec.generator = label;
    rec.seed = gflags.seed;
    rec.alpha = mis.alpha;
    rec.mean_size = mean_size(psi, basis);
    rec.ratio = ratio(psi, basis, mis);
    rec.mis_probability = mis_probability(psi, basis);
    rec.runtime_ms = runtime_ms;

    Json run = run_record_json(rec);
    run["dimension"] = basis.dimension();
    run["schedule"] = schedule_json(sched);
    write_text_file(out_path(common, "run.json"), run.dump(2) + "\n");
    std::vector<std::string> outputs{"run.json"};

    if (!trajectory.empty()) {
        write_text_file(out_path(common, "trajectory.csv"), trajectory_csv(trajectory));
        outputs.push_back("trajectory.csv");
    }
    if (dump_basis) {
        write_text_file(out_path(common, "basis.csv"), basis_csv(basis));
        outputs.push_back("basis.csv");
    }

    Json config = graph_config_json(gflags);
    config["schedule"] = schedule_json(sched);
    if (trajectory_samples > 0) config["trajectory"] = trajectory_samples;
    write_manifest(common, "anneal", std::move(config), outputs);
    std::cout << "n=" << rec.n << " alpha=" << rec.alpha << " mean_size="
              << format_double(rec.mean_size) << " ratio=" << format_double(rec.ratio)
              << " mis_probability=" << format_double(rec.mis_probability) << "\n";
    return 0;
}

// ---- ensemble -----------------------------------------------------------

int run_ensemble_cmd(const CommonFlags& common, const GraphFlags& gflags,
                     const ScheduleFlags& sflags, int count,
                     std::uint64_t master_seed, int parallelism,
                     const std::vector<int>& sweep_n, bool svg) {
    ensure_out_dir(common);
    const auto gen = generator_of(gflags);
    if (!gen) throw ParseError("ensemble needs a generator, not a graph file");

    EnsembleOptions opts;
    opts.parallelism = parallelism;

    std::vector<std::string> outputs;
    Json summary;
    SvgSeries rbar_series{"r_bar", {}};

    auto run_one = [&](GeneratorSpec spec, const std::string& suffix) {
        const EnsembleResult result =
            run_ensemble(spec, count, sflags.spec(), master_seed, opts);
        const std::string table = "runs" + suffix;
        if (common.format == "json") {
            Json rows = Json::array();
            for (const auto& rec : result.runs) rows.push_back(run_record_json(rec));
            write_text_file(out_path(common, table + ".json"), rows.dump(2) + "\n");
            outputs.push_back(table + ".json");
        } else {
            write_text_file(out_path(common, table + ".csv"), runs_csv(result.runs));
            outputs.push_back(table + ".csv");
        }
        rbar_series.points.emplace_back(spec.num_vertices(), result.r_bar);
        std::cout << spec.name() << " n=" << spec.n << " count=" << result.count
                  << " r_bar=" << format_double(result.r_bar) << " variance="
                  << format_double(result.r_variance) << " skips="
                  << result.skip_count << "\n";
        return ensemble_summary_json(result);
    };

    if (sweep_n.empty()) {
        summary = run_one(*gen, "");
    } else {
        summary["ensembles"] = Json::array();
        for (const int n : sweep_n) {
            GeneratorSpec spec = *gen;
            spec.n = n;
            if (spec.kind == GeneratorKind::kGnm && gflags.gnm_equal_n >= 0)
                spec.m = n;
            summary["ensembles"].push_back(
                run_one(spec, "_n" + std::to_string(n)));
        }
    }
    write_text_file(out_path(common, "summary.json"), summary.dump(2) + "\n");
    outputs.push_back("summary.json");

    if (svg && rbar_series.points.size() > 1) {
        write_text_file(out_path(common, "rbar_vs_n.svg"),
                        svg_line_chart("Mean approximation ratio", "n", "r_bar",
                                       {rbar_series}));
        outputs.push_back("rbar_vs_n.svg");
    }

    Json config = graph_config_json(gflags);
    config["count"] = count;
    config["master_seed"] = master_seed;
    config["parallelism"] = parallelism;
    config["gamma"] = sflags.gamma;
    if (sflags.total_time > 0) config["total_time"] = sflags.total_time;
    config["omega_phi"] = sflags.omega_phi;
    if (sflags.steps > 0) config["steps"] = sflags.steps;
    if (!sweep_n.empty()) config["sweep_n"] = sweep_n;
    write_manifest(common, "ensemble", std::move(config), outputs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adiabatic maximum-independent-set annealing simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kProjectVersion));

    CommonFlags common;
    GraphFlags gflags;
    ScheduleFlags sflags;
    double delta = 1.0;
    int tuples = 5;
    int grid = 201;
    bool include_omega_theta = false;
    bool svg = false;
    int trajectory_samples = 0;
    bool dump_basis = false;
    int count = 200;
    std::uint64_t master_seed = 0;
    int parallelism = static_cast<int>(std::thread::hardware_concurrency());
    if (parallelism < 1) parallelism = 1;
    std::vector<int> sweep_n;

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
    add_common(gen_cmd, common);
    add_graph_source(gen_cmd, gflags, false);

    auto* validate_cmd =
        app.add_subcommand("validate", "Check H0 spectrum and gauge matrix");
    add_common(validate_cmd, common);
    add_graph_source(validate_cmd, gflags);
    validate_cmd->add_option("--delta", delta, "H0 coupling");
    validate_cmd->add_option("--tuples", tuples, "Random parameter tuples for the FD check");

    auto* scan_cmd = app.add_subcommand("gap-scan", "Spectral gap over theta");
    add_common(scan_cmd, common);
    add_graph_source(scan_cmd, gflags);
    add_schedule(scan_cmd, sflags);
    scan_cmd->add_option("--grid", grid, "Grid points in [0, pi]");
    scan_cmd->add_flag("--include-omega-theta", include_omega_theta,
                       "Include the omega_theta term in A");
    scan_cmd->add_flag("--svg", svg, "Also write an SVG chart");
    scan_cmd->add_option("--parallelism", parallelism, "Worker threads");

    auto* anneal_cmd = app.add_subcommand("anneal", "Single annealing run");
    add_common(anneal_cmd, common);
    add_graph_source(anneal_cmd, gflags);
    add_schedule(anneal_cmd, sflags);
    anneal_cmd->add_option("--trajectory", trajectory_samples,
                           "Write K state snapshots over theta");
    anneal_cmd->add_flag("--dump-basis", dump_basis, "Write the basis table");

    auto* ensemble_cmd = app.add_subcommand("ensemble", "Seeded ensemble of anneals");
    add_common(ensemble_cmd, common);
    add_graph_source(ensemble_cmd, gflags, false);
    add_schedule(ensemble_cmd, sflags);
    ensemble_cmd->add_option("--count", count, "Members per ensemble");
    ensemble_cmd->add_option("--master-seed", master_seed, "Seed-splitting root");
    ensemble_cmd->add_option("--parallelism", parallelism, "Worker threads");
    ensemble_cmd
        ->add_option("--sweep-n", sweep_n, "Run one ensemble per listed n")
        ->delimiter(',');
    ensemble_cmd->add_flag("--svg", svg, "Also write an r_bar vs n chart");

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) return run_gen(common, gflags);
        if (validate_cmd->parsed()) return run_validate(common, gflags, delta, tuples);
        if (scan_cmd->parsed())
            return run_gap_scan(common, gflags, sflags, grid, include_omega_theta, svg,
                                parallelism);
        if (anneal_cmd->parsed())
            return run_anneal(common, gflags, sflags, trajectory_samples, dump_basis);
        if (ensemble_cmd->parsed())
            return run_ensemble_cmd(common, gflags, sflags, count, master_seed,
                                    parallelism, sweep_n, svg);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
