// Command-line driver: `estimate` runs one algorithm over a seed sweep and
// writes per-trial rows plus a summary; `sweep` repeats an experiment over a
// size ladder and reports fitted log-log query slopes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "edgeest/errors.hpp"
#include "edgeest/experiment.hpp"
#include "edgeest/is_estimator.hpp"

namespace {

using edgeest::ExperimentConfig;

struct CommonFlags {
    std::string config_path;
    std::string graph;
    std::string algo = "bis";
    double eps = 0.2;
    std::string preset = "practical";
    std::uint64_t trials = 1;
    std::int64_t seed = -1; // -1: EDGEEST_SEED env var or 1
    std::string out;
    std::string format = "csv";
    edgeest::Vertex vertex = 0;
    unsigned threads = 1;
    bool timing = false;
    std::string trace_path;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--config", flags.config_path, "JSON config file mirroring the flags");
    cmd.add_option("--graph", flags.graph, "edge-list file or gen:family:key=val,...");
    cmd.add_option("--algo", flags.algo, "bis|is|exact-bis|exact-is|bis-degree");
    cmd.add_option("--eps", flags.eps, "target relative error in (0,1)");
    cmd.add_option("--preset", flags.preset, "practical|theory");
    cmd.add_option("--trials", flags.trials, "number of seeded trials");
    cmd.add_option("--seed", flags.seed, "base seed (default: EDGEEST_SEED env var or 1)");
    cmd.add_option("--out", flags.out, "output path (default: stdout)");
    cmd.add_option("--format", flags.format, "csv|json");
    cmd.add_option("--vertex", flags.vertex, "target vertex for bis-degree");
    cmd.add_option("--threads", flags.threads, "trial work-pool size");
    cmd.add_flag("--timing", flags.timing,
                 "record wall_ms per trial (off by default; keeps output reproducible)");
    cmd.add_option("--trace", flags.trace_path,
                   "dump a query trace of trial 0 (type, |S|, |V|, answer)");
}

ExperimentConfig resolve_config(const CLI::App& cmd, const CommonFlags& flags,
                                std::vector<std::uint64_t>* sizes) {
    ExperimentConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) throw edgeest::ConfigError("cannot open config file: " + flags.config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        edgeest::CliConfig file = edgeest::parse_config_json(buf.str());
        config = file.experiment;
        if (sizes && sizes->empty()) *sizes = file.sizes;
    }

    auto given = [&](const std::string& name) { return cmd.count(name) > 0; };
    if (given("--graph")) config.graph = flags.graph;
    if (given("--algo")) config.algo = edgeest::parse_algo(flags.algo);
    if (given("--eps")) config.eps = flags.eps;
    if (given("--preset")) {
        if (flags.preset != "practical" && flags.preset != "theory")
            throw edgeest::ConfigError("unknown preset: " + flags.preset);
        config.preset =
            flags.preset == "practical" ? edgeest::Preset::practical : edgeest::Preset::theory;
    }
    if (given("--trials")) config.trials = flags.trials;
    if (given("--out")) config.out = flags.out;
    if (given("--format")) {
        if (flags.format != "csv" && flags.format != "json")
            throw edgeest::ConfigError("unknown format: " + flags.format);
        config.format = flags.format == "csv" ? edgeest::OutFormat::csv : edgeest::OutFormat::json;
    }
    if (given("--vertex")) config.vertex = flags.vertex;
    if (given("--threads")) config.threads = flags.threads;
    if (flags.timing) config.timing = true;

    if (given("--seed")) {
        config.base_seed = std::uint64_t(flags.seed);
    } else if (!flags.config_path.empty()) {
        // keep the config file's seed
    } else if (const char* env = std::getenv("EDGEEST_SEED")) {
        config.base_seed = std::strtoull(env, nullptr, 10);
    }
    return config;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw edgeest::ConfigError("cannot open output file: " + path);
    out << text;
}

void print_summary(const edgeest::Summary& s) {
    std::cerr << "trials=" << s.trials << " success_rate=" << s.success_rate
              << " rel_error_p50=" << s.rel_error_p50 << " rel_error_p95=" << s.rel_error_p95
              << " bis_p50=" << s.bis_p50 << " bis_p95=" << s.bis_p95 << " is_p50=" << s.is_p50
              << " is_p95=" << s.is_p95 << "\n";
}

// Replays trial 0 against a tracing session and dumps one line per query.
void dump_trace(const std::string& path, const ExperimentConfig& config) {
    const edgeest::Graph graph = edgeest::load_graph_spec(config.graph);
    const std::size_t n = graph.vertex_count();
    edgeest::OracleSession session(graph);
    session.enable_trace(1u << 20);
    const std::uint64_t seed = config.base_seed;
    switch (config.algo) {
        case edgeest::Algo::bis: {
            edgeest::Rng rng(seed, edgeest::RngStream::bis_estimator);
            (void)edgeest::bis_estimate_edges(
                session, edgeest::BisParams::make(config.eps, n, config.preset), rng);
            break;
        }
        case edgeest::Algo::is: {
            edgeest::Rng rng(seed, edgeest::RngStream::is_estimator);
            (void)edgeest::is_estimate_edges(
                session, edgeest::IsParams::make(config.eps, n, config.preset), rng);
            break;
        }
        case edgeest::Algo::exact_bis:
            (void)edgeest::bis_exact_all(session);
            break;
        case edgeest::Algo::exact_is:
            (void)edgeest::is_exact_within(session, edgeest::VertexSet::full(n));
            break;
        case edgeest::Algo::bis_degree: {
            edgeest::Rng rng(seed, edgeest::RngStream::degree_estimator);
            (void)edgeest::bis_estimate_degree(session, config.vertex, config.eps, rng);
            break;
        }
    }
    std::ofstream out(path);
    if (!out) throw edgeest::ConfigError("cannot open trace file: " + path);
    out << "# query trace: type |S| |V| answer (trial seed " << seed << ")\n";
    for (const auto& entry : session.trace())
        out << (entry.kind == edgeest::QueryKind::bis ? "bis " : "is ") << entry.s_size << ' '
            << entry.v_size << ' ' << (entry.answer ? 1 : 0) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge estimation with independent-set-type oracles"};
    app.require_subcommand(1);

    CommonFlags est_flags;
    CLI::App* est = app.add_subcommand("estimate", "run an estimator over a seed sweep");
    add_common_flags(*est, est_flags);

    CommonFlags sweep_flags;
    std::string sizes_arg;
    CLI::App* sweep = app.add_subcommand("sweep", "run a size-ladder scaling sweep");
    add_common_flags(*sweep, sweep_flags);
    sweep->add_option("--sizes", sizes_arg, "comma-separated ladder, e.g. 64,128,256,512");

    CLI11_PARSE(app, argc, argv);

    try {
        if (est->parsed()) {
            ExperimentConfig config = resolve_config(*est, est_flags, nullptr);
            const edgeest::ExperimentResult result = edgeest::run_experiment(config);
            write_output(config.out, config.format == edgeest::OutFormat::csv
                                         ? edgeest::rows_to_csv(result.rows)
                                         : edgeest::result_to_json(config, result));
            print_summary(result.summary);
            if (!est_flags.trace_path.empty()) dump_trace(est_flags.trace_path, config);
        } else {
            std::vector<std::uint64_t> sizes;
            ExperimentConfig config = resolve_config(*sweep, sweep_flags, &sizes);
            if (!sizes_arg.empty()) {
                sizes.clear();
                std::istringstream ss(sizes_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) sizes.push_back(std::stoull(tok));
            }
            const edgeest::SweepResult result = edgeest::scaling_sweep(config, sizes);
            write_output(config.out, config.format == edgeest::OutFormat::csv
                                         ? edgeest::sweep_to_csv(result)
                                         : edgeest::sweep_to_json(config, result));
            std::cerr << "slope_queries_vs_n=" << result.slope_queries_vs_n
                      << " slope_queries_vs_m=" << result.slope_queries_vs_m << "\n";
        }
    } catch (const edgeest::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
