#ifndef EDGEEST_EXPERIMENT_HPP
#define EDGEEST_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgeest/bis_estimator.hpp"
#include "edgeest/graph.hpp"

namespace edgeest {

enum class Algo { bis, is, exact_bis, exact_is, bis_degree };

Algo parse_algo(const std::string& name);
std::string algo_name(Algo algo);

enum class OutFormat { csv, json };

// One batch run: a graph source, an algorithm, and a seed sweep. Trial i
// uses seed base_seed + i; every trial gets a fresh OracleSession and the
// per-module RNG streams derive from the trial seed.
struct ExperimentConfig {
    std::string graph;              // edge-list path or "gen:family:key=val,..."
    Algo algo = Algo::bis;
    double eps = 0.2;
    Preset preset = Preset::practical;
    std::uint64_t trials = 1;
    std::uint64_t base_seed = 1;
    std::string out;                // output path; empty writes to stdout
    OutFormat format = OutFormat::csv;
    Vertex vertex = 0;              // bis-degree target vertex
    unsigned threads = 1;
    bool timing = false;            // fill wall_ms (off keeps reruns byte-identical)

    void validate() const;
};

struct TrialRow {
    std::uint64_t n = 0;
    std::uint64_t m_true = 0;
    double estimate = 0.0;
    double rel_error = 0.0;
    std::uint64_t bis_queries = 0;
    std::uint64_t is_queries = 0;
    std::uint64_t rounds = 0;
    std::uint64_t wall_ms = 0;
    std::uint64_t seed = 0;
    std::string flags;
};

struct Summary {
    std::uint64_t trials = 0;
    double success_rate = 0.0; // fraction of rows with rel_error <= eps
    double rel_error_p50 = 0.0;
    double rel_error_p95 = 0.0;
    std::uint64_t bis_p50 = 0;
    std::uint64_t bis_p95 = 0;
    std::uint64_t is_p50 = 0;
    std::uint64_t is_p95 = 0;
};

struct ExperimentResult {
    std::vector<TrialRow> rows;
    Summary summary;
};

// Parses the graph source: a "gen:..." generator string or an edge-list
// file path. The generator seed comes from the string's optional seed= key
// (default 1), so the graph is fixed across the trial sweep.
Graph load_graph_spec(const std::string& spec);

// Runs one trial directly against an existing graph (the in-process
// equivalent of one row of run_experiment).
TrialRow run_single_trial(const Graph& graph, const ExperimentConfig& config, std::uint64_t seed);

ExperimentResult run_experiment(const ExperimentConfig& config);

Summary summarize(const std::vector<TrialRow>& rows, double eps);

// Versioned CSV codec; every emitted file parses back to the same rows.
std::string rows_to_csv(const std::vector<TrialRow>& rows);
std::vector<TrialRow> rows_from_csv(std::istream& in);

std::string result_to_json(const ExperimentConfig& config, const ExperimentResult& result);

struct SweepRow {
    std::uint64_t n = 0;
    std::uint64_t m_true = 0;
    std::uint64_t queries_p50 = 0; // ledger total (the active oracle's count)
    std::uint64_t bis_p50 = 0;
    std::uint64_t is_p50 = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double slope_queries_vs_n = 0.0;
    double slope_queries_vs_m = 0.0;
};

// Runs the configured experiment across a size ladder (>= 4 sizes), sets
// n in the generator spec per rung, and fits log-log slopes of the median
// query count against n and against m.
SweepResult scaling_sweep(const ExperimentConfig& config, const std::vector<std::uint64_t>& sizes);

std::string sweep_to_csv(const SweepResult& sweep);
std::string sweep_to_json(const ExperimentConfig& config, const SweepResult& sweep);

// Least-squares slope of log10(y) against log10(x); points with
// non-positive coordinates are skipped.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

// JSON config file mirroring the CLI flags (keys: graph, algo, eps, preset,
// trials, seed, out, format, vertex, threads, timing, sizes).
struct CliConfig {
    ExperimentConfig experiment;
    std::vector<std::uint64_t> sizes;
};

CliConfig parse_config_json(const std::string& text);

} // namespace edgeest

#endif
