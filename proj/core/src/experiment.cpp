#include "edgeest/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "edgeest/errors.hpp"
#include "edgeest/graph_io.hpp"
#include "edgeest/is_estimator.hpp"

namespace edgeest {

Algo parse_algo(const std::string& name) {
    if (name == "bis") return Algo::bis;
    if (name == "is") return Algo::is;
    if (name == "exact-bis") return Algo::exact_bis;
    if (name == "exact-is") return Algo::exact_is;
    if (name == "bis-degree") return Algo::bis_degree;
    throw ConfigError("unknown algorithm: " + name);
}

std::string algo_name(Algo algo) {
    switch (algo) {
        case Algo::bis: return "bis";
        case Algo::is: return "is";
        case Algo::exact_bis: return "exact-bis";
        case Algo::exact_is: return "exact-is";
        case Algo::bis_degree: return "bis-degree";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (graph.empty()) throw ConfigError("graph source is required");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must be in (0,1)");
}

namespace {

struct GenSpec {
    GraphFamily family;
    GenParams params;
    std::uint64_t seed = 1;
};

GenSpec parse_gen_spec(const std::string& spec) {
    // gen:family:key=val,key=val
    const std::string body = spec.substr(4);
    const std::size_t colon = body.find(':');
    GenSpec out{parse_family(body.substr(0, colon)), {}, 1};
    if (colon != std::string::npos) {
        std::istringstream fields(body.substr(colon + 1));
        std::string field;
        while (std::getline(fields, field, ',')) {
            if (field.empty()) continue;
            const std::size_t eq = field.find('=');
            if (eq == std::string::npos)
                throw ConfigError("generator parameter must be key=value: " + field);
            const std::string key = field.substr(0, eq);
            double value = 0.0;
            try {
                value = std::stod(field.substr(eq + 1));
            } catch (const std::exception&) {
                throw ConfigError("bad generator parameter value: " + field);
            }
            if (key == "seed")
                out.seed = std::uint64_t(value);
            else
                out.params[key] = value;
        }
    }
    return out;
}

Graph generate_from_spec(const GenSpec& spec) {
    Rng rng(spec.seed, RngStream::graph_gen);
    try {
        return generate(spec.family, spec.params, rng);
    } catch (const InvalidGeneratorParams& e) {
        throw ConfigError(e.what());
    }
}

std::uint64_t ground_truth(const Graph& graph, const ExperimentConfig& config) {
    if (config.algo == Algo::bis_degree) {
        if (config.vertex >= graph.vertex_count())
            throw ConfigError("bis-degree vertex out of range");
        return graph.degree(config.vertex);
    }
    return graph.edge_count();
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const auto rank = std::size_t(std::ceil(q * double(values.size())));
    return values[std::min(values.size() - 1, rank > 0 ? rank - 1 : 0)];
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

Graph load_graph_spec(const std::string& spec) {
    if (spec.rfind("gen:", 0) == 0) {
        try {
            return generate_from_spec(parse_gen_spec(spec));
        } catch (const InvalidGeneratorParams& e) {
            throw ConfigError(e.what());
        }
    }
    return load_edge_list_file(spec);
}

TrialRow run_single_trial(const Graph& graph, const ExperimentConfig& config, std::uint64_t seed) {
    const std::uint64_t m_true = ground_truth(graph, config);
    OracleSession session(graph);
    const auto t0 = std::chrono::steady_clock::now();

    EstimateReport report;
    report.seed = seed;
    report.preset = preset_name(config.preset);
    switch (config.algo) {
        case Algo::bis: {
            Rng rng(seed, RngStream::bis_estimator);
            report = bis_estimate_edges(
                session, BisParams::make(config.eps, graph.vertex_count(), config.preset), rng);
            break;
        }
        case Algo::is: {
            Rng rng(seed, RngStream::is_estimator);
            report = is_estimate_edges(
                session, IsParams::make(config.eps, graph.vertex_count(), config.preset), rng);
            break;
        }
        case Algo::exact_bis: {
            report.estimate = double(bis_exact_all(session).count());
            report.exact = true;
            break;
        }
        case Algo::exact_is: {
            report.estimate =
                double(is_exact_within(session, VertexSet::full(graph.vertex_count())).count());
            report.exact = true;
            break;
        }
        case Algo::bis_degree: {
            Rng rng(seed, RngStream::degree_estimator);
            const SizeEstimate estimate =
                bis_estimate_degree(session, config.vertex, config.eps, rng);
            report.estimate = estimate.estimate;
            report.degenerate = estimate.degenerate;
            break;
        }
    }
    report.seed = seed;

    TrialRow row;
    row.n = graph.vertex_count();
    row.m_true = m_true;
    row.estimate = report.estimate;
    row.rel_error = std::abs(report.estimate - double(row.m_true)) /
                    double(std::max<std::uint64_t>(row.m_true, 1));
    row.bis_queries = session.ledger().bis_count;
    row.is_queries = session.ledger().is_count;
    row.rounds = report.rounds;
    if (config.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - t0;
        row.wall_ms =
            std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }
    row.seed = seed;
    row.flags = report.flags();
    return row;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const Graph graph = load_graph_spec(config.graph);

    ExperimentResult result;
    result.rows.resize(config.trials);

    const unsigned workers =
        std::max(1u, std::min<unsigned>(config.threads, unsigned(config.trials)));
    if (workers == 1) {
        for (std::uint64_t i = 0; i < config.trials; ++i)
            result.rows[i] = run_single_trial(graph, config, config.base_seed + i);
    } else {
        // Work pool over trial indices; each trial is fully isolated and
        // rows land at their index, so output order is deterministic.
        std::atomic<std::uint64_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t i = cursor.fetch_add(1);
                    if (i >= config.trials) return;
                    result.rows[i] = run_single_trial(graph, config, config.base_seed + i);
                }
            });
        }
        for (auto& worker : pool) worker.join();
    }

    result.summary = summarize(result.rows, config.eps);
    return result;
}

Summary summarize(const std::vector<TrialRow>& rows, double eps) {
    Summary s;
    s.trials = rows.size();
    if (rows.empty()) return s;
    std::vector<double> rel, bis, is;
    std::size_t ok = 0;
    for (const TrialRow& row : rows) {
        rel.push_back(row.rel_error);
        bis.push_back(double(row.bis_queries));
        is.push_back(double(row.is_queries));
        if (row.rel_error <= eps) ++ok;
    }
    s.success_rate = double(ok) / double(rows.size());
    s.rel_error_p50 = quantile(rel, 0.50);
    s.rel_error_p95 = quantile(rel, 0.95);
    s.bis_p50 = std::uint64_t(quantile(bis, 0.50));
    s.bis_p95 = std::uint64_t(quantile(bis, 0.95));
    s.is_p50 = std::uint64_t(quantile(is, 0.50));
    s.is_p95 = std::uint64_t(quantile(is, 0.95));
    return s;
}

std::string rows_to_csv(const std::vector<TrialRow>& rows) {
    std::string out = "# trialrow-v1\n";
    out += "n,m_true,estimate,rel_error,bis_queries,is_queries,rounds,wall_ms,seed,flags\n";
    for (const TrialRow& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.m_true) + ',' +
               format_double(r.estimate) + ',' + format_double(r.rel_error) + ',' +
               std::to_string(r.bis_queries) + ',' + std::to_string(r.is_queries) + ',' +
               std::to_string(r.rounds) + ',' + std::to_string(r.wall_ms) + ',' +
               std::to_string(r.seed) + ',' + r.flags + '\n';
    }
    return out;
}

std::vector<TrialRow> rows_from_csv(std::istream& in) {
    std::vector<TrialRow> rows;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line.rfind("n,m_true,", 0) != 0) throw IngestError("trial CSV: bad header");
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() == 9) fields.emplace_back(); // empty flags
        if (fields.size() != 10) throw IngestError("trial CSV: bad row: " + line);
        TrialRow r;
        try {
            r.n = std::stoull(fields[0]);
            r.m_true = std::stoull(fields[1]);
            r.estimate = std::stod(fields[2]);
            r.rel_error = std::stod(fields[3]);
            r.bis_queries = std::stoull(fields[4]);
            r.is_queries = std::stoull(fields[5]);
            r.rounds = std::stoull(fields[6]);
            r.wall_ms = std::stoull(fields[7]);
            r.seed = std::stoull(fields[8]);
        } catch (const std::exception&) {
            throw IngestError("trial CSV: bad row: " + line);
        }
        r.flags = fields[9];
        rows.push_back(std::move(r));
    }
    if (!saw_header) throw IngestError("trial CSV: missing header");
    return rows;
}

namespace {

nlohmann::json summary_json(const Summary& s) {
    return {
        {"trials", s.trials},         {"success_rate", s.success_rate},
        {"rel_error_p50", s.rel_error_p50}, {"rel_error_p95", s.rel_error_p95},
        {"bis_p50", s.bis_p50},       {"bis_p95", s.bis_p95},
        {"is_p50", s.is_p50},         {"is_p95", s.is_p95},
    };
}

nlohmann::json config_json(const ExperimentConfig& c) {
    return {
        {"graph", c.graph},   {"algo", algo_name(c.algo)},
        {"eps", c.eps},       {"preset", preset_name(c.preset)},
        {"trials", c.trials}, {"seed", c.base_seed},
        {"format", c.format == OutFormat::csv ? "csv" : "json"},
        {"vertex", c.vertex}, {"threads", c.threads},
        {"timing", c.timing},
    };
}

} // namespace

std::string result_to_json(const ExperimentConfig& config, const ExperimentResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRow& r : result.rows) {
        rows.push_back({
            {"n", r.n},
            {"m_true", r.m_true},
            {"estimate", r.estimate},
            {"rel_error", r.rel_error},
            {"bis_queries", r.bis_queries},
            {"is_queries", r.is_queries},
            {"rounds", r.rounds},
            {"wall_ms", r.wall_ms},
            {"seed", r.seed},
            {"flags", r.flags},
        });
    }
    nlohmann::json j{{"config", config_json(config)},
                     {"rows", rows},
                     {"summary", summary_json(result.summary)}};
    return j.dump(2) + "\n";
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (const auto& [x, y] : points) {
        if (x <= 0.0 || y <= 0.0) continue;
        const double lx = std::log10(x), ly = std::log10(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    if (count < 2) return 0.0;
    const double denom = double(count) * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (double(count) * sxy - sx * sy) / denom;
}

SweepResult scaling_sweep(const ExperimentConfig& config, const std::vector<std::uint64_t>& sizes) {
    config.validate();
    if (sizes.size() < 4) throw ConfigError("sweep needs a ladder of >= 4 sizes");
    if (config.graph.rfind("gen:", 0) != 0)
        throw ConfigError("sweep needs a generator graph source");

    SweepResult out;
    for (const std::uint64_t n : sizes) {
        Graph graph;
        try {
            GenSpec spec = parse_gen_spec(config.graph);
            spec.params["n"] = double(n);
            graph = generate_from_spec(spec);
        } catch (const InvalidGeneratorParams& e) {
            throw ConfigError(e.what());
        }

        ExperimentConfig rung = config;
        std::vector<TrialRow> rows(rung.trials);
        for (std::uint64_t i = 0; i < rung.trials; ++i)
            rows[i] = run_single_trial(graph, rung, rung.base_seed + i);
        const Summary s = summarize(rows, rung.eps);

        SweepRow row;
        row.n = graph.vertex_count();
        row.m_true = ground_truth(graph, config);
        row.bis_p50 = s.bis_p50;
        row.is_p50 = s.is_p50;
        row.queries_p50 = s.bis_p50 + s.is_p50;
        out.rows.push_back(row);
    }

    std::vector<std::pair<double, double>> vs_n, vs_m;
    for (const SweepRow& row : out.rows) {
        vs_n.emplace_back(double(row.n), double(row.queries_p50));
        vs_m.emplace_back(double(row.m_true), double(row.queries_p50));
    }
    out.slope_queries_vs_n = fit_loglog_slope(vs_n);
    out.slope_queries_vs_m = fit_loglog_slope(vs_m);
    return out;
}

std::string sweep_to_csv(const SweepResult& sweep) {
    std::string out = "# sweeprow-v1\n";
    out += "n,m_true,queries_p50,bis_p50,is_p50\n";
    for (const SweepRow& r : sweep.rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.m_true) + ',' +
               std::to_string(r.queries_p50) + ',' + std::to_string(r.bis_p50) + ',' +
               std::to_string(r.is_p50) + '\n';
    }
    out += "# slope_queries_vs_n=" + format_double(sweep.slope_queries_vs_n) + "\n";
    out += "# slope_queries_vs_m=" + format_double(sweep.slope_queries_vs_m) + "\n";
    return out;
}

std::string sweep_to_json(const ExperimentConfig& config, const SweepResult& sweep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : sweep.rows) {
        rows.push_back({{"n", r.n},
                        {"m_true", r.m_true},
                        {"queries_p50", r.queries_p50},
                        {"bis_p50", r.bis_p50},
                        {"is_p50", r.is_p50}});
    }
    nlohmann::json j{{"config", config_json(config)},
                     {"rows", rows},
                     {"slope_queries_vs_n", sweep.slope_queries_vs_n},
                     {"slope_queries_vs_m", sweep.slope_queries_vs_m}};
    return j.dump(2) + "\n";
}

CliConfig parse_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    CliConfig out;
    ExperimentConfig& c = out.experiment;
    try {
        if (j.contains("graph")) c.graph = j["graph"].get<std::string>();
        if (j.contains("algo")) c.algo = parse_algo(j["algo"].get<std::string>());
        if (j.contains("eps")) c.eps = j["eps"].get<double>();
        if (j.contains("preset")) {
            const auto p = j["preset"].get<std::string>();
            if (p != "practical" && p != "theory") throw ConfigError("unknown preset: " + p);
            c.preset = p == "practical" ? Preset::practical : Preset::theory;
        }
        if (j.contains("trials")) c.trials = j["trials"].get<std::uint64_t>();
        if (j.contains("seed")) c.base_seed = j["seed"].get<std::uint64_t>();
        if (j.contains("out")) c.out = j["out"].get<std::string>();
        if (j.contains("format")) {
            const auto f = j["format"].get<std::string>();
            if (f != "csv" && f != "json") throw ConfigError("unknown format: " + f);
            c.format = f == "csv" ? OutFormat::csv : OutFormat::json;
        }
        if (j.contains("vertex")) c.vertex = j["vertex"].get<Vertex>();
        if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
        if (j.contains("timing")) c.timing = j["timing"].get<bool>();
        if (j.contains("sizes")) out.sizes = j["sizes"].get<std::vector<std::uint64_t>>();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    return out;
}

} // namespace edgeest
