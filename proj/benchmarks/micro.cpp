#include <benchmark/benchmark.h>

#include "edgeest/bis_estimator.hpp"
#include "edgeest/is_estimator.hpp"

namespace {

using namespace edgeest;

Graph er_graph(std::size_t n, double p, std::uint64_t seed = 7) {
    Rng rng(seed, RngStream::graph_gen);
    return make_erdos_renyi(n, p, rng);
}

void BM_BisQuery(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Graph g = er_graph(n, 8.0 / double(n));
    OracleSession session(g);
    Rng rng(11);
    const Partition halves = random_partition(VertexSet::full(n), 2, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(session.bis_query(halves.parts[0], halves.parts[1]));
    state.SetItemsProcessed(std::int64_t(state.iterations()));
}
BENCHMARK(BM_BisQuery)->Arg(256)->Arg(1024)->Arg(4096);

void BM_IsQuery(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Graph g = er_graph(n, 8.0 / double(n));
    OracleSession session(g);
    Rng rng(11);
    const VertexSet sample = VertexSet::full(n).bernoulli_subset(0.5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(session.is_query(sample));
    state.SetItemsProcessed(std::int64_t(state.iterations()));
}
BENCHMARK(BM_IsQuery)->Arg(256)->Arg(1024)->Arg(4096);

void BM_BisExactAll(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Graph g = er_graph(n, 8.0 / double(n));
    for (auto _ : state) {
        OracleSession session(g);
        benchmark::DoNotOptimize(bis_exact_all(session));
    }
}
BENCHMARK(BM_BisExactAll)->Arg(64)->Arg(256)->Arg(1024);

void BM_BisEstimate(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Graph g = er_graph(n, 0.1);
    const BisParams params = BisParams::make(0.2, n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        OracleSession session(g);
        Rng rng(++seed, RngStream::bis_estimator);
        benchmark::DoNotOptimize(bis_estimate_edges(session, params, rng));
    }
}
BENCHMARK(BM_BisEstimate)->Arg(256)->Arg(512);

void BM_IsEstimate(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Graph g = er_graph(n, 0.1);
    const IsParams params = IsParams::make(0.25, n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        OracleSession session(g);
        Rng rng(++seed, RngStream::is_estimator);
        benchmark::DoNotOptimize(is_estimate_edges(session, params, rng));
    }
}
BENCHMARK(BM_IsEstimate)->Arg(256)->Arg(512);

void BM_ErdosRenyiGen(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Rng rng(++seed, RngStream::graph_gen);
        benchmark::DoNotOptimize(make_erdos_renyi(n, 0.05, rng));
    }
}
BENCHMARK(BM_ErdosRenyiGen)->Arg(1024)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
