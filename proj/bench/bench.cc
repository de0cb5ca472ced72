// Serial reference against the OpenMP kernel for each parallel entry point.
// Arguments: 0 = serial, 1 = parallel.

#include <szp/cases.hh>
#include <szp/graph_enum.hh>
#include <szp/realize.hh>
#include <szp/weights.hh>

#include <benchmark/benchmark.h>

using namespace szp;

namespace
{
    auto policy_of(const benchmark::State & state) -> ExecPolicy
    {
        return state.range(0) ? ExecPolicy::parallel : ExecPolicy::serial;
    }

    void all_graphs_7(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(all_graphs(7, policy_of(state)));
    }

    void maximum_cliques_extremal(benchmark::State & state)
    {
        auto e = extremal_construct();
        for (auto _ : state)
            benchmark::DoNotOptimize(maximum_cliques(e.hypergraph, policy_of(state)));
    }

    void triples_test_k4(benchmark::State & state)
    {
        auto cand = make_candidate(letter_labels(zoo::complete(4)), 4);
        auto r = forced_realization(cand, 16).front();
        for (auto _ : state)
            benchmark::DoNotOptimize(triples_test(r, policy_of(state)));
    }

    void tau_critical_4(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_tau_critical(4, 8, policy_of(state)));
    }

    void case_candidates(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_case_candidates(4, policy_of(state)));
    }

    void oracle_search_6(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(search_configurations(6, 2, policy_of(state)));
    }

    void weigh_k4(benchmark::State & state)
    {
        auto g = zoo::complete(4);
        for (auto _ : state)
            benchmark::DoNotOptimize(weigh(g, 4, policy_of(state)));
    }
}

BENCHMARK(all_graphs_7)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(maximum_cliques_extremal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(triples_test_k4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(tau_critical_4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(case_candidates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_search_6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(weigh_k4)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
