#include <benchmark/benchmark.h>

#include "nsv/asp_export.hpp"
#include "nsv/enumerate.hpp"
#include "nsv/fixtures.hpp"
#include "nsv/parser.hpp"
#include "nsv/query.hpp"
#include "nsv/reductions.hpp"
#include "nsv/repair.hpp"

namespace {

using namespace nsv;

void BM_EnumerateFourNodeBijective(benchmark::State& state) {
    const Problem p = fixture("four-node-addition").problem;
    for (auto _ : state) {
        auto e = enumerate_valid(p, MappingMode::Bijection, 10000, false);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_EnumerateFourNodeBijective);

void BM_EnumerateMnistHalfFunction(benchmark::State& state) {
    const Problem p = fixture("mnist-half").problem;
    for (auto _ : state) {
        auto e = enumerate_valid(p, MappingMode::Function, 10000, true);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_EnumerateMnistHalfFunction);

// Bijective search over the 2(m+1)-output reduction; domains collapse to the
// per-variable label pairs, so this mostly measures propagation overhead.
void BM_EnumerateCnfReduction(benchmark::State& state) {
    const int vars = static_cast<int>(state.range(0));
    CnfFormula f;
    f.num_vars = vars;
    for (int i = 1; i < vars; ++i) f.clauses.push_back({i, -(i + 1)});
    const Problem p = cnf_to_nsl(f);
    for (auto _ : state) {
        auto e = enumerate_valid(p, MappingMode::Bijection, 10000, true);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_EnumerateCnfReduction)->Arg(3)->Arg(6)->Arg(9);

void BM_GreedyRepairFourNode(benchmark::State& state) {
    const Problem p = fixture("four-node-addition").problem;
    for (auto _ : state) {
        auto trace = greedy_repair(p, MappingMode::Bijection, 100);
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(BM_GreedyRepairFourNode);

void BM_UncertaintyQueries(benchmark::State& state) {
    const Problem p = fixture("four-node-addition").problem;
    const auto solutions =
        enumerate_valid(p, MappingMode::Bijection, 10000, false).mappings;
    for (auto _ : state) {
        auto trace = run_strategy(solutions, p.intended,
                                  QueryStrategy::Uncertainty, 0, 4);
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(BM_UncertaintyQueries);

void BM_ParseRoundTrip(benchmark::State& state) {
    const std::string text = serialize_problem(fixture("mnist-half").problem);
    for (auto _ : state) {
        auto parsed = parse_problem(text);
        benchmark::DoNotOptimize(parsed);
    }
}
BENCHMARK(BM_ParseRoundTrip);

void BM_ExportAsp(benchmark::State& state) {
    const Problem p = fixture("mnist-half").problem;
    for (auto _ : state) {
        auto program = export_asp(p, MappingMode::Bijection, true);
        benchmark::DoNotOptimize(program);
    }
}
BENCHMARK(BM_ExportAsp);

}  // namespace

BENCHMARK_MAIN();
