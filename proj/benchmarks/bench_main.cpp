#include <benchmark/benchmark.h>

#include "singtaut/singtaut.hpp"

namespace {

using namespace singtaut;

DualGraph e8() {
    return parse_graph(
        "vertex a1 b=2\nvertex a2 b=2\nvertex a3 b=2\nvertex a4 b=2\n"
        "vertex a5 b=2\nvertex a6 b=2\nvertex a7 b=2\nvertex a8 b=2\n"
        "edge a1 a2\nedge a2 a3\nedge a3 a4\nedge a4 a5\nedge a5 a6\nedge a6 a7\nedge a5 a8\n");
}

DualGraph long_chain(int n) {
    DualGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex({"v" + std::to_string(i), 0, 2 + i % 3});
    for (int i = 1; i < n; ++i) g.add_edge_index(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
    return g;
}

void BM_Determinant(benchmark::State& state) {
    const auto m = intersection_matrix(long_chain(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(32)->Arg(64);

void BM_FundamentalCycle(benchmark::State& state) {
    const auto g = e8();
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycle);

void BM_MultiplicityData(benchmark::State& state) {
    const auto g = e8();
    for (auto _ : state) benchmark::DoNotOptimize(multiplicity_data(g, 7));
}
BENCHMARK(BM_MultiplicityData);

void BM_ReproduceTable2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reproduce_table(TableId::Table2));
}
BENCHMARK(BM_ReproduceTable2);

void BM_TautCertificateE8(benchmark::State& state) {
    const auto g = e8();
    for (auto _ : state) benchmark::DoNotOptimize(taut_certificate(g, 7));
}
BENCHMARK(BM_TautCertificateE8)->Unit(benchmark::kMillisecond);

void BM_FedderCatalog(benchmark::State& state) {
    const auto p = state.range(0);
    const auto catalog = rdp_catalog(p, 10);
    for (auto _ : state)
        for (const auto& r : catalog) benchmark::DoNotOptimize(fedder_is_f_pure(r.equation));
}
BENCHMARK(BM_FedderCatalog)->Arg(2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CechChain(benchmark::State& state) {
    DualGraph g = long_chain(4);
    for (auto _ : state) benchmark::DoNotOptimize(cech_h1_rank(g, 5, 32, 8));
}
BENCHMARK(BM_CechChain)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
