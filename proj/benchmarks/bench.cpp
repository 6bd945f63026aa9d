#include "lsq/lll.hpp"
#include "lsq/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace lsq;

namespace {

std::string const data_dir = LSQ_DATA_DIR;

void BM_lucas_pair(benchmark::State& state)
{
    LucasParams params(4, -17);
    unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lucas_pair(params, n));
}
BENCHMARK(BM_lucas_pair)->Arg(64)->Arg(1024)->Arg(16384);

IntegerLattice random_lattice(int dim, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> entry(-1000000, 1000000);
    IntegerLattice lat;
    for (int i = 0; i < dim; i++) {
        std::vector<Int> row;
        for (int j = 0; j < dim; j++)
            row.emplace_back(entry(rng));
        lat.basis.push_back(std::move(row));
    }
    return lat;
}

void BM_gauss_reduce(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    auto lat = random_lattice(2, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(gauss_reduce(lat));
}
BENCHMARK(BM_gauss_reduce);

void BM_lll_reduce_3d(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    auto lat = random_lattice(3, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(lll_reduce(lat));
}
BENCHMARK(BM_lll_reduce_3d);

void BM_padic_log_unit(benchmark::State& state)
{
    auto u = PAdicValue::from(5, 2, static_cast<long>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(padic_log_unit(u));
}
BENCHMARK(BM_padic_log_unit)->Arg(64)->Arg(256)->Arg(1024);

void BM_hensel_root(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hensel_root(17, 4, 2, static_cast<long>(state.range(0)), ResidueSelector{13, 16}));
}
BENCHMARK(BM_hensel_root)->Arg(64)->Arg(256)->Arg(1024);

void BM_solve_case_k17(benchmark::State& state)
{
    auto spec = load_field_spec(data_dir + "/field-17.json");
    auto c = make_case(std::move(spec), "k17");
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_case(c, 4, 8));
}
BENCHMARK(BM_solve_case_k17)->Unit(benchmark::kMillisecond);

void BM_k17_reduction_cascade(benchmark::State& state)
{
    auto spec = load_field_spec(data_dir + "/field-17.json");
    auto in = make_reduction_inputs(spec, "k17");
    auto cfg = default_reduction_config("k17");
    for (auto _ : state)
        benchmark::DoNotOptimize(iterate_reduction(in, cfg));
}
BENCHMARK(BM_k17_reduction_cascade)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
