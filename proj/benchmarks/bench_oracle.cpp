#include <benchmark/benchmark.h>

#include <scrollcert/oracle.hpp>

using namespace scrollcert;

namespace {

FieldConfig bench_config(int trials) {
    FieldConfig cfg;
    cfg.seed = 2024;
    cfg.trials = trials;
    return cfg;
}

void bm_oracle_line_small(benchmark::State& state) {
    GenericMapProblem p{SplittingType({2, 1, 1}), LineTarget{3}};
    FieldConfig cfg = bench_config(1);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_kernel_type(p, cfg));
}
BENCHMARK(bm_oracle_line_small);

void bm_oracle_line_rank5(benchmark::State& state) {
    GenericMapProblem p{SplittingType({4, 4, 3, 2, 1}), LineTarget{12}};
    FieldConfig cfg = bench_config(1);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_kernel_type(p, cfg));
}
BENCHMARK(bm_oracle_line_rank5);

void bm_oracle_torsion(benchmark::State& state) {
    GenericMapProblem p{SplittingType({4, 2, 1}),
                        TorsionTarget{state.range(0)}};
    FieldConfig cfg = bench_config(1);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_kernel_type(p, cfg));
}
BENCHMARK(bm_oracle_torsion)->Arg(2)->Arg(6)->Arg(10);

void bm_oracle_exact_rationals(benchmark::State& state) {
    GenericMapProblem p{SplittingType({2, 1, 1}), LineTarget{3}};
    FieldConfig cfg = bench_config(1);
    cfg.exact_rationals = true;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_kernel_type(p, cfg));
}
BENCHMARK(bm_oracle_exact_rationals);

void bm_suite_small_box(benchmark::State& state) {
    SuiteBounds b;
    b.max_rank = 2;
    b.degree_hi = 2;
    b.m_max = 3;
    b.ell_max = 4;
    b.a_max = 2;
    b.b_max = 4;
    FieldConfig cfg = bench_config(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_lemma_suite(b, cfg));
}
BENCHMARK(bm_suite_small_box);

}  // namespace

BENCHMARK_MAIN();
