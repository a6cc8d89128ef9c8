#include <benchmark/benchmark.h>

#include <scrollcert/certificate.hpp>
#include <scrollcert/solver.hpp>

using namespace scrollcert;

namespace {

void bm_k1_odd_default(benchmark::State& state) {
    SearchBounds b;
    for (auto _ : state) benchmark::DoNotOptimize(solve_k1_odd(7, b));
}
BENCHMARK(bm_k1_odd_default);

void bm_k1_odd_wide(benchmark::State& state) {
    SearchBounds b;
    b.max_e0 = 200;
    b.max_e1 = 400;
    b.max_eplus = 400;
    for (auto _ : state) benchmark::DoNotOptimize(solve_k1_odd(7, b));
}
BENCHMARK(bm_k1_odd_wide);

void bm_beta_family(benchmark::State& state) {
    SearchBounds b;
    for (auto _ : state)
        benchmark::DoNotOptimize(beta_family_solver(3, 8, 3, b));
}
BENCHMARK(bm_beta_family);

void bm_oddg_ladder(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oddg_certificate(4, 10));
}
BENCHMARK(bm_oddg_ladder);

void bm_pb_point_base(benchmark::State& state) {
    SchubertPartition p{1, 4, {3, 1}};
    SearchBounds b;
    for (auto _ : state) benchmark::DoNotOptimize(solve_pb(1, 4, p, b));
}
BENCHMARK(bm_pb_point_base);

void bm_verify_certificate(benchmark::State& state) {
    BalancedCertificate c = oddg_certificate(4, 10).back();
    for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(bm_verify_certificate);

void bm_json_round_trip(benchmark::State& state) {
    BalancedCertificate c = oddg_certificate(4, 10).back();
    for (auto _ : state) {
        nlohmann::ordered_json j = certificate_to_json(c);
        benchmark::DoNotOptimize(certificate_from_json(j));
    }
}
BENCHMARK(bm_json_round_trip);

}  // namespace

BENCHMARK_MAIN();
