#include <benchmark/benchmark.h>

#include "fgdeg/congruence.hpp"
#include "fgdeg/ktheory.hpp"

namespace {

void BM_fg_global(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    long k = 123456789;
    for (auto _ : state)
        benchmark::DoNotOptimize(fg::fg_global(mpq_class(k++), n));
}
BENCHMARK(BM_fg_global)->Arg(4)->Arg(8)->Arg(12);

void BM_fg_ktheory(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    long k = 977;
    for (auto _ : state)
        benchmark::DoNotOptimize(fg::fg_ktheory(mpq_class(k++), n).in_FG);
}
BENCHMARK(BM_fg_ktheory)->Arg(4)->Arg(8)->Arg(16);

void BM_residue_scan(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    mpz_class M = fg::minimal_sound_modulus(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(fg::fg_residues(n, M, fg::kDefaultScanGuard, 1));
}
BENCHMARK(BM_residue_scan)->Arg(3)->Arg(4)->Arg(5);

void BM_exponent_scan(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fg::e_exponent_bruteforce(2, n, fg::kDefaultScanGuard, 1));
}
BENCHMARK(BM_exponent_scan)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
