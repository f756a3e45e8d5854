#include <benchmark/benchmark.h>

#include "rotorlab/ground_state.hpp"

using namespace rotorlab;

namespace {

void BM_TransferBuildPbc(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = sample_points(1, n, 1)[0];
    for (auto _ : state) {
        auto tm = build_transfer_pbc_even(p);
        benchmark::DoNotOptimize(tm.entries);
    }
}
BENCHMARK(BM_TransferBuildPbc)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TransferBuildCbc(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = sample_points(2, n, 1)[0];
    Bc bc = n % 2 ? Bc::CbcOdd : Bc::CbcEven;
    for (auto _ : state) {
        auto tm = build_transfer_cbc(bc, p);
        benchmark::DoNotOptimize(tm.entries);
    }
}
BENCHMARK(BM_TransferBuildCbc)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_KernelSolve(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto tm = build_transfer_pbc_even(sample_points(3, n, 1)[0]);
    for (auto _ : state) {
        auto gs = solve_ground_state(tm);
        benchmark::DoNotOptimize(gs.vector);
    }
}
BENCHMARK(BM_KernelSolve)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HomogeneousSolve(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto tm = build_transfer_pbc_even(homogeneous_point(n));
    for (auto _ : state) {
        auto gs = solve_ground_state(tm);
        benchmark::DoNotOptimize(gs.vector);
    }
}
BENCHMARK(BM_HomogeneousSolve)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Schur(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4);
    std::vector<Eis> vals;
    for (int i = 0; i < 2 * n; ++i) vals.push_back(Eis(random_rational(rng)));
    Partition lambda = Partition::y(n);
    for (auto _ : state) benchmark::DoNotOptimize(schur(lambda, vals));
}
BENCHMARK(BM_Schur)->Arg(3)->Arg(4)->Arg(5);

void BM_Pfaffian(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    EisMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            a(i, j) = Eis(random_rational(rng), random_rational(rng));
            a(j, i) = -a(i, j);
        }
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->Arg(6)->Arg(8);

void BM_SymplecticCharacter(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto p = sample_points(6, n, 1)[0];
    for (auto _ : state) benchmark::DoNotOptimize(symplectic_character(n, p.z));
}
BENCHMARK(BM_SymplecticCharacter)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
