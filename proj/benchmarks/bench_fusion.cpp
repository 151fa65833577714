#include <benchmark/benchmark.h>

#include "sl2wt/sl2wt.hpp"

using namespace sl2wt;

static void BM_VirFuseTable(benchmark::State& st) {
    AdmissibleLevel level = admissible_level(7, 6);
    for (auto _ : st) {
        std::size_t n = 0;
        for (int r = 1; r < level.u; ++r)
            for (int s = 1; s < level.v; ++s)
                for (int r2 = 1; r2 < level.u; ++r2)
                    for (int s2 = 1; s2 < level.v; ++s2) n += vir_fuse(level, r, s, r2, s2).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_VirFuseTable);

static void BM_SolverSelfSquare(benchmark::State& st) {
    AdmissibleLevel level = admissible_level(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    GrothC q(d_plus(level, 1, 1, 1));
    for (auto _ : st) benchmark::DoNotOptimize(groth_fuse_C(level, q, q));
}
BENCHMARK(BM_SolverSelfSquare)->Args({3, 2})->Args({5, 3})->Args({3, 4});

static void BM_Pipeline(benchmark::State& st) {
    AdmissibleLevel level = admissible_level(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(run_pipeline(level).verdict);
}
BENCHMARK(BM_Pipeline)->Args({3, 2})->Args({5, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_RelaxedWindow(benchmark::State& st) {
    for (auto _ : st) {
        RelaxedWindow w = build_relaxed(Weight::omega(), Weight(Rational(17)), RelaxedSign::Minus,
                                        static_cast<int>(st.range(0)));
        benchmark::DoNotOptimize(w.brackets_hold() && w.casimir_holds());
    }
}
BENCHMARK(BM_RelaxedWindow)->Arg(5)->Arg(20);

BENCHMARK_MAIN();
