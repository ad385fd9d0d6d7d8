// Serial vs parallel kernel comparison: sparse products, fraction-free
// elimination, grid fan-out. Arg(0) = serial reference, Arg(w) = w workers.

#include <benchmark/benchmark.h>

#include "qfib/grid.hpp"
#include "qfib/parallel.hpp"
#include "qfib/polymatrix.hpp"

using namespace qfib;

namespace {

MPoly big_poly(long n, unsigned p) {
    Sequences seq;
    return pow(seq.qfib(n, 0), p);
}

void BM_Mul(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    const MPoly a = big_poly(24, 3);
    const MPoly b = big_poly(23, 2);
    for (auto _ : state) {
        MPoly r = workers <= 1 ? mul_serial(a, b) : mul_parallel(a, b, workers);
        benchmark::DoNotOptimize(r);
    }
    state.SetLabel(std::to_string(a.term_count()) + "x" + std::to_string(b.term_count()) +
                   " terms");
}

void BM_DetBareiss(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    Sequences seq;
    const PolyMatrix m = power_matrix(seq, 3, 1, 1, 3, 5);
    set_max_workers(workers < 1 ? 1 : workers);
    for (auto _ : state) {
        MPoly d = det_bareiss(m);
        benchmark::DoNotOptimize(d);
    }
    set_max_workers(1);
}

void BM_DetCofactor(benchmark::State& state) {
    Sequences seq;
    const PolyMatrix m = power_matrix(seq, 3, 1, 1, 2, 4);
    for (auto _ : state) {
        MPoly d = det_cofactor(m);
        benchmark::DoNotOptimize(d);
    }
}

void BM_Grid(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    GridSpec spec;
    spec.identity = IdentityId::theorem1;
    spec.blocks = {{{"n", parse_range("-3..8")}, {"k", {1, 2, 3}}}};
    for (auto _ : state) {
        Sequences seq; // fresh cache per run, so work is comparable
        RunReport r = run_grid(seq, spec, workers < 1 ? 1 : workers);
        benchmark::DoNotOptimize(r);
    }
}

} // namespace

BENCHMARK(BM_Mul)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetBareiss)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetCofactor)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Grid)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
