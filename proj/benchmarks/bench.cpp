#include <benchmark/benchmark.h>

#include "bilab/autos.hpp"
#include "bilab/counting.hpp"
#include "bilab/curve.hpp"
#include "bilab/lab.hpp"

using namespace bilab;

namespace {

PointSet graph_points(unsigned n) {
    Curve c = Curve::parse("y - x^3 - x^2");
    return sample_curve_points(c, n, Mode::Exact, 1);
}

PointSet circle_points_numeric(unsigned n, mpfr_prec_t prec) {
    Curve c = Curve::parse("x^2 + y^2 - 1");
    return sample_curve_points(c, n, Mode::Numeric, 1, prec);
}

void bm_histogram_exact(benchmark::State& state) {
    PointSet s = graph_points(static_cast<unsigned>(state.range(0)));
    BilinearForm f = BilinearForm::dot();
    for (auto _ : state) {
        ValueHistogram h = value_histogram(f, s, s);
        benchmark::DoNotOptimize(h.entries.data());
    }
    state.SetComplexityN(state.range(0));
}

void bm_histogram_exact_threads(benchmark::State& state) {
    PointSet s = graph_points(64);
    BilinearForm f = BilinearForm::dot();
    for (auto _ : state) {
        ValueHistogram h = value_histogram(f, s, s, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(h.entries.data());
    }
}

void bm_histogram_numeric(benchmark::State& state) {
    PointSet s = circle_points_numeric(static_cast<unsigned>(state.range(0)), 256);
    BilinearForm f = BilinearForm::dot();
    for (auto _ : state) {
        ValueHistogram h = value_histogram(f, s, s);
        benchmark::DoNotOptimize(h.entries.data());
    }
    state.SetComplexityN(state.range(0));
}

void bm_crosscheck(benchmark::State& state) {
    PointSet s = graph_points(static_cast<unsigned>(state.range(0)));
    BilinearForm f = BilinearForm::dot();
    for (auto _ : state) {
        mpz_class q = incidence_crosscheck(f, s, s);
        benchmark::DoNotOptimize(q.get_mpz_t());
    }
}

void bm_classify_special(benchmark::State& state) {
    Curve c = Curve::parse("x^2 + 2*y^2 - 1");
    for (auto _ : state) {
        SpecialVerdict v = c.classify(256);
        benchmark::DoNotOptimize(&v);
    }
}

void bm_autos_fermat(benchmark::State& state) {
    Curve c = Curve::parse("x^3 + y^3 - 1");
    for (auto _ : state) {
        AutGroup g = enumerate_automorphisms(c, 256);
        benchmark::DoNotOptimize(g.certificates.data());
    }
}

void bm_experiment_progression(benchmark::State& state) {
    ExperimentConfig cfg;
    cfg.progression = ProgressionSpec{2, 3, GaussianRational(2)};
    cfg.sizes = {8, 16, 32};
    for (auto _ : state) {
        ExperimentResult r = run_experiment(cfg);
        benchmark::DoNotOptimize(r.rows.data());
    }
}

BENCHMARK(bm_histogram_exact)->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK(bm_histogram_exact_threads)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_histogram_numeric)->RangeMultiplier(2)->Range(16, 64)->Complexity();
BENCHMARK(bm_crosscheck)->Arg(16)->Arg(64);
BENCHMARK(bm_classify_special);
BENCHMARK(bm_autos_fermat)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_experiment_progression)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
