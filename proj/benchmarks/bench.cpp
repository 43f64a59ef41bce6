#include <benchmark/benchmark.h>

#include "hyperpi/catalog.hpp"
#include "hyperpi/hyper.hpp"
#include "hyperpi/numerics.hpp"
#include "hyperpi/series.hpp"
#include "hyperpi/transform.hpp"

using namespace hyperpi;

namespace {

TruncatedSeries harmonic_series(int order) {
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i) c.emplace_back(1, i + 1);
    return TruncatedSeries(std::move(c), order);
}

const AlgebraicTransformation& eq6() {
    static const AlgebraicTransformation t =
        *builtin_catalog().find_transformation("eq6");
    return t;
}

} // namespace

static void BM_SeriesMul(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    TruncatedSeries f = harmonic_series(order);
    TruncatedSeries g = series_scale(Rational(3, 7), f);
    for (auto _ : state) benchmark::DoNotOptimize(series_mul(f, g));
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128);

static void BM_NewtonLift(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    const AlgebraicTransformation& t = eq6();
    for (auto _ : state)
        benchmark::DoNotOptimize(series_newton_root(t.curve_y, t.seed_y, order));
}
BENCHMARK(BM_NewtonLift)->Arg(8)->Arg(16)->Arg(32);

static void BM_HyperEvaluate(benchmark::State& state) {
    mpfr_prec_t prec = state.range(0);
    HypergeometricSpec s;
    s.upper = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    s.lower = {Rational(1), Rational(1)};
    Rational x(1, 2401);
    for (auto _ : state) benchmark::DoNotOptimize(hyper_evaluate(s, x, prec));
}
BENCHMARK(BM_HyperEvaluate)->Arg(128)->Arg(512)->Arg(2048);

static void BM_PiValue(benchmark::State& state) {
    mpfr_prec_t prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pi_value(prec));
}
BENCHMARK(BM_PiValue)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_AltAccel(benchmark::State& state) {
    mpfr_prec_t prec = state.range(0);
    auto term = [](long k) {
        Rational t = Rational(k % 2 == 0 ? 1 : -1) / Rational(2 * k + 1);
        return t;
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(alt_accel_sum(term, prec));
}
BENCHMARK(BM_AltAccel)->Arg(64)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
