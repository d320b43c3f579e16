#include <benchmark/benchmark.h>

#include <random>

#include "cyclecover/cohomology.hpp"
#include "cyclecover/curve.hpp"
#include "cyclecover/frobmatrix.hpp"
#include "cyclecover/oracle.hpp"
#include "cyclecover/padic.hpp"
#include "cyclecover/polyring.hpp"
#include "cyclecover/series.hpp"
#include "cyclecover/weil.hpp"

using namespace cyclecover;

namespace {

// y^r = x^d + x + c over F_p, smallest c >= 1 giving a squarefree right side.
CurveData trinomial_curve(long p, int r, int d) {
  CurveData c;
  c.p = p;
  c.n = 1;
  c.field_poly = {0, 1};
  c.r = r;
  c.f.assign(d + 1, std::vector<long>{0});
  c.f[1] = {1};
  c.f[d] = {1};
  for (long c0 = 1;; ++c0) {
    c.f[0] = {c0};
    CurveData out = normalized_curve(c);
    if (is_squarefree(out)) return out;
  }
}

struct Setup {
  CurveData curve;
  PrecisionPlan plan;
  CurveSpec spec;

  Setup(long p, int r, int d)
      : curve(trinomial_curve(p, r, d)),
        plan(precision_plan(curve, BasisKind::Bprime)),
        spec(CurveSpec::make(curve, make_context(p, 1, plan.W, curve.field_poly))) {}
};

void BM_FrobSeries(benchmark::State& state) {
  Setup s(state.range(0), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(frob_y_inv_series(s.spec, s.plan));
}
BENCHMARK(BM_FrobSeries)->Arg(11)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_SeriesMul(benchmark::State& state) {
  Setup s(state.range(0), 3, 7);
  TauSeries S = frob_y_inv_series(s.spec, s.plan);
  for (auto _ : state)
    benchmark::DoNotOptimize(series_mul(s.spec.zq(), s.spec.fb, S, S, s.plan.series_trunc));
}
BENCHMARK(BM_SeriesMul)->Arg(11)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_Red1Step(benchmark::State& state) {
  Setup s(state.range(0), 3, 7);
  const ZqContext& z = s.spec.zq();
  std::mt19937_64 rng(1);
  const int k = 8;
  TauSeriesForm proto;
  proto.ell = 1;
  for (int i = 0; i <= k; ++i) {
    std::vector<long> cs(s.spec.d);
    for (auto& e : cs) e = static_cast<long>(rng() % 1000);
    proto.terms.push_back(poly_from_ints(z, cs));
  }
  for (auto _ : state) {
    TauSeriesForm form = proto;
    red1_step(s.spec, form, k);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_Red1Step)->Arg(11)->Arg(101);

void BM_Assemble(benchmark::State& state) {
  Setup s(state.range(0), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_frobenius_matrix(s.spec, s.plan, BasisKind::Bprime));
}
BENCHMARK(BM_Assemble)->Arg(11)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_WeilPolynomial(benchmark::State& state) {
  CurveData c = trinomial_curve(state.range(0), static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(weil_polynomial(c));
}
BENCHMARK(BM_WeilPolynomial)
    ->Args({11, 2, 5})
    ->Args({31, 3, 7})
    ->Args({101, 3, 7})
    ->Args({13, 5, 6})
    ->Unit(benchmark::kMillisecond);

void BM_OracleCount(benchmark::State& state) {
  CurveData c = trinomial_curve(state.range(0), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(naive_curve_count(c, 2));
}
BENCHMARK(BM_OracleCount)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
