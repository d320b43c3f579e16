#include <gtest/gtest.h>

#include <random>

#include "cyclecover/cohomology.hpp"
#include "cyclecover/series.hpp"
#include "fixtures.hpp"
#include "witness.hpp"

using namespace cyclecover;

namespace {

TauSeries random_series(const ZqContext& z, std::mt19937_64& rng, int d, int len) {
  std::vector<ZqPoly> terms;
  for (int k = 0; k < len; ++k) {
    // The τ^0 term is constant so products never carry below index 0.
    ZqPoly t = cctest::random_poly(z, rng, k == 0 ? 0 : d - 1, 0);
    lower_shift(z, t, 0);
    terms.push_back(t);
  }
  return series_from_terms(z, d, terms);
}

PrecisionPlan plan_with_trunc(int trunc) {
  PrecisionPlan plan;
  plan.series_trunc = trunc;
  return plan;
}

BigInt mod_rational(const mpq_class& q, const BigInt& m) {
  BigInt den = q.get_den(), inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  BigInt out = BigInt(q.get_num() * inv) % m;
  if (out < 0) out += m;
  return out;
}

}  // namespace

TEST(SeriesProperty, KroneckerProductMatchesNaive) {
  std::mt19937_64 rng(4);
  for (auto [p, n, W, d] : {std::tuple{7L, 2, 5, 4}, {3L, 1, 9, 6}, {11L, 2, 3, 3}, {5L, 3, 4, 5}}) {
    auto z = make_context(p, n, W, std::nullopt, 6);
    ZqPoly f = cctest::random_poly(*z, rng, d, 0);
    f.set(d, z->one());
    FbarData fb = FbarData::from_poly(*z, f);
    for (int it = 0; it < 5; ++it) {
      TauSeries a = random_series(*z, rng, d, 7), b = random_series(*z, rng, d, 9);
      EXPECT_TRUE(series_equal(series_mul(*z, fb, a, b, 12), series_mul_naive(*z, fb, a, b, 12)));
      EXPECT_TRUE(series_equal(series_mul(*z, fb, a, b, 4), series_mul_naive(*z, fb, a, b, 4)));
    }
  }
}

TEST(Series, InverseRootIsOneAtOneDigit) {
  auto c = cctest::small_curve(7, 3, {1, 0, 0, 1});
  auto z = make_context(7, 1, 1, c.field_poly);
  CurveSpec cs = CurveSpec::make(c, z);
  TauSeries S = frob_y_inv_series(cs, plan_with_trunc(20));
  EXPECT_TRUE(series_equal(S, series_one(*z, cs.d, 1)));
}

TEST(Series, InverseRootDefiningProperty) {
  for (auto [p, r, f] : {std::tuple{7L, 3, std::vector<long>{1, 0, 0, 1}},
                         {5L, 2, std::vector<long>{3, 1, 0, 4, 0, 1}},
                         {3L, 4, std::vector<long>{1, 2, 0, 1, 1}}}) {
    auto c = cctest::small_curve(p, r, f);
    auto z = make_context(p, 1, 5, c.field_poly);
    CurveSpec cs = CurveSpec::make(c, z);
    const int M = 25;
    TauSeries S = frob_y_inv_series(cs, plan_with_trunc(M));
    TauSeries R = frob_r_series(cs, M);
    TauSeries acc = R;
    for (int i = 0; i < r; ++i) acc = series_mul(*z, cs.fb, acc, S, M);
    EXPECT_TRUE(series_equal(acc, series_one(*z, cs.d, acc.length()))) << "p=" << p;
  }
}

TEST(Series, InverseRootMatchesBinomialSeries) {
  // y^3 = x^3 + 1 over F_7: S = Σ binom(−1/3, i) (R − 1)^i, only i < W survive mod 7^W.
  auto c = cctest::small_curve(7, 3, {1, 0, 0, 1});
  const int W = 4, M = 30;
  auto z = make_context(7, 1, W, c.field_poly);
  CurveSpec cs = CurveSpec::make(c, z);
  TauSeries R = frob_r_series(cs, M);
  TauSeries D = series_sub(*z, R, series_one(*z, cs.d, 1));
  TauSeries oracle = series_one(*z, cs.d, 1), Dpow = series_one(*z, cs.d, 1);
  mpq_class binom = 1;
  for (int i = 1; i <= W; ++i) {
    binom *= (mpq_class(-1, 3) - (i - 1)) / i;
    Dpow = series_mul_naive(*z, cs.fb, Dpow, D, M);
    oracle = series_add(*z, oracle, series_mul_int(*z, Dpow, mod_rational(binom, z->modulus())));
  }
  TauSeries S = frob_y_inv_series(cs, plan_with_trunc(M));
  EXPECT_TRUE(series_equal(S, oracle));
}
