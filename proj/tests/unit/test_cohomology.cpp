#include <gtest/gtest.h>

#include <random>

#include "cyclecover/cohomology.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/weil.hpp"
#include "fixtures.hpp"
#include "witness.hpp"

using namespace cyclecover;

namespace {

CurveSpec spec_for(const CurveData& c, int W) { return CurveSpec::make(c, make_context(c.p, c.n, W, c.field_poly)); }

}  // namespace

TEST(Cohomology, PoleData) {
  int ell, a;
  pole_data(7, 3, 1, ell, a);
  EXPECT_EQ(ell, 1);
  EXPECT_EQ(a, 2);
  pole_data(7, 3, 2, ell, a);
  EXPECT_EQ(ell, 2);
  EXPECT_EQ(a, 4);
  pole_data(11, 5, 3, ell, a);
  EXPECT_EQ(ell, 3);
  EXPECT_EQ(a, 6);
}

TEST(Cohomology, CurveSpecValidation) {
  auto z = make_context(3, 1, 4, std::vector<long>{0, 1});
  EXPECT_THROW(CurveSpec::make(cctest::small_curve(3, 3, {1, 0, 0, 1}), z), CharacteristicDividesDegree);
  EXPECT_THROW(CurveSpec::make(cctest::small_curve(3, 2, {0, 0, 1, 1}), z), NotSquarefree);
}

TEST(Cohomology, Red1WorkedExample) {
  // r = 2, f̄ = x^2 + 1 over F_7, ell = 1: τ dx/y reduces to 0.
  CurveSpec cs = spec_for(cctest::small_curve(7, 2, {1, 0, 1}), 3);
  const ZqContext& z = cs.zq();
  TauSeriesForm form;
  form.ell = 1;
  form.terms = {poly_zero(z), poly_from_ints(z, {1})};
  TauSeriesForm out = reduce_tau(cs, form);
  for (const auto& t : out.terms) EXPECT_TRUE(t.is_zero());
  TauSeriesForm ref = form;
  red1_step_reference(cs, ref, 1);
  EXPECT_TRUE(ref.terms[0].is_zero());
}

TEST(Cohomology, Red1MatchesReferencePath) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 6; ++it) {
    CurveData c = cctest::random_curve(rng);
    CurveSpec cs = spec_for(c, 6);
    const ZqContext& z = cs.zq();
    for (int k = 1; k < 6; ++k) {
      TauSeriesForm form;
      form.ell = 1 + static_cast<int>(rng() % (2 * c.r - 1));
      form.terms.assign(k + 1, poly_zero(z));
      form.terms[k] = cctest::random_poly(z, rng, cs.d - 1, 0);
      form.terms[k - 1] = cctest::random_poly(z, rng, cs.d - 1, 0);
      TauSeriesForm ref = form;
      red1_step(cs, form, k);
      red1_step_reference(cs, ref, k);
      EXPECT_TRUE(poly_equal(z, form.terms[k - 1], ref.terms[k - 1]));
    }
  }
}

TEST(CohomologyProperty, Red1Witnesses) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int it = 0; it < 10; ++it) {
    CurveData c = cctest::random_curve(rng);
    CurveSpec cs = spec_for(c, 7);
    for (int t = 0; t < 8; ++t) {
      int k = 1 + static_cast<int>(rng() % 12);
      int ell = 1 + static_cast<int>(rng() % (2 * c.r - 1));
      EXPECT_TRUE(cctest::witness_red1(cs, rng, ell, k)) << "p=" << c.p << " r=" << c.r << " k=" << k;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 80);
}

TEST(CohomologyProperty, Red2Witnesses) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 10; ++it) {
    CurveData c = cctest::random_curve(rng);
    CurveSpec cs = spec_for(c, 7);
    for (int t = 0; t < 8; ++t) {
      int m = cs.d - 1 + static_cast<int>(rng() % 8);
      int ell = 1 + static_cast<int>(rng() % (c.r - 1));
      EXPECT_TRUE(cctest::witness_red2(cs, rng, ell, m)) << "p=" << c.p << " r=" << c.r << " m=" << m;
    }
  }
}

TEST(Cohomology, Red2ConcreteStep) {
  // r = 2, d = 3, ell = 1, S = x^3: m = 3, LC(T̃) = r(m+1) − ell·d = 5.
  CurveSpec cs = spec_for(cctest::small_curve(7, 2, {3, 1, 0, 1}), 4);
  const ZqContext& z = cs.zq();
  ZqPoly T = poly_from_ints(z, {0, 0, 0, 1});
  ScaledZq factor = red2_step(cs, T, 1);
  EXPECT_EQ(factor.shift, 0);
  EXPECT_EQ(z.mul_int(factor.mantissa, 5), z.one());
  ZqPoly Ttilde = poly_add(z, poly_mul(z, poly_from_ints(z, {2}), cs.fbar),
                           poly_mul(z, poly_from_ints(z, {0, 1}), cs.fbar_deriv));
  ZqPoly expect = poly_sub(z, poly_from_ints(z, {0, 0, 0, 1}), poly_scale(z, Ttilde, factor));
  EXPECT_TRUE(poly_equal(z, T, expect));
  EXPECT_LE(T.degree(), 2);
  // m = d − 1: LC(T̃) = (r − ell)·d.
  ZqPoly U = poly_from_ints(z, {0, 0, 1});
  ScaledZq f2 = red2_step(cs, U, 1);
  EXPECT_EQ(z.mul_int(f2.mantissa, 3), z.one());
}

TEST(CohomologyProperty, Red1ValuationBound) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 12; ++it) {
    CurveData c = cctest::random_curve(rng);
    CurveSpec cs = spec_for(c, 10);
    const ZqContext& z = cs.zq();
    for (int t = 0; t < 4; ++t) {
      int k = 1 + static_cast<int>(rng() % 20);
      int ell = 1 + static_cast<int>(rng() % (2 * c.r - 1));
      TauSeriesForm form;
      form.ell = ell;
      form.terms.assign(k + 1, poly_zero(z));
      form.terms[k] = cctest::random_poly(z, rng, cs.d - 1, 0);
      lower_shift(z, form.terms[k], 0);
      TauSeriesForm out = reduce_tau(cs, form);
      int bound = floor_log(c.p, BigInt(c.r) * (k - 1) + ell);
      for (const auto& P : out.terms)
        if (!P.is_zero()) {
          EXPECT_GE(P.shift, -bound) << "k=" << k << " ell=" << ell << " p=" << c.p;
        }
    }
  }
}

TEST(CohomologyProperty, Red2ValuationBound) {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 12; ++it) {
    CurveData c = cctest::random_curve(rng);
    CurveSpec cs = spec_for(c, 10);
    const ZqContext& z = cs.zq();
    for (int t = 0; t < 4; ++t) {
      int m = cs.d - 1 + static_cast<int>(rng() % 30);
      int ell = 1 + static_cast<int>(rng() % (c.r - 1));
      ZqPoly T = cctest::random_poly(z, rng, m, 0);
      lower_shift(z, T, 0);
      ZqPoly out = reduce_x(cs, T, ell);
      EXPECT_LE(out.degree(), cs.d - 2);
      int bound = floor_log(c.p, BigInt(c.r) * (m + 1) - static_cast<long>(ell) * cs.d, BigInt(cs.delta));
      if (!out.is_zero()) {
        EXPECT_GE(out.shift, -std::max(bound, 0)) << "m=" << m << " p=" << c.p;
      }
    }
  }
}

TEST(Cohomology, ZeroFormGivesZeroRow) {
  CurveSpec cs = spec_for(cctest::small_curve(7, 3, {1, 2, 0, 3, 1}), 5);
  TauSeriesForm form;
  form.ell = 1;
  form.terms.assign(4, poly_zero(cs.zq()));
  auto row = reduce_form(cs, form, BasisKind::B);
  ASSERT_EQ(static_cast<int>(row.size()), cs.d - 1);
  for (const auto& e : row) EXPECT_TRUE(scaled_is_zero(e));
}

TEST(Cohomology, BasisFormShape) {
  // Every term carries the factor p from F(dx); nothing survives above μ_j.
  CurveData c = cctest::small_curve(7, 3, {1, 2, 0, 3, 1});
  for (BasisKind b : {BasisKind::B, BasisKind::Bprime}) {
    PrecisionPlan plan = precision_plan(c, b);
    CurveSpec cs = spec_for(c, plan.W);
    TauSeries S = frob_y_inv_series(cs, plan);
    for (int j = 1; j <= 2; ++j) {
      TauSeriesForm w = frob_basis_form(cs, plan, 1, j, S, b);
      EXPECT_EQ(w.ell, b == BasisKind::B ? j : 3 + j);
      bool any = false;
      for (int k = 0; k < static_cast<int>(w.terms.size()); ++k) {
        if (w.terms[k].is_zero()) continue;
        any = true;
        EXPECT_GE(w.terms[k].shift, 1);
        EXPECT_LE(k, plan.mu_of_j[j]);
        // B keeps a long τ^0 head for Red2.
        if (k > 0 || b == BasisKind::Bprime) {
          EXPECT_LT(w.terms[k].degree(), cs.d);
        }
      }
      EXPECT_TRUE(any);
    }
  }
}

TEST(CohomologyProperty, BprimeNeverNeedsRed2) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 6; ++it) {
    CurveData c = cctest::random_curve(rng);
    PrecisionPlan plan = precision_plan(c, BasisKind::Bprime);
    CurveSpec cs = spec_for(c, plan.W);
    TauSeries S = frob_y_inv_series(cs, plan);
    ReductionStats st;
    for (int j = 1; j < c.r; ++j) {
      TauSeries SJ = S;
      for (int e = 1; e < c.r + j; ++e) SJ = series_mul(cs.zq(), cs.fb, SJ, S, plan.series_trunc);
      for (auto& form : frob_basis_forms_for_j(cs, plan, j, SJ, BasisKind::Bprime))
        reduce_form(cs, form, BasisKind::Bprime, &st);
    }
    EXPECT_EQ(st.red2_steps, 0);
    EXPECT_EQ(st.bprime_noop_checks, static_cast<long>((c.r - 1) * (c.degree() - 1)));
  }
}
