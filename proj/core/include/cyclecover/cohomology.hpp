#pragma once

#include <vector>

#include "cyclecover/curve.hpp"
#include "cyclecover/padic.hpp"
#include "cyclecover/plan.hpp"
#include "cyclecover/polyring.hpp"
#include "cyclecover/series.hpp"

namespace cyclecover {

struct CurveSpec {
  ContextPtr ctx;
  CurveData data;
  int r = 0;
  int d = 0;
  int delta = 0;
  int g = 0;
  ZqPoly fbar;
  ZqPoly fbar_deriv;
  FbarData fb;
  BezoutPair pair;
  // The Red1 split is linear in R: A = split_a · R and B' = split_bd · R, both
  // (d−1) × d matrices stored row-major.
  std::vector<ZqElem> split_a;
  std::vector<ZqElem> split_bd;

  // Validates (InvalidInput, CharacteristicDividesDegree, NotSquarefree) and
  // lifts f trivially into the context.
  static CurveSpec make(const CurveData& data, ContextPtr ctx);
  const ZqContext& zq() const { return *ctx; }
};

// Σ_k R_k(x) τ^k dx / y^ell; terms[k] each carry their own shift.
struct TauSeriesForm {
  int ell = 1;
  std::vector<ZqPoly> terms;
};

struct ReductionStats {
  int worst_shift = 0;
  long red1_steps = 0;
  long red2_steps = 0;
  long bprime_noop_checks = 0;

  void merge(const ReductionStats& o);
};

// S = R^{−1/r}, R = 1 + (f̄^σ(x^p) − f̄(x)^p) τ^p, truncated at plan.series_trunc.
TauSeries frob_y_inv_series(const CurveSpec& curve, const PrecisionPlan& plan);
// R itself (used by self-checks).
TauSeries frob_r_series(const CurveSpec& curve, int max_index);

// ℓ = jp mod r and a = (jp − ℓ)/r.
void pole_data(long p, int r, int j, int& ell, int& a);

// F(x^i dx/y^j) (B) or F(x^i dx/y^{r+j}) (B′), normalized and truncated at μ_j.
TauSeriesForm frob_basis_form(const CurveSpec& curve, const PrecisionPlan& plan, int i, int j, const TauSeries& S,
                              BasisKind basis);
// All i = 0..d−2 for one j, given S^J (J = j for B, r+j for B′).
std::vector<TauSeriesForm> frob_basis_forms_for_j(const CurveSpec& curve, const PrecisionPlan& plan, int j,
                                                  const TauSeries& SJ, BasisKind basis);

// One Red1 step at index k >= 1: R_k τ^k → (A_k + r/(r(k−1)+ell) B_k') τ^{k−1}.
void red1_step(const CurveSpec& curve, TauSeriesForm& form, int k, ReductionStats* stats = nullptr);
// The same step through split_bezout (reference path).
void red1_step_reference(const CurveSpec& curve, TauSeriesForm& form, int k);
TauSeriesForm reduce_tau(const CurveSpec& curve, TauSeriesForm form, ReductionStats* stats = nullptr);

// One Red2 step on T of degree m >= d−1; returns LC(T)/LC(T̃).
ScaledZq red2_step(const CurveSpec& curve, ZqPoly& T, int ell, ReductionStats* stats = nullptr);
ZqPoly reduce_x(const CurveSpec& curve, ZqPoly T, int ell, ReductionStats* stats = nullptr);

// Full reduction; returns the d−1 coefficients of the reduced form.
std::vector<ScaledZq> reduce_form(const CurveSpec& curve, TauSeriesForm form, BasisKind basis,
                                  ReductionStats* stats = nullptr);

}  // namespace cyclecover
