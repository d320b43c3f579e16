#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclecover/cohomology.hpp"
#include "cyclecover/curve.hpp"
#include "cyclecover/frobmatrix.hpp"
#include "cyclecover/plan.hpp"
#include "cyclecover/weil_polynomial.hpp"

namespace cyclecover {

// Corrected: k_i = ord_i(q), factors (t^{k_i} − q^{k_i}) (B) / (t^{k_i} − 1) (B′).
// Literal: k_i = order of q in (Z/φ(i)Z)^*, factor (t^{k_i} − q) for B.
enum class ExtraFactorVariant { Corrected, Literal };

// Smallest N0 with p^{2 N0} >= (2·C(2g, g))^2 · q^g.
int compute_N0(long p, int n, int g);

PrecisionPlan precision_plan(const CurveData& curve, BasisKind basis, int extra_n = 0, int guard_extra = 0);

BasisKind select_basis(long p, int r, int g, int delta, std::optional<BasisKind> override = std::nullopt);

// U(t), integer coefficients low→high, monic of degree δ − 1.
std::vector<BigInt> extra_factor(int delta, const BigInt& q, BasisKind basis,
                                 ExtraFactorVariant variant = ExtraFactorVariant::Corrected);

// P = chi / U over Z/p^{N0}, symmetric lift and verification.
WeilPolynomial lift_weil(const std::vector<BigInt>& chi, const std::vector<BigInt>& U, int g, const BigInt& q, long p,
                         int N0);

struct WeilOptions {
  std::optional<BasisKind> basis;
  int extra_n = 0;
  int guard_extra = 0;
  int threads = 1;
  ExtraFactorVariant variant = ExtraFactorVariant::Corrected;
  // Cross-checks the blocked norm and charpoly against the dense references.
  bool dense_check = false;
};

struct WeilDiagnostics {
  int g = 0;
  int delta = 1;
  BasisKind basis = BasisKind::Bprime;
  PrecisionPlan plan;
  CycleDecomposition cycles;
  ReductionStats stats;
  int matrix_min_shift = 0;
  bool block_support_ok = true;
  int chi_degree = 0;
  std::vector<BigInt> chi;
  std::vector<BigInt> U;
  std::vector<std::pair<std::string, double>> timings;
};

struct WeilResult {
  WeilPolynomial poly;
  WeilDiagnostics diag;
};

WeilResult weil_polynomial(const CurveData& curve, const WeilOptions& options = {});

}  // namespace cyclecover
