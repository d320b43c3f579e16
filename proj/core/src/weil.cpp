#include "cyclecover/weil.hpp"

#include <algorithm>
#include <chrono>

#include "cyclecover/errors.hpp"

namespace cyclecover {

int compute_N0(long p, int n, int g) {
  BigInt q = ipow(p, static_cast<unsigned long>(n));
  BigInt c = 2 * binomial(2 * g, g);
  BigInt target = c * c * ipow(q, static_cast<unsigned long>(g));
  int N0 = 0;
  BigInt acc = 1;
  BigInt p2 = BigInt(p) * p;
  while (acc < target) {
    acc *= p2;
    ++N0;
  }
  return std::max(N0, 1);
}

PrecisionPlan precision_plan(const CurveData& curve, BasisKind basis, int extra_n, int guard_extra) {
  const long p = curve.p;
  const int r = curve.r, d = curve.degree(), n = curve.n;
  auto [g, delta] = genus_delta(r, d);
  PrecisionPlan plan;
  plan.basis = basis;
  plan.N0 = compute_N0(p, n, g);
  plan.guard_extra = guard_extra;
  const BigInt inner = BigInt(d) * p * (r - 1) + r;
  const int inner_log = floor_log(p, inner, delta);
  int N = 1;
  if (basis == BasisKind::B) {
    while (N - floor_log(p, BigInt(p) * (static_cast<long>(r) * N - 1) - r) < plan.N0 + inner_log) ++N;
  } else {
    while (N - floor_log(p, BigInt(p) * r * (N + 1) - 3 * r) < plan.N0) ++N;
  }
  N += extra_n;
  plan.N = N;
  if (basis == BasisKind::B) {
    plan.G = floor_log(p, BigInt(p) * (static_cast<long>(r) * N - 1) - r) + inner_log;
    int D1 = floor_log(p, r);
    int D2 = floor_log(p, BigInt(2 * g + delta - 2), BigInt(delta));
    plan.D = std::max({0, D1, D2});
  } else {
    plan.G = floor_log(p, BigInt(p) * r * (N + 1) - 3 * r);
    plan.D = std::max(0, floor_log(p, 2 * r - 1));
  }
  plan.G = std::max(plan.G, 0);
  plan.H = (2 * g + delta - 1) * n * plan.D;
  plan.W = plan.N + plan.G + plan.H + guard_extra;
  plan.series_trunc = std::max(0, static_cast<int>(p * (N - 1) - 1));
  plan.mu_of_j.assign(r, 0);
  for (int j = 1; j < r; ++j) {
    int a = static_cast<int>((static_cast<long>(j) * p) / r);
    plan.mu_of_j[j] = basis == BasisKind::B ? static_cast<int>(p * (N - 1) + a - 1) : static_cast<int>(p * N + a - 2);
  }
  return plan;
}

BasisKind select_basis(long p, int r, int g, int delta, std::optional<BasisKind> override) {
  if (override) return *override;
  if (p >= 2 * r) return BasisKind::Bprime;
  int lhs = floor_log(p, 2 * r - 1);
  int rhs = std::max(floor_log(p, r), floor_log(p, BigInt(2 * g - (delta - 2)), BigInt(delta)));
  return lhs <= rhs ? BasisKind::Bprime : BasisKind::B;
}

namespace {

std::vector<BigInt> int_poly_mul_small(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

BigInt sym_lift(const BigInt& x, const BigInt& m) {
  BigInt v = x % m;
  if (v < 0) v += m;
  // (−m/2, m/2]: values above m/2 move down.
  if (2 * v > m) v -= m;
  return v;
}

}  // namespace

std::vector<BigInt> extra_factor(int delta, const BigInt& q, BasisKind basis, ExtraFactorVariant variant) {
  std::vector<BigInt> U{1};
  for (int i = 2; i <= delta; ++i) {
    if (delta % i) continue;
    long phi = euler_phi(i);
    long k;
    BigInt root;
    if (variant == ExtraFactorVariant::Corrected) {
      k = multiplicative_order(q, i);
      root = basis == BasisKind::B ? ipow(q, static_cast<unsigned long>(k)) : BigInt(1);
    } else {
      BigInt qm = q % phi;
      long qs = qm.get_si();
      k = (phi == 1 || gcd_long(qs, phi) != 1) ? 1 : multiplicative_order(q, phi);
      root = basis == BasisKind::B ? q : BigInt(1);
    }
    long e = phi / k;
    std::vector<BigInt> fac(k + 1);
    fac[0] = -root;
    fac[k] = 1;
    for (long t = 0; t < e; ++t) U = int_poly_mul_small(U, fac);
  }
  return U;
}

WeilPolynomial lift_weil(const std::vector<BigInt>& chi, const std::vector<BigInt>& U, int g, const BigInt& q, long p,
                         int N0) {
  const int du = static_cast<int>(U.size()) - 1;
  if (static_cast<int>(chi.size()) - 1 != du + 2 * g)
    throw VerificationError(VerificationError::Kind::DivisionInexact, "lift_weil: degree mismatch between chi and U");
  if (U.back() != 1) throw InvalidInput("lift_weil: U must be monic");
  const BigInt m = ipow(p, static_cast<unsigned long>(N0));
  std::vector<BigInt> rem(chi.begin(), chi.end());
  std::vector<BigInt> P(2 * g + 1);
  for (int k = static_cast<int>(rem.size()) - 1; k >= du; --k) {
    BigInt c = rem[k] % m;
    if (c < 0) c += m;
    P[k - du] = c;
    for (int i = 0; i <= du; ++i) rem[k - du + i] -= c * U[i];
  }
  for (int i = 0; i < du; ++i)
    if (rem[i] % m != 0) throw VerificationError(VerificationError::Kind::DivisionInexact, "chi / U is inexact mod p^N0");

  WeilPolynomial W;
  W.g = g;
  W.q = q;
  W.a.resize(g);
  for (int i = 1; i <= g; ++i) W.a[i - 1] = sym_lift(P[2 * g - i], m);
  BigInt qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    BigInt b = binomial(2 * g, i);
    if (W.a[i - 1] * W.a[i - 1] > b * b * qi)
      throw VerificationError(VerificationError::Kind::WeilBound, "Weil bound violated at a_" + std::to_string(i));
  }
  qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    BigInt expect = qi * (g - i == 0 ? BigInt(1) : W.a[g - i - 1]);
    BigInt diff = (P[g - i] - expect) % m;
    if (diff != 0)
      throw VerificationError(VerificationError::Kind::FunctionalEquation,
                              "functional equation violated at t^" + std::to_string(g - i));
  }
  if (W.jacobian_order() <= 0)
    throw VerificationError(VerificationError::Kind::JacobianOrder, "P(1) is not positive");
  return W;
}

WeilResult weil_polynomial(const CurveData& raw, const WeilOptions& options) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto lap = [&](WeilDiagnostics& dg, const char* name) {
    auto t1 = clock::now();
    dg.timings.emplace_back(name, std::chrono::duration<double>(t1 - t0).count());
    t0 = t1;
  };

  CurveData data = normalized_curve(raw);
  validate_shape(data);
  if (!is_squarefree(data)) throw NotSquarefree("f is not squarefree mod p");

  WeilResult res;
  WeilDiagnostics& dg = res.diag;
  auto [g, delta] = genus_delta(data.r, data.degree());
  dg.g = g;
  dg.delta = delta;
  const BigInt q = data.q();
  dg.cycles = cycle_decomposition(data.r, q);
  dg.basis = select_basis(data.p, data.r, g, delta, options.basis);
  dg.plan = precision_plan(data, dg.basis, options.extra_n, options.guard_extra);
  if (g == 0) {
    res.poly = WeilPolynomial{0, q, {}};
    return res;
  }
  const PrecisionPlan& plan = dg.plan;

  auto ctx = make_context(data.p, data.n, plan.W, data.field_poly);
  CurveSpec curve = CurveSpec::make(data, ctx);
  lap(dg, "setup");

  FrobBlockMatrix Mf = assemble_frobenius_matrix(curve, plan, dg.basis, &dg.stats, options.threads);
  lap(dg, "frobenius_matrix");
  dg.block_support_ok = has_block_support(Mf);
  dg.matrix_min_shift = min_entry_shift(Mf);
  if (dg.stats.worst_shift < -plan.G)
    throw PrecisionError("precision exhausted: observed shift " + std::to_string(dg.stats.worst_shift) +
                         " exceeds guard " + std::to_string(plan.G));
  if (dg.matrix_min_shift < -plan.D)
    throw PrecisionError("precision exhausted: matrix shift " + std::to_string(dg.matrix_min_shift) +
                         " below integrality bound " + std::to_string(plan.D));

  FrobBlockMatrix M = frobenius_norm(*ctx, Mf, data.n);
  lap(dg, "norm");
  dg.chi = charpoly(*ctx, M, dg.cycles, plan.N0);
  lap(dg, "charpoly");
  if (options.dense_check) {
    FrobBlockMatrix Md = frobenius_norm_dense(*ctx, Mf, data.n);
    CC_ASSERT(matrices_agree(*ctx, M, Md, plan.N0), "blocked and dense norms disagree");
    CC_ASSERT(charpoly_dense(*ctx, M, plan.N0) == dg.chi, "blocked and dense charpolys disagree");
    lap(dg, "dense_check");
  }
  dg.chi_degree = static_cast<int>(dg.chi.size()) - 1;
  dg.U = extra_factor(delta, q, dg.basis, options.variant);
  res.poly = lift_weil(dg.chi, dg.U, g, q, data.p, plan.N0);
  lap(dg, "lift");
  return res;
}

}  // namespace cyclecover
