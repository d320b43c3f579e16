#include "cyclecover/cohomology.hpp"

#include <algorithm>

#include "cyclecover/errors.hpp"

namespace cyclecover {

void ReductionStats::merge(const ReductionStats& o) {
  worst_shift = std::min(worst_shift, o.worst_shift);
  red1_steps += o.red1_steps;
  red2_steps += o.red2_steps;
  bprime_noop_checks += o.bprime_noop_checks;
}

CurveSpec CurveSpec::make(const CurveData& raw, ContextPtr ctx) {
  CurveData data = normalized_curve(raw);
  validate_shape(data);
  if (ctx->p() != data.p || ctx->n() != data.n) throw InvalidInput("context does not match the curve's field");
  CurveSpec c;
  c.ctx = ctx;
  c.data = data;
  c.r = data.r;
  c.d = data.degree();
  auto [g, delta] = genus_delta(c.r, c.d);
  c.g = g;
  c.delta = delta;
  const ZqContext& z = *ctx;
  std::vector<ZqElem> el;
  for (const auto& coeff : data.f) el.push_back(z.from_small(coeff));
  c.fbar = poly_from_elems(z, el);
  c.fbar_deriv = poly_derivative(z, c.fbar);
  c.fb = FbarData::from_poly(z, c.fbar);
  c.pair = bezout_pair(z, c.fbar);

  const int d = c.d;
  c.split_a.assign(static_cast<std::size_t>(d - 1) * d, z.zero());
  c.split_bd.assign(static_cast<std::size_t>(d - 1) * d, z.zero());
  for (int col = 0; col < d; ++col) {
    ZqPoly A, B;
    split_bezout(z, poly_monomial(z, col, z.one()), c.fbar, c.pair, A, B);
    ZqPoly Bd = poly_derivative(z, B);
    lower_shift(z, A, 0);
    lower_shift(z, Bd, 0);
    CC_ASSERT(A.shift >= 0 && Bd.shift >= 0, "split of a monomial must be integral");
    for (int row = 0; row < d - 1; ++row) {
      if (row < static_cast<int>(A.size())) c.split_a[row * d + col] = A.get(row);
      if (row < static_cast<int>(Bd.size())) c.split_bd[row * d + col] = Bd.get(row);
    }
  }
  return c;
}

TauSeries frob_r_series(const CurveSpec& curve, int max_index) {
  const ZqContext& z = curve.zq();
  const long p = z.p();
  // F(f̄)(x) = Σ σ(f̄_i) x^{pi}
  ZqPoly Ff(z.n(), static_cast<std::size_t>(p) * curve.d + 1);
  for (int i = 0; i <= curve.d; ++i) Ff.set(static_cast<std::size_t>(p) * i, z.apply_sigma(curve.fbar.get(i), 1));
  ZqPoly fp = poly_from_ints(z, {1});
  {
    ZqPoly base = curve.fbar;
    long e = p;
    while (e) {
      if (e & 1) fp = poly_mul(z, fp, base);
      e >>= 1;
      if (e) base = poly_mul(z, base, base);
    }
  }
  ZqPoly D = poly_sub(z, Ff, fp);
  CC_ASSERT(D.is_zero() || D.shift >= 1, "F(f̄) − f̄^p is not divisible by p");
  lower_shift(z, D, 0);

  TauSeries out(z.n(), curve.d, std::max(1, std::min(max_index, static_cast<int>(p)) + 1));
  out.at(0, 0)[0] = 1;
  if (max_index < 1 || D.is_zero()) return out;
  RawSeries raw;
  raw.n = z.n();
  const int T = raw.T();
  raw.rows.assign(p + 1, std::vector<BigInt>(static_cast<std::size_t>(curve.d) * T));
  raw.rows[p].assign(D.size() * T, BigInt(0));
  for (std::size_t i = 0; i < D.size(); ++i)
    for (int s = 0; s < z.n(); ++s) raw.rows[p][i * T + s] = D.coeff(i)[s];
  normalize_raw(z, curve.fb, raw, HeadPolicy::Strict);
  for (int k = 1; k <= std::min<int>(max_index, p); ++k)
    for (int i = 0; i < raw.width(k); ++i)
      for (int s = 0; s < z.n(); ++s) out.at(k, i)[s] = raw.at(k, i)[s];
  return out;
}

namespace {

TauSeries series_pow(const ZqContext& z, const FbarData& fb, const TauSeries& s, int e, int max_index) {
  TauSeries acc = series_one(z, fb.d, 1);
  TauSeries base = s;
  while (e) {
    if (e & 1) acc = series_mul(z, fb, acc, base, max_index);
    e >>= 1;
    if (e) base = series_mul(z, fb, base, base, max_index);
  }
  return acc;
}

}  // namespace

TauSeries frob_y_inv_series(const CurveSpec& curve, const PrecisionPlan& plan) {
  const ZqContext& z = curve.zq();
  const int M = std::max(0, plan.series_trunc);
  TauSeries R = frob_r_series(curve, M);
  TauSeries S = series_one(z, curve.d, 1);
  BigInt rinv;
  BigInt rr = curve.r;
  mpz_invert(rinv.get_mpz_t(), rr.get_mpz_t(), z.modulus().get_mpz_t());
  // The error 1 − R S^r starts at valuation 1 and squares each iteration.
  int iters = 1;
  while ((1 << (iters - 1)) < z.precision()) ++iters;
  for (int it = 0; it < iters; ++it) {
    TauSeries Sr = series_pow(z, curve.fb, S, curve.r, M);
    TauSeries E = series_sub(z, series_one(z, curve.d, 1), series_mul(z, curve.fb, R, Sr, M));
    bool zero = std::all_of(E.data.begin(), E.data.end(), [](const BigInt& v) { return v == 0; });
    if (zero) break;
    S = series_add(z, S, series_mul_int(z, series_mul(z, curve.fb, S, E, M), rinv));
  }
  return S;
}

void pole_data(long p, int r, int j, int& ell, int& a) {
  long jp = static_cast<long>(j) * p;
  ell = static_cast<int>(jp % r);
  a = static_cast<int>((jp - ell) / r);
}

namespace {

TauSeriesForm raw_to_form(const ZqContext& z, const RawSeries& raw, int ell) {
  const int n = z.n(), T = raw.T();
  TauSeriesForm form;
  form.ell = ell;
  form.terms.resize(raw.rows.size());
  for (std::size_t k = 0; k < raw.rows.size(); ++k) {
    int w = static_cast<int>(raw.rows[k].size()) / T;
    ZqPoly P(n, w);
    for (int i = 0; i < w; ++i)
      for (int s = 0; s < n; ++s) P.coeff(i)[s] = raw.rows[k][static_cast<std::size_t>(i) * T + s];
    P.shift = 1;  // the factor p in F(dx) = p x^{p−1} dx
    canonicalize_poly(z, P);
    form.terms[k] = std::move(P);
  }
  return form;
}

void shift_rows_x(RawSeries& raw, int e) {
  const int T = raw.T();
  for (auto& row : raw.rows) {
    if (row.empty()) continue;
    row.insert(row.begin(), static_cast<std::size_t>(e) * T, BigInt(0));
  }
}

}  // namespace

std::vector<TauSeriesForm> frob_basis_forms_for_j(const CurveSpec& curve, const PrecisionPlan& plan, int j,
                                                  const TauSeries& SJ, BasisKind basis) {
  const ZqContext& z = curve.zq();
  const long p = z.p();
  int ell, a;
  pole_data(p, curve.r, j, ell, a);
  int form_ell = ell, pre = a;
  if (basis == BasisKind::Bprime) {
    form_ell = curve.r + ell;
    pre = a + static_cast<int>(p) - 1;
  }
  const int mu = plan.mu_of_j.at(j);
  const int n = z.n(), T = 2 * n - 1, d = curve.d;
  const HeadPolicy policy = basis == BasisKind::B ? HeadPolicy::KeepHead : HeadPolicy::Strict;

  RawSeries raw;
  raw.n = n;
  raw.rows.assign(std::max(mu, 0) + 1, {});
  for (int k = 0; k < SJ.length() && k + pre <= mu; ++k) {
    auto& row = raw.rows[k + pre];
    row.assign(static_cast<std::size_t>(d) * T, BigInt(0));
    for (int i = 0; i < d; ++i)
      for (int s = 0; s < n; ++s) row[static_cast<std::size_t>(i) * T + s] = SJ.at(k, i)[s];
  }
  for (auto& row : raw.rows)
    if (row.empty()) row.assign(static_cast<std::size_t>(d) * T, BigInt(0));

  std::vector<TauSeriesForm> out;
  shift_rows_x(raw, static_cast<int>(p) - 1);
  normalize_raw(z, curve.fb, raw, policy);
  out.push_back(raw_to_form(z, raw, form_ell));
  for (int i = 1; i <= d - 2; ++i) {
    shift_rows_x(raw, static_cast<int>(p));
    normalize_raw(z, curve.fb, raw, policy);
    out.push_back(raw_to_form(z, raw, form_ell));
  }
  return out;
}

TauSeriesForm frob_basis_form(const CurveSpec& curve, const PrecisionPlan& plan, int i, int j, const TauSeries& S,
                              BasisKind basis) {
  int J = basis == BasisKind::B ? j : curve.r + j;
  const ZqContext& z = curve.zq();
  TauSeries SJ = series_one(z, curve.d, 1);
  for (int e = 0; e < J; ++e) SJ = series_mul(z, curve.fb, SJ, S, plan.series_trunc);
  auto forms = frob_basis_forms_for_j(curve, plan, j, SJ, basis);
  return forms.at(i);
}

namespace {

void note_shift(ReductionStats* stats, const ZqPoly& P) {
  if (stats && !P.is_zero()) stats->worst_shift = std::min(stats->worst_shift, P.shift);
}

// out[row] = Σ_col M[row][col] * R[col], reduced mod (Q, p^W).
void apply_split(const ZqContext& z, const std::vector<ZqElem>& M, int d, const ZqPoly& R, std::vector<BigInt>& out,
                 std::vector<BigInt>& raw) {
  const int n = z.n(), T = 2 * n - 1;
  out.assign(static_cast<std::size_t>(d - 1) * n, BigInt(0));
  raw.resize(T);
  const int len = std::min<int>(d, static_cast<int>(R.size()));
  for (int row = 0; row < d - 1; ++row) {
    for (auto& x : raw) x = 0;
    for (int col = 0; col < len; ++col) {
      if (R.coeff_is_zero(col)) continue;
      z.addmul_raw(raw.data(), M[row * d + col].c.data(), R.coeff(col));
    }
    z.reduce_raw(raw.data(), T);
    for (int s = 0; s < n; ++s) out[static_cast<std::size_t>(row) * n + s] = raw[s];
  }
}

}  // namespace

void red1_step(const CurveSpec& curve, TauSeriesForm& form, int k, ReductionStats* stats) {
  const ZqContext& z = curve.zq();
  const int d = curve.d, n = z.n();
  CC_ASSERT(k >= 1 && k < static_cast<int>(form.terms.size()), "red1_step index out of range");
  ZqPoly R = std::move(form.terms[k]);
  form.terms[k] = poly_zero(z);
  R.trim();
  if (R.is_zero()) return;
  CC_ASSERT(R.degree() < d, "red1_step: term not normalized");

  std::vector<BigInt> X, Y, raw;
  apply_split(z, curve.split_a, d, R, X, raw);
  apply_split(z, curve.split_bd, d, R, Y, raw);
  BigInt m = static_cast<long>(curve.r) * (k - 1) + form.ell;
  int v = strip_p(z.p(), m);
  BigInt cu;
  mpz_invert(cu.get_mpz_t(), m.get_mpz_t(), z.modulus().get_mpz_t());
  cu *= curve.r;
  z.mod_in_place(cu);

  ZqPoly C(n, d - 1);
  C.shift = R.shift - v;
  for (std::size_t idx = 0; idx < X.size(); ++idx) {
    BigInt& dst = C.data[idx];
    if (v < z.precision()) dst = X[idx] * z.p_power(v);
    dst += cu * Y[idx];
    z.mod_in_place(dst);
  }
  canonicalize_poly(z, C);
  form.terms[k - 1] = poly_add(z, form.terms[k - 1], C);
  note_shift(stats, form.terms[k - 1]);
  if (stats) ++stats->red1_steps;
}

void red1_step_reference(const CurveSpec& curve, TauSeriesForm& form, int k) {
  const ZqContext& z = curve.zq();
  ZqPoly R = std::move(form.terms[k]);
  form.terms[k] = poly_zero(z);
  if (R.is_zero()) return;
  ZqPoly A, B;
  split_bezout(z, R, curve.fbar, curve.pair, A, B);
  ScaledZq c = zq_div_exact_int(z, scaled(z, z.from_int(curve.r)), static_cast<long>(curve.r) * (k - 1) + form.ell);
  ZqPoly contrib = poly_add(z, A, poly_scale(z, poly_derivative(z, B), c));
  form.terms[k - 1] = poly_add(z, form.terms[k - 1], contrib);
}

TauSeriesForm reduce_tau(const CurveSpec& curve, TauSeriesForm form, ReductionStats* stats) {
  for (auto& t : form.terms)
    if (t.n != curve.zq().n()) t = poly_zero(curve.zq());
  for (int k = static_cast<int>(form.terms.size()) - 1; k >= 1; --k) red1_step(curve, form, k, stats);
  if (form.terms.size() > 1) form.terms.resize(1);
  if (form.terms.empty()) form.terms.push_back(poly_zero(curve.zq()));
  return form;
}

ScaledZq red2_step(const CurveSpec& curve, ZqPoly& T, int ell, ReductionStats* stats) {
  const ZqContext& z = curve.zq();
  const int d = curve.d, n = z.n(), r = curve.r;
  int m = T.degree();
  CC_ASSERT(m >= d - 1, "red2_step: degree already <= d−2");
  CC_ASSERT(ell >= 1 && ell < r, "red2_step: pole order outside [1, r−1]");
  BigInt L = static_cast<long>(r) * (m + 1) - static_cast<long>(ell) * d;
  CC_ASSERT(L != 0, "red2_step: LC(T̃) vanished");
  int v = strip_p(z.p(), L);
  BigInt uinv;
  mpz_invert(uinv.get_mpz_t(), L.get_mpz_t(), z.modulus().get_mpz_t());
  ZqElem lc = T.get(m);
  ZqElem fac = z.mul_int(lc, uinv);
  ScaledZq factor{T.shift - v, fac};

  lower_shift(z, T, T.shift - v);
  std::vector<BigInt> raw(2 * n - 1);
  for (int idx = 0; idx < d; ++idx) {
    int k = m - d + idx;
    if (k < 0) continue;
    long ci = static_cast<long>(r) * (m - d + 1) + static_cast<long>(r - ell) * idx;
    if (ci == 0) continue;
    for (auto& x : raw) x = 0;
    for (int s = 0; s < n; ++s) raw[s] = T.coeff(k)[s];
    for (int t = 0; t < n; ++t) {
      unsigned long f = curve.fb.c[idx * n + t];
      if (!f) continue;
      BigInt mult = BigInt(ci) * f;
      for (int s = 0; s < n; ++s) raw[s + t] -= fac.c[s] * mult;
    }
    z.reduce_raw(raw.data(), 2 * n - 1);
    for (int s = 0; s < n; ++s) T.coeff(k)[s] = raw[s];
  }
  for (int s = 0; s < n; ++s) T.coeff(m)[s] = 0;
  canonicalize_poly(z, T);
  note_shift(stats, T);
  if (stats) ++stats->red2_steps;
  return canonicalize(z, factor);
}

ZqPoly reduce_x(const CurveSpec& curve, ZqPoly T, int ell, ReductionStats* stats) {
  T.trim();
  while (T.degree() >= curve.d - 1) red2_step(curve, T, ell, stats);
  return T;
}

std::vector<ScaledZq> reduce_form(const CurveSpec& curve, TauSeriesForm form, BasisKind basis,
                                  ReductionStats* stats) {
  const ZqContext& z = curve.zq();
  TauSeriesForm red = reduce_tau(curve, std::move(form), stats);
  ZqPoly T = red.terms.empty() ? poly_zero(z) : red.terms[0];
  T.trim();
  if (basis == BasisKind::Bprime || red.ell >= curve.r) {
    CC_ASSERT(T.degree() <= curve.d - 2, "B′ structural guarantee violated: reduce_x would be required");
    if (stats) ++stats->bprime_noop_checks;
  } else {
    T = reduce_x(curve, std::move(T), red.ell, stats);
  }
  std::vector<ScaledZq> row(curve.d - 1);
  for (int k = 0; k < curve.d - 1; ++k) {
    row[k] = (k < static_cast<int>(T.size())) ? canonicalize(z, ScaledZq{T.shift, T.get(k)})
                                              : ScaledZq{0, z.zero()};
  }
  return row;
}

}  // namespace cyclecover
