#include "cyclecover/polyring.hpp"

#include <algorithm>

#include "cyclecover/errors.hpp"

namespace cyclecover {

ZqElem ZqPoly::get(std::size_t i) const {
  ZqElem out{std::vector<BigInt>(n)};
  if (i < size())
    for (int s = 0; s < n; ++s) out.c[s] = coeff(i)[s];
  return out;
}

void ZqPoly::set(std::size_t i, const ZqElem& v) {
  if (i >= size()) resize(i + 1);
  for (int s = 0; s < n; ++s) coeff(i)[s] = v.c[s];
}

bool ZqPoly::coeff_is_zero(std::size_t i) const {
  const BigInt* c = coeff(i);
  for (int s = 0; s < n; ++s)
    if (c[s] != 0) return false;
  return true;
}

int ZqPoly::degree() const {
  for (int i = static_cast<int>(size()) - 1; i >= 0; --i)
    if (!coeff_is_zero(i)) return i;
  return -1;
}

void ZqPoly::trim() {
  resize(static_cast<std::size_t>(degree() + 1));
  if (data.empty()) shift = 0;
}

ZqPoly poly_zero(const ZqContext& ctx) { return ZqPoly(ctx.n(), 0); }

ZqPoly poly_from_elems(const ZqContext& ctx, const std::vector<ZqElem>& coeffs, int shift) {
  ZqPoly P(ctx.n(), coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) P.set(i, coeffs[i]);
  P.shift = shift;
  P.trim();
  return P;
}

ZqPoly poly_from_ints(const ZqContext& ctx, const std::vector<long>& coeffs, int shift) {
  std::vector<ZqElem> el;
  for (long c : coeffs) el.push_back(ctx.from_int(c));
  return poly_from_elems(ctx, el, shift);
}

ZqPoly poly_monomial(const ZqContext& ctx, std::size_t deg, const ZqElem& c, int shift) {
  ZqPoly P(ctx.n(), deg + 1);
  P.set(deg, c);
  P.shift = shift;
  P.trim();
  return P;
}

void canonicalize_poly(const ZqContext& ctx, ZqPoly& P) {
  P.trim();
  if (P.data.empty()) return;
  int v = ctx.precision();
  const unsigned long p = static_cast<unsigned long>(ctx.p());
  for (const auto& c : P.data) {
    if (c == 0) continue;
    if (!mpz_divisible_ui_p(c.get_mpz_t(), p)) return;
    int cv = 1;
    while (cv < v && mpz_divisible_p(c.get_mpz_t(), ctx.p_power(cv + 1).get_mpz_t())) ++cv;
    v = std::min(v, cv);
  }
  const BigInt& pv = ctx.p_power(v);
  for (auto& c : P.data) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pv.get_mpz_t());
  P.shift += v;
}

void lower_shift(const ZqContext& ctx, ZqPoly& P, int s) {
  int delta = P.shift - s;
  if (delta <= 0) return;
  if (delta >= ctx.precision()) {
    std::fill(P.data.begin(), P.data.end(), BigInt(0));
  } else {
    const BigInt& pd = ctx.p_power(delta);
    for (auto& c : P.data) {
      c *= pd;
      ctx.mod_in_place(c);
    }
  }
  P.shift = s;
}

namespace {

ZqPoly add_impl(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? poly_neg(ctx, b) : b;
  int s = std::min(a.shift, b.shift);
  ZqPoly x = a, y = b;
  lower_shift(ctx, x, s);
  lower_shift(ctx, y, s);
  ZqPoly out(ctx.n(), std::max(x.size(), y.size()));
  out.shift = s;
  for (std::size_t i = 0; i < x.data.size(); ++i) out.data[i] = x.data[i];
  for (std::size_t i = 0; i < y.data.size(); ++i) {
    if (subtract)
      out.data[i] -= y.data[i];
    else
      out.data[i] += y.data[i];
    ctx.mod_in_place(out.data[i]);
  }
  canonicalize_poly(ctx, out);
  return out;
}

std::vector<BigInt> schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

std::vector<BigInt> karatsuba(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold) return schoolbook(a, b);
  std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  auto lo = [h](const std::vector<BigInt>& v) {
    return std::vector<BigInt>(v.begin(), v.begin() + std::min(h, v.size()));
  };
  auto hi = [h](const std::vector<BigInt>& v) {
    return v.size() > h ? std::vector<BigInt>(v.begin() + h, v.end()) : std::vector<BigInt>{};
  };
  auto sum = [](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
  };
  auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  auto z0 = karatsuba(a0, b0);
  auto z2 = karatsuba(a1, b1);
  auto z1 = karatsuba(sum(a0, a1), sum(b0, b1));
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size() && i + h < out.size(); ++i) out[i + h] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
  return out;
}

// Packs a Z_q polynomial as an integer polynomial in one variable: coefficient
// i, generator power s goes to index i*(2n−1)+s, so products never collide.
std::vector<BigInt> pack(const ZqPoly& a) {
  const int n = a.n, T = 2 * n - 1;
  std::vector<BigInt> out(a.size() * T);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int s = 0; s < n; ++s) out[i * T + s] = a.coeff(i)[s];
  return out;
}

ZqPoly unpack(const ZqContext& ctx, std::vector<BigInt>& raw, std::size_t len, int shift) {
  const int n = ctx.n(), T = 2 * n - 1;
  ZqPoly out(n, len);
  out.shift = shift;
  raw.resize(len * T + T);
  std::vector<BigInt> buf(T);
  for (std::size_t k = 0; k < len; ++k) {
    for (int s = 0; s < T; ++s) buf[s] = raw[k * T + s];
    ctx.reduce_raw(buf.data(), T);
    for (int s = 0; s < n; ++s) out.coeff(k)[s] = buf[s];
  }
  return out;
}

}  // namespace

ZqPoly poly_add(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b) { return add_impl(ctx, a, b, false); }
ZqPoly poly_sub(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b) { return add_impl(ctx, a, b, true); }

ZqPoly poly_neg(const ZqContext& ctx, const ZqPoly& a) {
  ZqPoly out = a;
  for (auto& c : out.data) {
    c = -c;
    ctx.mod_in_place(c);
  }
  return out;
}

std::vector<BigInt> int_poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  return karatsuba(a, b);
}

ZqPoly poly_mul(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero(ctx);
  auto raw = karatsuba(pack(a), pack(b));
  ZqPoly out = unpack(ctx, raw, a.size() + b.size() - 1, a.shift + b.shift);
  canonicalize_poly(ctx, out);
  return out;
}

ZqPoly poly_mul_schoolbook(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero(ctx);
  auto raw = schoolbook(pack(a), pack(b));
  ZqPoly out = unpack(ctx, raw, a.size() + b.size() - 1, a.shift + b.shift);
  canonicalize_poly(ctx, out);
  return out;
}

ZqPoly poly_scale(const ZqContext& ctx, const ZqPoly& a, const ScaledZq& c) {
  ZqPoly out(ctx.n(), a.size());
  out.shift = a.shift + c.shift;
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, ctx.mul(a.get(i), c.mantissa));
  canonicalize_poly(ctx, out);
  return out;
}

ZqPoly poly_derivative(const ZqContext& ctx, const ZqPoly& a) {
  if (a.size() <= 1) return poly_zero(ctx);
  ZqPoly out(ctx.n(), a.size() - 1);
  out.shift = a.shift;
  for (std::size_t i = 1; i < a.size(); ++i)
    for (int s = 0; s < ctx.n(); ++s) {
      out.coeff(i - 1)[s] = a.coeff(i)[s] * static_cast<unsigned long>(i);
      ctx.mod_in_place(out.coeff(i - 1)[s]);
    }
  canonicalize_poly(ctx, out);
  return out;
}

ZqPoly poly_shift_x(const ZqPoly& a, std::size_t e) {
  if (a.is_zero()) return a;
  ZqPoly out(a.n, a.size() + e);
  out.shift = a.shift;
  std::copy(a.data.begin(), a.data.end(), out.data.begin() + e * a.n);
  return out;
}

ZqPoly poly_sigma(const ZqContext& ctx, const ZqPoly& a, int k) {
  ZqPoly out(ctx.n(), a.size());
  out.shift = a.shift;
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, ctx.apply_sigma(a.get(i), k));
  return out;
}

ScaledZq poly_eval(const ZqContext& ctx, const ZqPoly& a, const ZqElem& x0) {
  ZqElem acc = ctx.zero();
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = ctx.add(ctx.mul(acc, x0), a.get(i));
  return canonicalize(ctx, ScaledZq{a.shift, acc});
}

bool poly_vanishes(const ZqPoly& a, int prec) { return a.is_zero() || a.shift >= prec; }

bool poly_equal(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b) {
  return poly_vanishes(poly_sub(ctx, a, b), ctx.precision());
}

void poly_divmod_monic(const ZqContext& ctx, const ZqPoly& u, const ZqPoly& v, ZqPoly& quot, ZqPoly& rem) {
  int dv = v.degree();
  if (dv < 0 || v.shift != 0 || !(v.get(dv) == ctx.one())) throw InvalidInput("poly_divmod_monic: divisor not monic");
  const int n = ctx.n();
  rem = u;
  rem.trim();
  int du = rem.degree();
  quot = ZqPoly(n, du >= dv ? du - dv + 1 : 0);
  quot.shift = u.shift;
  std::vector<BigInt> raw(2 * n - 1);
  for (int k = du; k >= dv; --k) {
    if (rem.coeff_is_zero(k)) continue;
    std::size_t off = k - dv;
    for (int s = 0; s < n; ++s) quot.coeff(off)[s] = rem.coeff(k)[s];
    for (int i = 0; i < dv; ++i) {
      if (v.coeff_is_zero(i)) continue;
      for (auto& x : raw) x = 0;
      for (int s = 0; s < n; ++s) raw[s] = rem.coeff(off + i)[s];
      ctx.submul_raw(raw.data(), quot.coeff(off), v.coeff(i));
      ctx.reduce_raw(raw.data(), 2 * n - 1);
      for (int s = 0; s < n; ++s) rem.coeff(off + i)[s] = raw[s];
    }
    for (int s = 0; s < n; ++s) rem.coeff(k)[s] = 0;
  }
  canonicalize_poly(ctx, quot);
  canonicalize_poly(ctx, rem);
}

ZqPoly poly_mod_monic(const ZqContext& ctx, const ZqPoly& u, const ZqPoly& v) {
  ZqPoly q, r;
  poly_divmod_monic(ctx, u, v, q, r);
  return r;
}

namespace {

// Polynomials over the residue field F_q, represented in a precision-1 context.
using FieldPoly = std::vector<ZqElem>;

FieldPoly to_field(const ZqContext& c1, const ZqPoly& a) {
  if (a.shift < 0) throw InvalidInput("polynomial not integral");
  FieldPoly out;
  if (a.shift > 0) return out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(c1.from_coeffs(a.get(i).c));
  while (!out.empty() && c1.is_zero(out.back())) out.pop_back();
  return out;
}

void field_trim(const ZqContext& c1, FieldPoly& a) {
  while (!a.empty() && c1.is_zero(a.back())) a.pop_back();
}

FieldPoly field_sub_mul(const ZqContext& c1, const FieldPoly& a, const FieldPoly& q, const FieldPoly& b) {
  FieldPoly out = a;
  if (q.empty() || b.empty()) return out;
  out.resize(std::max(a.size(), q.size() + b.size() - 1), c1.zero());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = c1.sub(out[i + j], c1.mul(q[i], b[j]));
  field_trim(c1, out);
  return out;
}

void field_divmod(const ZqContext& c1, const FieldPoly& u, const FieldPoly& v, FieldPoly& q, FieldPoly& r) {
  r = u;
  q.clear();
  if (r.size() < v.size()) return;
  ZqElem li = c1.inv(v.back());
  q.assign(r.size() - v.size() + 1, c1.zero());
  for (int k = static_cast<int>(r.size()) - 1; k >= static_cast<int>(v.size()) - 1; --k) {
    ZqElem c = c1.mul(r[k], li);
    std::size_t off = k - (v.size() - 1);
    q[off] = c;
    for (std::size_t i = 0; i < v.size(); ++i) r[off + i] = c1.sub(r[off + i], c1.mul(c, v[i]));
  }
  field_trim(c1, q);
  field_trim(c1, r);
}

// Returns monic g = s*a + t*b.
FieldPoly field_xgcd(const ZqContext& c1, FieldPoly a, FieldPoly b, FieldPoly& s, FieldPoly& t) {
  FieldPoly s0{c1.one()}, s1{}, t0{}, t1{c1.one()};
  while (!b.empty()) {
    FieldPoly q, r;
    field_divmod(c1, a, b, q, r);
    FieldPoly s2 = field_sub_mul(c1, s0, q, s1);
    FieldPoly t2 = field_sub_mul(c1, t0, q, t1);
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) {
    s = s0;
    t = t0;
    return a;
  }
  ZqElem li = c1.inv(a.back());
  for (auto& x : a) x = c1.mul(x, li);
  for (auto& x : s0) x = c1.mul(x, li);
  for (auto& x : t0) x = c1.mul(x, li);
  s = s0;
  t = t0;
  return a;
}

ZqPoly from_field(const ZqContext& ctx, const FieldPoly& a) {
  std::vector<ZqElem> el;
  for (const auto& x : a) el.push_back(ctx.from_coeffs(x.c));
  return poly_from_elems(ctx, el);
}

}  // namespace

ZqPoly residue_gcd(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b) {
  auto c1 = ctx.with_precision(1);
  FieldPoly s, t;
  FieldPoly g = field_xgcd(*c1, to_field(*c1, a), to_field(*c1, b), s, t);
  return from_field(ctx, g);
}

BezoutPair bezout_pair(const ZqContext& ctx, const ZqPoly& fbar) {
  int d = fbar.degree();
  if (d < 1 || fbar.shift != 0 || !(fbar.get(d) == ctx.one())) throw InvalidInput("bezout_pair: fbar must be monic");
  ZqPoly fd = poly_derivative(ctx, fbar);
  auto c1 = ctx.with_precision(1);
  FieldPoly s, t;
  FieldPoly g = field_xgcd(*c1, to_field(*c1, fbar), to_field(*c1, fd), s, t);
  if (g.size() != 1) throw NotSquarefree("f is not squarefree mod p");
  ZqPoly b = poly_mod_monic(ctx, from_field(ctx, t), fbar);
  // Newton lifting of b = fbar'^{-1} in Z_q[x]/(fbar): b <- b(2 − b fbar').
  ZqPoly two = poly_from_ints(ctx, {2});
  for (int prec = 1; prec < ctx.precision(); prec *= 2) {
    ZqPoly e = poly_mod_monic(ctx, poly_mul(ctx, b, fd), fbar);
    b = poly_mod_monic(ctx, poly_mul(ctx, b, poly_sub(ctx, two, e)), fbar);
  }
  ZqPoly num = poly_sub(ctx, poly_from_ints(ctx, {1}), poly_mul(ctx, b, fd));
  ZqPoly a, r;
  poly_divmod_monic(ctx, num, fbar, a, r);
  CC_ASSERT(poly_vanishes(r, ctx.precision()), "bezout_pair: lifted identity inexact");
  return BezoutPair{std::move(a), std::move(b)};
}

void split_bezout(const ZqContext& ctx, const ZqPoly& R, const ZqPoly& fbar, const BezoutPair& pair, ZqPoly& A,
                  ZqPoly& B) {
  B = poly_mod_monic(ctx, poly_mul(ctx, pair.b, R), fbar);
  ZqPoly num = poly_sub(ctx, R, poly_mul(ctx, B, poly_derivative(ctx, fbar)));
  ZqPoly r;
  poly_divmod_monic(ctx, num, fbar, A, r);
  CC_ASSERT(poly_vanishes(r, ctx.precision()), "split_bezout: inexact division");
}

void normalize_tau_series(const ZqContext& ctx, std::vector<ZqPoly>& terms, const ZqPoly& fbar, HeadPolicy policy) {
  const int d = fbar.degree();
  for (int k = static_cast<int>(terms.size()) - 1; k >= 0; --k) {
    if (terms[k].degree() < d) continue;
    if (k == 0) {
      if (policy == HeadPolicy::Strict) throw_precision("normalize_tau_series: carry below index 0");
      continue;
    }
    ZqPoly q, r;
    poly_divmod_monic(ctx, terms[k], fbar, q, r);
    terms[k] = std::move(r);
    terms[k - 1] = poly_add(ctx, terms[k - 1], q);
  }
}

}  // namespace cyclecover
