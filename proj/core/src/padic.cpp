#include "cyclecover/padic.hpp"

#include "cyclecover/errors.hpp"
#include "cyclecover/fp_poly.hpp"
#include "cyclecover/oracle.hpp"

namespace cyclecover {

namespace {

// Arithmetic in Z[t]/(Q, M) for an explicit modulus M; used where the working
// modulus differs from the context's (Newton lifting at doubling precision).
struct Arith {
  const std::vector<long>& Q;
  int n;
  BigInt M;

  void reduce(std::vector<BigInt>& raw) const {
    for (int k = static_cast<int>(raw.size()) - 1; k >= n; --k) {
      if (raw[k] == 0) continue;
      for (int i = 0; i < n; ++i)
        if (Q[i]) raw[k - n + i] -= raw[k] * Q[i];
      raw[k] = 0;
    }
    raw.resize(n);
    for (auto& c : raw) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  }

  ZqElem mul(const ZqElem& a, const ZqElem& b) const {
    std::vector<BigInt> raw(2 * n - 1);
    for (int i = 0; i < n; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < n; ++j) mpz_addmul(raw[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    reduce(raw);
    return ZqElem{std::move(raw)};
  }

  ZqElem sub(const ZqElem& a, const ZqElem& b) const {
    ZqElem out{std::vector<BigInt>(n)};
    for (int i = 0; i < n; ++i) {
      out.c[i] = a.c[i] - b.c[i];
      mpz_fdiv_r(out.c[i].get_mpz_t(), out.c[i].get_mpz_t(), M.get_mpz_t());
    }
    return out;
  }

  ZqElem from_int(long v) const {
    std::vector<BigInt> raw(n);
    raw[0] = v;
    mpz_fdiv_r(raw[0].get_mpz_t(), raw[0].get_mpz_t(), M.get_mpz_t());
    return ZqElem{std::move(raw)};
  }

  // Evaluates the integer polynomial coeffs at z by Horner.
  ZqElem horner(const std::vector<BigInt>& coeffs, const ZqElem& z) const {
    ZqElem acc{std::vector<BigInt>(n)};
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
      acc = mul(acc, z);
      acc.c[0] += coeffs[i];
      mpz_fdiv_r(acc.c[0].get_mpz_t(), acc.c[0].get_mpz_t(), M.get_mpz_t());
    }
    return acc;
  }
};

// Inverse modulo (Q, p^prec) of a unit, via F_p inverse and Newton doubling.
ZqElem inverse_lift(const std::vector<long>& Q, int n, long p, int prec, const ZqElem& a) {
  fp::Poly am(n);
  for (int i = 0; i < n; ++i) {
    BigInt r = a.c[i] % p;
    if (r < 0) r += p;
    am[i] = r.get_si();
  }
  fp::trim(am);
  if (am.empty()) throw NonUnitError("inverse of a non-unit in Z_q");
  fp::Poly s, t;
  fp::Poly g = fp::xgcd(am, fp::normalized(Q, p), p, s, t);
  if (fp::degree(g) != 0) throw NonUnitError("inverse of a non-unit in Z_q");
  ZqElem x{std::vector<BigInt>(n)};
  for (size_t i = 0; i < s.size() && static_cast<int>(i) < n; ++i) x.c[i] = s[i];
  int cur = 1;
  while (cur < prec) {
    cur = std::min(2 * cur, prec);
    Arith ar{Q, n, ipow(p, cur)};
    ZqElem ax = ar.mul(a, x);
    ZqElem two_minus = ar.sub(ar.from_int(2), ax);
    x = ar.mul(x, two_minus);
  }
  return x;
}

}  // namespace

ContextPtr ZqContext::make(long p, int n, int W, std::optional<std::vector<long>> Q_mod_p, std::uint64_t seed) {
  if (!is_prime(p)) throw InvalidInput("p is not prime");
  if (n < 1) throw InvalidInput("extension degree n must be >= 1");
  if (W < 1) throw InvalidInput("precision W must be >= 1");
  std::vector<long> Q;
  if (Q_mod_p) {
    Q = fp::normalized(*Q_mod_p, p);
    if (static_cast<int>(Q.size()) != n + 1 || Q.back() != 1)
      throw InvalidInput("defining polynomial must be monic of degree n");
    if (!fp::is_irreducible(Q, p)) throw InvalidInput("defining polynomial is reducible mod p");
  } else {
    Q = random_irreducible(p, n, seed);
  }
  auto ctx = std::shared_ptr<ZqContext>(new ZqContext());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->W_ = W;
  ctx->Q_ = std::move(Q);
  ctx->ppow_.resize(W + 1);
  ctx->ppow_[0] = 1;
  for (int k = 1; k <= W; ++k) ctx->ppow_[k] = ctx->ppow_[k - 1] * p;
  ctx->pW_ = ctx->ppow_[W];
  ctx->init_sigma();
  return ctx;
}

ContextPtr make_context(long p, int n, int W, std::optional<std::vector<long>> Q_mod_p, std::uint64_t seed) {
  return ZqContext::make(p, n, W, std::move(Q_mod_p), seed);
}

ContextPtr ZqContext::with_precision(int W) const { return make(p_, n_, W, Q_, 0); }

BigInt ZqContext::q() const { return ipow(p_, static_cast<unsigned long>(n_)); }

void ZqContext::init_sigma() {
  // z_0 = t^p mod (Q, p), then Newton z <- z - Q(z)/Q'(z) with doubling precision.
  fp::Poly z0 = fp::x_pow_p_pow(Q_, p_, 1);
  ZqElem z{std::vector<BigInt>(n_)};
  for (size_t i = 0; i < z0.size(); ++i) z.c[i] = z0[i];
  std::vector<BigInt> qc(Q_.begin(), Q_.end());
  std::vector<BigInt> dqc;
  for (size_t i = 1; i < Q_.size(); ++i) dqc.emplace_back(BigInt(Q_[i]) * static_cast<long>(i));
  int prec = 1;
  while (prec < W_) {
    prec = std::min(2 * prec, W_);
    Arith ar{Q_, n_, ipow(p_, prec)};
    ZqElem qz = ar.horner(qc, z);
    ZqElem dqz = ar.horner(dqc, z);
    ZqElem dinv;
    try {
      dinv = inverse_lift(Q_, n_, p_, prec, dqz);
    } catch (const NonUnitError&) {
      throw_precision("Q'(z0) is not a unit mod p");
    }
    z = ar.sub(z, ar.mul(qz, dinv));
  }
  sigma_pows_.clear();
  sigma_pows_.push_back(generator());
  if (n_ > 1) {
    sigma_pows_.push_back(z);
    Arith ar{Q_, n_, pW_};
    for (int k = 2; k < n_; ++k) sigma_pows_.push_back(ar.horner(sigma_pows_[k - 1].c, z));
  }
}

ZqElem sigma_generator_image(const ZqContext& ctx) {
  if (ctx.n() == 1) return ctx.generator();
  return ctx.sigma_generator();
}

ZqElem ZqContext::zero() const { return ZqElem{std::vector<BigInt>(n_)}; }

ZqElem ZqContext::one() const { return from_int(1); }

ZqElem ZqContext::from_int(const BigInt& v) const {
  ZqElem out = zero();
  out.c[0] = v;
  mod_in_place(out.c[0]);
  return out;
}

ZqElem ZqContext::from_coeffs(const std::vector<BigInt>& coeffs) const {
  std::vector<BigInt> raw(std::max<size_t>(coeffs.size(), n_));
  for (size_t i = 0; i < coeffs.size(); ++i) raw[i] = coeffs[i];
  reduce_raw(raw.data(), static_cast<int>(raw.size()));
  raw.resize(n_);
  return ZqElem{std::move(raw)};
}

ZqElem ZqContext::from_small(const std::vector<long>& coeffs) const {
  return from_coeffs(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

ZqElem ZqContext::generator() const { return from_small({0, 1}); }

void ZqContext::mod_in_place(BigInt& x) const { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), pW_.get_mpz_t()); }

void ZqContext::reduce_raw(BigInt* raw, int len) const {
  for (int k = len - 1; k >= n_; --k) {
    if (raw[k] == 0) continue;
    for (int i = 0; i < n_; ++i) {
      long qi = Q_[i];
      if (qi > 0)
        mpz_submul_ui(raw[k - n_ + i].get_mpz_t(), raw[k].get_mpz_t(), static_cast<unsigned long>(qi));
    }
    raw[k] = 0;
  }
  for (int i = 0; i < n_; ++i) mod_in_place(raw[i]);
}

void ZqContext::addmul_raw(BigInt* out, const BigInt* a, const BigInt* b) const {
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

void ZqContext::submul_raw(BigInt* out, const BigInt* a, const BigInt* b) const {
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) mpz_submul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

ZqElem ZqContext::add(const ZqElem& a, const ZqElem& b) const {
  ZqElem out = zero();
  for (int i = 0; i < n_; ++i) {
    out.c[i] = a.c[i] + b.c[i];
    if (out.c[i] >= pW_) out.c[i] -= pW_;
  }
  return out;
}

ZqElem ZqContext::sub(const ZqElem& a, const ZqElem& b) const {
  ZqElem out = zero();
  for (int i = 0; i < n_; ++i) {
    out.c[i] = a.c[i] - b.c[i];
    if (out.c[i] < 0) out.c[i] += pW_;
  }
  return out;
}

ZqElem ZqContext::neg(const ZqElem& a) const { return sub(zero(), a); }

ZqElem ZqContext::mul(const ZqElem& a, const ZqElem& b) const {
  std::vector<BigInt> raw(2 * n_ - 1);
  addmul_raw(raw.data(), a.c.data(), b.c.data());
  reduce_raw(raw.data(), 2 * n_ - 1);
  raw.resize(n_);
  return ZqElem{std::move(raw)};
}

ZqElem ZqContext::mul_int(const ZqElem& a, const BigInt& m) const {
  ZqElem out = a;
  for (auto& c : out.c) {
    c *= m;
    mod_in_place(c);
  }
  return out;
}

ZqElem ZqContext::mul_p_pow(const ZqElem& a, int k) const {
  if (k >= W_) return zero();
  return mul_int(a, ppow_[k]);
}

ZqElem ZqContext::pow(const ZqElem& a, unsigned long e) const {
  ZqElem acc = one(), base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

ZqElem ZqContext::inv(const ZqElem& a) const {
  if (n_ == 1) {
    ZqElem out = zero();
    if (!mpz_invert(out.c[0].get_mpz_t(), a.c[0].get_mpz_t(), pW_.get_mpz_t()) ||
        mpz_divisible_ui_p(a.c[0].get_mpz_t(), static_cast<unsigned long>(p_)))
      throw NonUnitError("inverse of a non-unit in Z_p");
    return out;
  }
  return inverse_lift(Q_, n_, p_, W_, a);
}

bool ZqContext::is_zero(const ZqElem& a) const {
  for (const auto& c : a.c)
    if (c != 0) return false;
  return true;
}

bool ZqContext::is_unit(const ZqElem& a) const {
  for (const auto& c : a.c)
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p_))) return true;
  return false;
}

int ZqContext::valuation(const ZqElem& a) const {
  int v = W_;
  for (const auto& c : a.c) {
    if (c == 0) continue;
    int cv = 0;
    while (cv < v && mpz_divisible_p(c.get_mpz_t(), ppow_[cv + 1].get_mpz_t())) ++cv;
    v = std::min(v, cv);
    if (v == 0) break;
  }
  return v;
}

ZqElem ZqContext::div_p_pow(const ZqElem& a, int k) const {
  ZqElem out = a;
  for (auto& c : out.c) {
    CC_ASSERT(mpz_divisible_p(c.get_mpz_t(), ppow_[k].get_mpz_t()), "div_p_pow inexact");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ppow_[k].get_mpz_t());
  }
  return out;
}

ZqElem ZqContext::apply_sigma(const ZqElem& a, int k) const {
  if (n_ == 1) return a;
  k %= n_;
  if (k < 0) k += n_;
  if (k == 0) return a;
  const ZqElem& z = sigma_pows_[k];
  ZqElem acc = zero();
  for (int i = n_ - 1; i >= 0; --i) {
    acc = mul(acc, z);
    acc.c[0] += a.c[i];
    if (acc.c[0] >= pW_) acc.c[0] -= pW_;
  }
  return acc;
}

ZqElem apply_sigma(const ZqContext& ctx, const ZqElem& x, int k) { return ctx.apply_sigma(x, k); }

ScaledZq canonicalize(const ZqContext& ctx, ScaledZq x) {
  if (ctx.is_zero(x.mantissa)) {
    x.shift = 0;
    return x;
  }
  int v = ctx.valuation(x.mantissa);
  if (v > 0) {
    x.mantissa = ctx.div_p_pow(x.mantissa, v);
    x.shift += v;
  }
  return x;
}

ScaledZq scaled(const ZqContext& ctx, const ZqElem& m, int shift) { return canonicalize(ctx, ScaledZq{shift, m}); }

ScaledZq scaled_add(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b) {
  if (ctx.is_zero(a.mantissa)) return b;
  if (ctx.is_zero(b.mantissa)) return a;
  const ScaledZq& lo = a.shift <= b.shift ? a : b;
  const ScaledZq& hi = a.shift <= b.shift ? b : a;
  ScaledZq out{lo.shift, ctx.add(lo.mantissa, ctx.mul_p_pow(hi.mantissa, hi.shift - lo.shift))};
  return canonicalize(ctx, std::move(out));
}

ScaledZq scaled_sub(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b) {
  ScaledZq nb{b.shift, ctx.neg(b.mantissa)};
  return scaled_add(ctx, a, nb);
}

ScaledZq scaled_mul(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b) {
  return canonicalize(ctx, ScaledZq{a.shift + b.shift, ctx.mul(a.mantissa, b.mantissa)});
}

ScaledZq zq_div_exact_int(const ZqContext& ctx, const ScaledZq& x, long m) {
  if (m == 0) throw InvalidInput("division by zero");
  BigInt u = m;
  int v = strip_p(ctx.p(), u);
  BigInt uinv;
  mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), ctx.modulus().get_mpz_t());
  return canonicalize(ctx, ScaledZq{x.shift - v, ctx.mul_int(x.mantissa, uinv)});
}

bool scaled_is_zero(const ScaledZq& x) {
  for (const auto& c : x.mantissa.c)
    if (c != 0) return false;
  return true;
}

bool scaled_equal(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b) {
  ScaledZq diff = scaled_sub(ctx, a, b);
  if (scaled_is_zero(diff)) return true;
  int prec = ctx.precision() + std::min(scaled_is_zero(a) ? diff.shift : a.shift, scaled_is_zero(b) ? diff.shift : b.shift);
  return diff.shift >= prec;
}

}  // namespace cyclecover
