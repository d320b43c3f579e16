#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cyclecover/bigint.hpp"

namespace cyclecover {

// Element of Z_q = Z_p[t]/(Q) at fixed precision: n coefficients in [0, p^W),
// little-endian in the generator t.
struct ZqElem {
  std::vector<BigInt> c;

  bool operator==(const ZqElem& o) const { return c == o.c; }
};

// Value p^shift * mantissa. Canonical: mantissa == 0 with shift 0, or mantissa
// not divisible by p.
struct ScaledZq {
  int shift = 0;
  ZqElem mantissa;
};

class ZqContext;
using ContextPtr = std::shared_ptr<const ZqContext>;

class ZqContext {
 public:
  // Q_mod_p little-endian monic of degree n; generated from seed when absent.
  static ContextPtr make(long p, int n, int W, std::optional<std::vector<long>> Q_mod_p = std::nullopt,
                         std::uint64_t seed = 0);

  long p() const { return p_; }
  int n() const { return n_; }
  int precision() const { return W_; }
  const BigInt& modulus() const { return pW_; }
  const BigInt& p_power(int k) const { return ppow_.at(k); }
  BigInt q() const;
  const std::vector<long>& defining_poly() const { return Q_; }
  const ZqElem& sigma_generator() const { return sigma_pows_.at(n_ > 1 ? 1 : 0); }
  ContextPtr with_precision(int W) const;

  ZqElem zero() const;
  ZqElem one() const;
  ZqElem from_int(const BigInt& v) const;
  ZqElem from_coeffs(const std::vector<BigInt>& coeffs) const;
  ZqElem from_small(const std::vector<long>& coeffs) const;
  ZqElem generator() const;

  ZqElem add(const ZqElem& a, const ZqElem& b) const;
  ZqElem sub(const ZqElem& a, const ZqElem& b) const;
  ZqElem neg(const ZqElem& a) const;
  ZqElem mul(const ZqElem& a, const ZqElem& b) const;
  ZqElem mul_int(const ZqElem& a, const BigInt& m) const;
  ZqElem mul_p_pow(const ZqElem& a, int k) const;
  ZqElem pow(const ZqElem& a, unsigned long e) const;
  // Throws NonUnitError when a ≡ 0 mod p.
  ZqElem inv(const ZqElem& a) const;

  bool is_zero(const ZqElem& a) const;
  bool is_unit(const ZqElem& a) const;
  // p-adic valuation, W for zero.
  int valuation(const ZqElem& a) const;
  // Divides every coefficient by p^k (must be exact as integers).
  ZqElem div_p_pow(const ZqElem& a, int k) const;

  ZqElem apply_sigma(const ZqElem& a, int k = 1) const;

  // Low-level kernels on raw coefficient arrays.
  // raw holds a t-polynomial of length len >= n; it is reduced modulo Q and
  // p^W in place; the first n entries become the result.
  void reduce_raw(BigInt* raw, int len) const;
  // out[0..2n-2] += a*b (no reduction).
  void addmul_raw(BigInt* out, const BigInt* a, const BigInt* b) const;
  void submul_raw(BigInt* out, const BigInt* a, const BigInt* b) const;
  void mod_in_place(BigInt& x) const;

 private:
  ZqContext() = default;
  void init_sigma();

  long p_ = 0;
  int n_ = 0;
  int W_ = 0;
  BigInt pW_;
  std::vector<BigInt> ppow_;
  std::vector<long> Q_;
  std::vector<ZqElem> sigma_pows_;
};

ContextPtr make_context(long p, int n, int W, std::optional<std::vector<long>> Q_mod_p = std::nullopt,
                        std::uint64_t seed = 0);
ZqElem sigma_generator_image(const ZqContext& ctx);
ZqElem apply_sigma(const ZqContext& ctx, const ZqElem& x, int k);

ScaledZq canonicalize(const ZqContext& ctx, ScaledZq x);
ScaledZq scaled(const ZqContext& ctx, const ZqElem& m, int shift = 0);
ScaledZq scaled_add(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b);
ScaledZq scaled_sub(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b);
ScaledZq scaled_mul(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b);
ScaledZq zq_div_exact_int(const ZqContext& ctx, const ScaledZq& x, long m);
bool scaled_is_zero(const ScaledZq& x);
// Equality of represented values, to the absolute precision both sides carry.
bool scaled_equal(const ZqContext& ctx, const ScaledZq& a, const ScaledZq& b);

}  // namespace cyclecover
