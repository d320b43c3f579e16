#pragma once

#include <vector>

#include "cyclecover/padic.hpp"

namespace cyclecover {

// Polynomial over Z_q with one common shift: value = p^shift * Σ data_i x^i.
// Coefficients are stored flat: coefficient i occupies data[i*n, (i+1)*n).
struct ZqPoly {
  int shift = 0;
  int n = 1;
  std::vector<BigInt> data;

  ZqPoly() = default;
  ZqPoly(int n_, std::size_t len) : n(n_), data(len * n_) {}

  std::size_t size() const { return data.size() / n; }
  BigInt* coeff(std::size_t i) { return data.data() + i * n; }
  const BigInt* coeff(std::size_t i) const { return data.data() + i * n; }
  ZqElem get(std::size_t i) const;
  void set(std::size_t i, const ZqElem& v);
  bool coeff_is_zero(std::size_t i) const;
  // Highest index with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  void resize(std::size_t len) { data.resize(len * n); }
  void trim();
};

struct BezoutPair {
  ZqPoly a;
  ZqPoly b;
};

enum class HeadPolicy { Strict, KeepHead };

ZqPoly poly_zero(const ZqContext& ctx);
ZqPoly poly_from_elems(const ZqContext& ctx, const std::vector<ZqElem>& coeffs, int shift = 0);
ZqPoly poly_from_ints(const ZqContext& ctx, const std::vector<long>& coeffs, int shift = 0);
ZqPoly poly_monomial(const ZqContext& ctx, std::size_t deg, const ZqElem& c, int shift = 0);

// Raises the shift by the minimum coefficient valuation; trims; zero has shift 0.
void canonicalize_poly(const ZqContext& ctx, ZqPoly& P);
// Rewrites P at a smaller shift s (mantissas multiplied by p^(P.shift − s)).
void lower_shift(const ZqContext& ctx, ZqPoly& P, int s);

ZqPoly poly_add(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b);
ZqPoly poly_sub(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b);
ZqPoly poly_neg(const ZqContext& ctx, const ZqPoly& a);
ZqPoly poly_mul(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b);
ZqPoly poly_mul_schoolbook(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b);
ZqPoly poly_scale(const ZqContext& ctx, const ZqPoly& a, const ScaledZq& c);
ZqPoly poly_derivative(const ZqContext& ctx, const ZqPoly& a);
ZqPoly poly_shift_x(const ZqPoly& a, std::size_t e);
ZqPoly poly_sigma(const ZqContext& ctx, const ZqPoly& a, int k = 1);
ScaledZq poly_eval(const ZqContext& ctx, const ZqPoly& a, const ZqElem& x0);
// Zero modulo p^prec (a canonical poly with shift >= prec has no known digits).
bool poly_vanishes(const ZqPoly& a, int prec);
// Equal modulo p^W.
bool poly_equal(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b);

// Integer polynomial product (no reduction); Karatsuba above a threshold.
std::vector<BigInt> int_poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
inline constexpr std::size_t kKaratsubaThreshold = 24;

// u = q*v + r with deg r < deg v; v must be monic (shift 0, leading coefficient 1).
void poly_divmod_monic(const ZqContext& ctx, const ZqPoly& u, const ZqPoly& v, ZqPoly& quot, ZqPoly& rem);
ZqPoly poly_mod_monic(const ZqContext& ctx, const ZqPoly& u, const ZqPoly& v);

// gcd over F_q of the reductions mod p (monic; computed at precision 1).
ZqPoly residue_gcd(const ZqContext& ctx, const ZqPoly& a, const ZqPoly& b);

// a*fbar + b*fbar' = 1 mod p^W with deg a < d−1, deg b < d. Throws NotSquarefree.
BezoutPair bezout_pair(const ZqContext& ctx, const ZqPoly& fbar);
// R = A*fbar + B*fbar' with B = (pair.b*R) mod fbar; requires deg R < d.
void split_bezout(const ZqContext& ctx, const ZqPoly& R, const ZqPoly& fbar, const BezoutPair& pair, ZqPoly& A,
                  ZqPoly& B);

// terms[k] is the x-polynomial multiplying τ^k (τ = 1/fbar). Carries quotients
// by fbar from index k to k−1 until every degree is < d. Under Strict a
// carry out of index 0 throws; under KeepHead index 0 keeps its full degree.
void normalize_tau_series(const ZqContext& ctx, std::vector<ZqPoly>& terms, const ZqPoly& fbar,
                          HeadPolicy policy = HeadPolicy::Strict);

}  // namespace cyclecover
