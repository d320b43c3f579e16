#pragma once

#include <vector>

#include "cyclecover/padic.hpp"
#include "cyclecover/polyring.hpp"

namespace cyclecover {

// f̄ with its coefficients as small nonnegative integers (the trivial lift).
struct FbarData {
  int d = 0;
  int n = 1;
  std::vector<unsigned long> c;  // d+1 coefficients, each n generator digits: c[i*n+s]

  static FbarData from_poly(const ZqContext& ctx, const ZqPoly& fbar);
};

// Integral series Σ_k P_k(x) τ^k with deg P_k < d, coefficients mod p^W.
// Coefficient (k, i) occupies data[(k*d + i)*n, ... + n).
struct TauSeries {
  int n = 1;
  int d = 0;
  std::vector<BigInt> data;

  TauSeries() = default;
  TauSeries(int n_, int d_, int length) : n(n_), d(d_), data(static_cast<std::size_t>(length) * d_ * n_) {}

  int length() const { return d ? static_cast<int>(data.size() / (static_cast<std::size_t>(d) * n)) : 0; }
  BigInt* at(int k, int i) { return data.data() + (static_cast<std::size_t>(k) * d + i) * n; }
  const BigInt* at(int k, int i) const { return data.data() + (static_cast<std::size_t>(k) * d + i) * n; }
  ZqPoly term(int k) const;
  void set_term(int k, const ZqPoly& P);
};

TauSeries series_one(const ZqContext& ctx, int d, int length);
TauSeries series_from_terms(const ZqContext& ctx, int d, const std::vector<ZqPoly>& terms);
std::vector<ZqPoly> series_terms(const TauSeries& s);

// Product truncated at τ-index max_index, normalized against f̄ (heads must stay
// of degree < d). Kronecker substitution into a single big-integer product.
TauSeries series_mul(const ZqContext& ctx, const FbarData& fb, const TauSeries& a, const TauSeries& b,
                     int max_index);
// Reference product: schoolbook over index pairs.
TauSeries series_mul_naive(const ZqContext& ctx, const FbarData& fb, const TauSeries& a, const TauSeries& b,
                           int max_index);
TauSeries series_sub(const ZqContext& ctx, const TauSeries& a, const TauSeries& b);
TauSeries series_add(const ZqContext& ctx, const TauSeries& a, const TauSeries& b);
TauSeries series_mul_int(const ZqContext& ctx, const TauSeries& a, const BigInt& m);
bool series_equal(const TauSeries& a, const TauSeries& b);

// Raw normalization buffer: rows[k] holds width_k coefficients, each a raw
// generator polynomial of 2n−1 unreduced integers.
struct RawSeries {
  int n = 1;
  std::vector<std::vector<BigInt>> rows;

  int T() const { return 2 * n - 1; }
  int width(int k) const { return static_cast<int>(rows[k].size()) / T(); }
  BigInt* at(int k, int i) { return rows[k].data() + static_cast<std::size_t>(i) * T(); }
};

// Carries every row k >= 1 down to degree < d; row 0 is reduced only when
// policy is Strict (then it must already have degree < d after carries).
// On return all rows are reduced mod (Q, p^W); row k >= 1 has width d.
void normalize_raw(const ZqContext& ctx, const FbarData& fb, RawSeries& raw, HeadPolicy policy);

}  // namespace cyclecover
