#pragma once

#include <utility>
#include <vector>

#include "cyclecover/bigint.hpp"

namespace cyclecover {

// Finite-field description of y^r = f(x) over F_q, q = p^n.
// field_poly: monic degree-n modulus over F_p, little-endian.
// f[i]: coefficient of x^i as n residues mod p, little-endian in the field generator.
struct CurveData {
  long p = 0;
  int n = 1;
  std::vector<long> field_poly;
  int r = 2;
  std::vector<std::vector<long>> f;

  int degree() const { return static_cast<int>(f.size()) - 1; }
  BigInt q() const { return ipow(p, static_cast<unsigned long>(n)); }
};

// (g, δ) with δ = gcd(r, d) and g = ((r−1)(d−1) − (δ−1))/2.
std::pair<int, int> genus_delta(int r, int d);

// Reduces coefficients mod p, pads each to n entries, drops leading zero
// x-coefficients. Does not validate.
CurveData normalized_curve(CurveData c);

// Cheap structural checks: p prime, modulus monic irreducible of degree n,
// f monic of degree >= 2, r >= 2, p ∤ r. Squarefreeness is checked separately.
void validate_shape(const CurveData& c);

// gcd(f, f') = 1 over F_q.
bool is_squarefree(const CurveData& c);

}  // namespace cyclecover
