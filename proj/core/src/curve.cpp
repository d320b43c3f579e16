#include "cyclecover/curve.hpp"

#include <numeric>

#include "cyclecover/errors.hpp"
#include "cyclecover/fp_poly.hpp"
#include "cyclecover/polyring.hpp"
#include "cyclecover/weil_polynomial.hpp"

namespace cyclecover {

std::pair<int, int> genus_delta(int r, int d) {
  if (r < 2 || d < 1) throw InvalidInput("genus_delta: need r >= 2, d >= 1");
  int delta = std::gcd(r, d);
  int twice = (r - 1) * (d - 1) - (delta - 1);
  CC_ASSERT(twice % 2 == 0 && twice >= 0, "genus formula not integral");
  return {twice / 2, delta};
}

CurveData normalized_curve(CurveData c) {
  if (c.p < 2) throw InvalidInput("p must be prime");
  for (auto& v : c.field_poly) v = fp::mod(v, c.p);
  for (auto& coeff : c.f) {
    if (static_cast<int>(coeff.size()) > c.n) {
      // Reduce modulo the field polynomial when given longer representations.
      fp::Poly red = fp::rem(fp::normalized(coeff, c.p), c.field_poly, c.p);
      coeff = red;
    }
    for (auto& v : coeff) v = fp::mod(v, c.p);
    coeff.resize(c.n, 0);
  }
  auto is_zero = [](const std::vector<long>& v) {
    for (long x : v)
      if (x) return false;
    return true;
  };
  while (!c.f.empty() && is_zero(c.f.back())) c.f.pop_back();
  return c;
}

void validate_shape(const CurveData& c) {
  if (!is_prime(c.p)) throw InvalidInput("p must be prime");
  if (c.n < 1) throw InvalidInput("n must be >= 1");
  if (c.r < 2) throw InvalidInput("r must be >= 2");
  if (c.r % c.p == 0) throw CharacteristicDividesDegree("p divides r");
  fp::Poly Q = fp::normalized(c.field_poly, c.p);
  if (static_cast<int>(Q.size()) != c.n + 1 || Q.back() != 1)
    throw InvalidInput("field polynomial must be monic of degree n");
  if (!fp::is_irreducible(Q, c.p)) throw InvalidInput("field polynomial is reducible mod p");
  if (c.degree() < 2) throw InvalidInput("f must have degree >= 2");
  const auto& lead = c.f.back();
  if (static_cast<int>(lead.size()) != c.n || lead[0] != 1)
    throw InvalidInput("f must be monic");
  for (int i = 1; i < c.n; ++i)
    if (lead[i] != 0) throw InvalidInput("f must be monic");
}

bool is_squarefree(const CurveData& c) {
  auto ctx = make_context(c.p, c.n, 1, c.field_poly);
  std::vector<ZqElem> el;
  for (const auto& coeff : c.f) el.push_back(ctx->from_small(coeff));
  ZqPoly f = poly_from_elems(*ctx, el);
  ZqPoly g = residue_gcd(*ctx, f, poly_derivative(*ctx, f));
  return g.degree() == 0;
}

std::vector<BigInt> WeilPolynomial::coefficients() const {
  std::vector<BigInt> out(2 * g + 1);
  out[2 * g] = 1;
  for (int i = 1; i <= g; ++i) out[2 * g - i] = a[i - 1];
  BigInt qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    out[g - i] = qi * (g - i == 0 ? BigInt(1) : a[g - i - 1]);
  }
  return out;
}

BigInt WeilPolynomial::jacobian_order() const {
  BigInt s = 0;
  for (const auto& c : coefficients()) s += c;
  return s;
}

bool WeilPolynomial::within_weil_bounds() const {
  BigInt qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    BigInt b = binomial(2 * g, i);
    if (a[i - 1] * a[i - 1] > b * b * qi) return false;
  }
  return true;
}

}  // namespace cyclecover
