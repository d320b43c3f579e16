#pragma once

#include <vector>

#include "cyclecover/bigint.hpp"

namespace cyclecover {

struct WeilPolynomial {
  int g = 0;
  BigInt q;
  std::vector<BigInt> a;  // a_1..a_g

  // Full list of 2g+1 coefficients, index = power of t, completed by the
  // functional equation.
  std::vector<BigInt> coefficients() const;
  // P(1), the order of the Jacobian.
  BigInt jacobian_order() const;
  bool within_weil_bounds() const;

  bool operator==(const WeilPolynomial& o) const { return g == o.g && q == o.q && a == o.a; }
};

}  // namespace cyclecover
