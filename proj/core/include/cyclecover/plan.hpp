#pragma once

#include <string>
#include <vector>

namespace cyclecover {

enum class BasisKind { B, Bprime };

inline const char* basis_name(BasisKind b) { return b == BasisKind::B ? "B" : "Bprime"; }

struct PrecisionPlan {
  BasisKind basis = BasisKind::Bprime;
  int N0 = 0;
  int N = 0;
  int G = 0;
  // Integrality bound D of the Frobenius matrix entries (shifts >= −D) and the
  // extra digits H reserved for undoing the charpoly scaling.
  int D = 0;
  int H = 0;
  int guard_extra = 0;
  int W = 0;
  // Largest τ-index kept in S = F(y)^{-1} y^p (same for every j).
  int series_trunc = 0;
  // mu_of_j[j] for j = 1..r−1 (index 0 unused).
  std::vector<int> mu_of_j;
};

}  // namespace cyclecover
