#pragma once

#include <vector>

#include "cyclecover/cohomology.hpp"
#include "cyclecover/padic.hpp"
#include "cyclecover/plan.hpp"

namespace cyclecover {

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::vector<int> lengths() const;
};

// Cycles of j ↦ qj mod r on {1..r−1}, ordered by smallest element, each
// starting from its smallest element. Throws InvalidInput when gcd(q, r) ≠ 1.
CycleDecomposition cycle_decomposition(int r, const BigInt& q);

// (r−1)(d−1)-square matrix; row (d−1)(j−1)+i holds the image of the basis form
// with indices (i, j); block_perm[j] is the only nonzero column block of row
// block j (index 0 unused).
struct FrobBlockMatrix {
  int r = 0;
  int d = 0;
  std::vector<int> block_perm;
  std::vector<ScaledZq> entries;

  int block_size() const { return d - 1; }
  int dim() const { return (r - 1) * (d - 1); }
  ScaledZq& at(int row, int col) { return entries[static_cast<std::size_t>(row) * dim() + col]; }
  const ScaledZq& at(int row, int col) const { return entries[static_cast<std::size_t>(row) * dim() + col]; }
};

FrobBlockMatrix zero_block_matrix(const ZqContext& ctx, int r, int d, std::vector<int> block_perm);
// Permutation j ↦ j·m mod r as a block_perm vector.
std::vector<int> multiplication_perm(int r, const BigInt& m);

// Runs frob_basis_form + reduce_form for every (i, j); parallel over j.
FrobBlockMatrix assemble_frobenius_matrix(const CurveSpec& curve, const PrecisionPlan& plan, BasisKind basis,
                                          ReductionStats* stats = nullptr, int threads = 1);

bool has_block_support(const FrobBlockMatrix& M);
int min_entry_shift(const FrobBlockMatrix& M);

// q-power Frobenius matrix Mf^{σ^{n−1}} ··· Mf^σ · Mf, computed block by block.
FrobBlockMatrix frobenius_norm(const ZqContext& ctx, const FrobBlockMatrix& Mf, int n);
// Reference: plain twisted product of full matrices.
FrobBlockMatrix frobenius_norm_dense(const ZqContext& ctx, const FrobBlockMatrix& Mf, int n);

// Entrywise equality to absolute precision prec (differences of valuation >= prec ignored).
bool matrices_agree(const ZqContext& ctx, const FrobBlockMatrix& A, const FrobBlockMatrix& B, int prec);

// Division-free characteristic polynomial of an m×m matrix (row-major),
// coefficients low→high, monic of degree m.
std::vector<ZqElem> berkowitz(const ZqContext& ctx, const std::vector<ZqElem>& A, int m);

// χ_M over Z/p^{N0}, coefficients low→high, using the cycle structure of M.
std::vector<BigInt> charpoly(const ZqContext& ctx, const FrobBlockMatrix& M, const CycleDecomposition& cycles,
                             int N0);
// Reference: Berkowitz on the full matrix.
std::vector<BigInt> charpoly_dense(const ZqContext& ctx, const FrobBlockMatrix& M, int N0);

}  // namespace cyclecover
