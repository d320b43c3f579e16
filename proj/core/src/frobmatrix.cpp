#include "cyclecover/frobmatrix.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

#include "cyclecover/errors.hpp"

namespace cyclecover {

std::vector<int> CycleDecomposition::lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

CycleDecomposition cycle_decomposition(int r, const BigInt& q) {
  BigInt qm = q % r;
  long qr = qm.get_si();
  if (gcd_long(qr, r) != 1) throw InvalidInput("cycle_decomposition: gcd(q, r) != 1");
  CycleDecomposition out;
  std::vector<bool> seen(r, false);
  for (int j = 1; j < r; ++j) {
    if (seen[j]) continue;
    std::vector<int> cyc;
    int cur = j;
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = static_cast<int>((static_cast<long>(cur) * qr) % r);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> multiplication_perm(int r, const BigInt& m) {
  BigInt mm = m % r;
  long mr = mm.get_si();
  std::vector<int> perm(r, 0);
  for (int j = 1; j < r; ++j) perm[j] = static_cast<int>((static_cast<long>(j) * mr) % r);
  return perm;
}

FrobBlockMatrix zero_block_matrix(const ZqContext& ctx, int r, int d, std::vector<int> block_perm) {
  FrobBlockMatrix M;
  M.r = r;
  M.d = d;
  M.block_perm = std::move(block_perm);
  M.entries.assign(static_cast<std::size_t>(M.dim()) * M.dim(), ScaledZq{0, ctx.zero()});
  return M;
}

FrobBlockMatrix assemble_frobenius_matrix(const CurveSpec& curve, const PrecisionPlan& plan, BasisKind basis,
                                          ReductionStats* stats, int threads) {
  const ZqContext& z = curve.zq();
  const int r = curve.r, d = curve.d, b = d - 1;
  FrobBlockMatrix M = zero_block_matrix(z, r, d, multiplication_perm(r, BigInt(z.p())));
  if (d < 2) return M;

  TauSeries S = frob_y_inv_series(curve, plan);
  const int J0 = basis == BasisKind::B ? 0 : r;
  // Powers S^{J0+1} .. S^{J0+r−1}, each from the previous one.
  std::vector<TauSeries> powers(r);
  {
    TauSeries acc = series_one(z, d, 1);
    for (int e = 1; e <= J0 + r - 1; ++e) {
      acc = series_mul(z, curve.fb, acc, S, plan.series_trunc);
      if (e > J0) powers[e - J0] = acc;
    }
  }

  // Traverse j in the order of the cycles under multiplication by q.
  std::vector<int> order;
  for (const auto& c : cycle_decomposition(r, z.q()).cycles) order.insert(order.end(), c.begin(), c.end());

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&]() {
    ReductionStats local;
    try {
      for (;;) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= order.size()) break;
        int j = order[idx];
        int ell, a;
        pole_data(z.p(), r, j, ell, a);
        auto forms = frob_basis_forms_for_j(curve, plan, j, powers[j], basis);
        for (int i = 0; i < b; ++i) {
          auto row = reduce_form(curve, std::move(forms[i]), basis, &local);
          for (int k = 0; k < b; ++k) M.at(b * (j - 1) + i, b * (ell - 1) + k) = std::move(row[k]);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard<std::mutex> lock(mu);
    if (stats) stats->merge(local);
  };
  int nt = std::max(1, std::min<int>(threads, static_cast<int>(order.size())));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  CC_ASSERT(has_block_support(M), "Frobenius matrix violates the block support pattern");
  return M;
}

bool has_block_support(const FrobBlockMatrix& M) {
  const int b = M.block_size();
  for (int row = 0; row < M.dim(); ++row)
    for (int col = 0; col < M.dim(); ++col) {
      int j = row / b + 1, l = col / b + 1;
      if (l != M.block_perm[j] && !scaled_is_zero(M.at(row, col))) return false;
    }
  return true;
}

int min_entry_shift(const FrobBlockMatrix& M) {
  int s = 0;
  for (const auto& e : M.entries)
    if (!scaled_is_zero(e)) s = std::min(s, e.shift);
  return s;
}

namespace {

struct Block {
  int shift = 0;
  int k = 0;
  std::vector<ZqElem> e;
};

void canonicalize_block(const ZqContext& z, Block& B) {
  int v = z.precision();
  bool any = false;
  for (const auto& x : B.e)
    if (!z.is_zero(x)) {
      any = true;
      v = std::min(v, z.valuation(x));
      if (v == 0) return;
    }
  if (!any) {
    B.shift = 0;
    return;
  }
  for (auto& x : B.e) x = z.div_p_pow(x, v);
  B.shift += v;
}

Block extract_block(const ZqContext& z, const FrobBlockMatrix& M, int j, int l) {
  const int b = M.block_size();
  Block B;
  B.k = b;
  int s = INT_MAX;
  for (int i = 0; i < b; ++i)
    for (int k = 0; k < b; ++k) {
      const ScaledZq& x = M.at(b * (j - 1) + i, b * (l - 1) + k);
      if (!scaled_is_zero(x)) s = std::min(s, x.shift);
    }
  if (s == INT_MAX) s = 0;
  B.shift = s;
  B.e.reserve(static_cast<std::size_t>(b) * b);
  for (int i = 0; i < b; ++i)
    for (int k = 0; k < b; ++k) {
      const ScaledZq& x = M.at(b * (j - 1) + i, b * (l - 1) + k);
      B.e.push_back(scaled_is_zero(x) ? z.zero() : z.mul_p_pow(x.mantissa, x.shift - s));
    }
  return B;
}

void put_block(const ZqContext& z, FrobBlockMatrix& M, int j, int l, const Block& B) {
  const int b = M.block_size();
  for (int i = 0; i < b; ++i)
    for (int k = 0; k < b; ++k) M.at(b * (j - 1) + i, b * (l - 1) + k) = canonicalize(z, ScaledZq{B.shift, B.e[i * b + k]});
}

Block block_mul(const ZqContext& z, const Block& A, const Block& B) {
  const int k = A.k, n = z.n(), T = 2 * n - 1;
  Block C;
  C.k = k;
  C.shift = A.shift + B.shift;
  C.e.assign(static_cast<std::size_t>(k) * k, z.zero());
  std::vector<BigInt> raw(T);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (auto& x : raw) x = 0;
      for (int t = 0; t < k; ++t) z.addmul_raw(raw.data(), A.e[i * k + t].c.data(), B.e[t * k + j].c.data());
      z.reduce_raw(raw.data(), T);
      for (int s = 0; s < n; ++s) C.e[i * k + j].c[s] = raw[s];
    }
  canonicalize_block(z, C);
  return C;
}

Block block_sigma(const ZqContext& z, const Block& A, int t) {
  Block out = A;
  for (auto& x : out.e) x = z.apply_sigma(x, t);
  return out;
}

FrobBlockMatrix sigma_matrix(const ZqContext& z, const FrobBlockMatrix& M, int t) {
  FrobBlockMatrix out = M;
  for (auto& e : out.entries) e.mantissa = z.apply_sigma(e.mantissa, t);
  return out;
}

FrobBlockMatrix dense_mul(const ZqContext& z, const FrobBlockMatrix& A, const FrobBlockMatrix& B,
                          std::vector<int> perm) {
  FrobBlockMatrix C = zero_block_matrix(z, A.r, A.d, std::move(perm));
  const int m = A.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ScaledZq acc{0, z.zero()};
      for (int t = 0; t < m; ++t) {
        if (scaled_is_zero(A.at(i, t)) || scaled_is_zero(B.at(t, j))) continue;
        acc = scaled_add(z, acc, scaled_mul(z, A.at(i, t), B.at(t, j)));
      }
      C.at(i, j) = acc;
    }
  return C;
}

// Charpoly of p^shift · X for an m×m mantissa matrix X; coefficients low→high
// together with the absolute precision they are known to.
std::vector<ZqElem> scaled_charpoly(const ZqContext& z, const std::vector<ZqElem>& X, int m, int shift, int& prec) {
  std::vector<ZqElem> c = berkowitz(z, X, m);
  prec = z.precision();
  for (int k = 1; k <= m; ++k) {
    ZqElem& e = c[m - k];  // coefficient of t^{m−k}
    if (shift >= 0) {
      e = z.mul_p_pow(e, shift * k);
    } else {
      int loss = -shift * k;
      if (loss >= z.precision()) throw_precision("charpoly: scaling exhausts working precision");
      for (const auto& v : e.c)
        if (!mpz_divisible_p(v.get_mpz_t(), z.p_power(loss).get_mpz_t()))
          throw_precision("charpoly: scaled coefficient not divisible as required");
      e = z.div_p_pow(e, loss);
      prec = std::min(prec, z.precision() - loss);
    }
  }
  return c;
}

std::vector<ZqElem> zq_poly_mul(const ZqContext& z, const std::vector<ZqElem>& a, const std::vector<ZqElem>& b) {
  std::vector<ZqElem> out(a.size() + b.size() - 1, z.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = z.add(out[i + j], z.mul(a[i], b[j]));
  return out;
}

std::vector<BigInt> finish_charpoly(const ZqContext& z, const std::vector<ZqElem>& chi, int prec, int N0) {
  if (prec < N0) throw_precision("charpoly: coefficient precision below N0");
  const BigInt& pn = z.p_power(std::min(N0, z.precision()));
  std::vector<BigInt> out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    for (int s = 1; s < z.n(); ++s) {
      BigInt v = chi[i].c[s] % pn;
      if (v != 0) throw_precision("charpoly: coefficient not in Z_p mod p^N0");
    }
    out[i] = chi[i].c[0] % pn;
  }
  return out;
}

}  // namespace

FrobBlockMatrix frobenius_norm(const ZqContext& z, const FrobBlockMatrix& Mf, int n) {
  if (n == 1) return Mf;
  const int r = Mf.r;
  BigInt pn = z.p();
  std::vector<int> pperm = Mf.block_perm;
  std::vector<int> qperm(r, 0);
  FrobBlockMatrix M = zero_block_matrix(z, r, Mf.d, {});
  for (int j = 1; j < r; ++j) {
    int cur = j;
    Block acc;
    for (int i = 0; i < n; ++i) {
      int nxt = pperm[cur];
      Block Bi = block_sigma(z, extract_block(z, Mf, cur, nxt), n - 1 - i);
      acc = i == 0 ? Bi : block_mul(z, acc, Bi);
      cur = nxt;
    }
    qperm[j] = cur;
    M.block_perm = qperm;
    put_block(z, M, j, cur, acc);
  }
  M.block_perm = qperm;
  return M;
}

FrobBlockMatrix frobenius_norm_dense(const ZqContext& z, const FrobBlockMatrix& Mf, int n) {
  FrobBlockMatrix D = Mf;
  std::vector<int> perm = Mf.block_perm;
  for (int k = 1; k < n; ++k) {
    std::vector<int> next(Mf.r, 0);
    FrobBlockMatrix S = sigma_matrix(z, Mf, k);
    for (int j = 1; j < Mf.r; ++j) next[j] = perm[Mf.block_perm[j]];
    D = dense_mul(z, S, D, next);
    perm = next;
  }
  return D;
}

bool matrices_agree(const ZqContext& z, const FrobBlockMatrix& A, const FrobBlockMatrix& B, int prec) {
  if (A.dim() != B.dim()) return false;
  for (std::size_t i = 0; i < A.entries.size(); ++i) {
    ScaledZq diff = scaled_sub(z, A.entries[i], B.entries[i]);
    if (!scaled_is_zero(diff) && diff.shift < prec) return false;
  }
  return true;
}

std::vector<ZqElem> berkowitz(const ZqContext& z, const std::vector<ZqElem>& A, int m) {
  // old: charpoly of the leading r×r submatrix, high→low.
  std::vector<ZqElem> old{z.one()};
  for (int r = 0; r < m; ++r) {
    std::vector<ZqElem> t(r + 2, z.zero());
    t[0] = z.one();
    t[1] = z.neg(A[r * m + r]);
    std::vector<ZqElem> v(r);
    for (int i = 0; i < r; ++i) v[i] = A[i * m + r];
    for (int k = 2; k <= r + 1; ++k) {
      ZqElem dot = z.zero();
      for (int i = 0; i < r; ++i) dot = z.add(dot, z.mul(A[r * m + i], v[i]));
      t[k] = z.neg(dot);
      if (k == r + 1) break;
      std::vector<ZqElem> nv(r, z.zero());
      for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l) nv[i] = z.add(nv[i], z.mul(A[i * m + l], v[l]));
      v = std::move(nv);
    }
    std::vector<ZqElem> cur(r + 2, z.zero());
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) cur[i] = z.add(cur[i], z.mul(t[i - j], old[j]));
    old = std::move(cur);
  }
  std::reverse(old.begin(), old.end());
  return old;
}

std::vector<BigInt> charpoly(const ZqContext& z, const FrobBlockMatrix& M, const CycleDecomposition& cycles, int N0) {
  std::vector<ZqElem> chi{z.one()};
  int prec = z.precision();
  const int b = M.block_size();
  for (const auto& cyc : cycles.cycles) {
    const int c = static_cast<int>(cyc.size());
    Block X;
    int cur = cyc[0];
    for (int i = 0; i < c; ++i) {
      int nxt = M.block_perm[cur];
      Block Bi = extract_block(z, M, cur, nxt);
      X = i == 0 ? Bi : block_mul(z, X, Bi);
      cur = nxt;
    }
    CC_ASSERT(cur == cyc[0], "charpoly: cycle does not close under the block permutation");
    int p_cyc;
    std::vector<ZqElem> phi = scaled_charpoly(z, X.e, b, X.shift, p_cyc);
    prec = std::min(prec, p_cyc);
    std::vector<ZqElem> sub(static_cast<std::size_t>(b) * c + 1, z.zero());
    for (int k = 0; k <= b; ++k) sub[static_cast<std::size_t>(k) * c] = phi[k];
    chi = zq_poly_mul(z, chi, sub);
  }
  return finish_charpoly(z, chi, prec, N0);
}

std::vector<BigInt> charpoly_dense(const ZqContext& z, const FrobBlockMatrix& M, int N0) {
  const int m = M.dim();
  int s = INT_MAX;
  for (const auto& e : M.entries)
    if (!scaled_is_zero(e)) s = std::min(s, e.shift);
  if (s == INT_MAX) s = 0;
  std::vector<ZqElem> X;
  X.reserve(M.entries.size());
  for (const auto& e : M.entries) X.push_back(scaled_is_zero(e) ? z.zero() : z.mul_p_pow(e.mantissa, e.shift - s));
  int prec;
  std::vector<ZqElem> chi = scaled_charpoly(z, X, m, s, prec);
  return finish_charpoly(z, chi, prec, N0);
}

}  // namespace cyclecover
