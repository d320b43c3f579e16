#include "cyclecover/series.hpp"

#include <algorithm>

#include "cyclecover/errors.hpp"

namespace cyclecover {

FbarData FbarData::from_poly(const ZqContext& ctx, const ZqPoly& fbar) {
  FbarData fb;
  fb.d = fbar.degree();
  fb.n = ctx.n();
  CC_ASSERT(fbar.shift == 0, "fbar must be integral");
  fb.c.resize(static_cast<std::size_t>(fb.d + 1) * fb.n);
  for (int i = 0; i <= fb.d; ++i)
    for (int s = 0; s < fb.n; ++s) {
      const BigInt& v = fbar.coeff(i)[s];
      CC_ASSERT(v >= 0 && mpz_fits_ulong_p(v.get_mpz_t()), "fbar coefficient not small");
      fb.c[i * fb.n + s] = v.get_ui();
    }
  return fb;
}

ZqPoly TauSeries::term(int k) const {
  ZqPoly P(n, d);
  std::copy(at(k, 0), at(k, 0) + static_cast<std::size_t>(d) * n, P.data.begin());
  return P;
}

void TauSeries::set_term(int k, const ZqPoly& P) {
  CC_ASSERT(P.shift == 0 || P.is_zero(), "TauSeries terms are integral");
  CC_ASSERT(P.degree() < d, "TauSeries term degree too large");
  std::fill(at(k, 0), at(k, 0) + static_cast<std::size_t>(d) * n, BigInt(0));
  std::copy(P.data.begin(), P.data.begin() + std::min(P.data.size(), static_cast<std::size_t>(d) * n), at(k, 0));
}

TauSeries series_one(const ZqContext& ctx, int d, int length) {
  TauSeries s(ctx.n(), d, length);
  if (length > 0) s.at(0, 0)[0] = 1;
  return s;
}

TauSeries series_from_terms(const ZqContext& ctx, int d, const std::vector<ZqPoly>& terms) {
  TauSeries s(ctx.n(), d, static_cast<int>(terms.size()));
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (!terms[k].is_zero()) {
      if (terms[k].shift < 0) throw InvalidInput("series_from_terms: term is not integral");
      ZqPoly t = terms[k];
      lower_shift(ctx, t, 0);
      s.set_term(static_cast<int>(k), t);
    }
  return s;
}

std::vector<ZqPoly> series_terms(const TauSeries& s) {
  std::vector<ZqPoly> out;
  for (int k = 0; k < s.length(); ++k) {
    out.push_back(s.term(k));
    out.back().trim();
  }
  return out;
}

void normalize_raw(const ZqContext& ctx, const FbarData& fb, RawSeries& raw, HeadPolicy policy) {
  const int n = raw.n, T = raw.T(), d = fb.d;
  std::vector<BigInt> c(T);
  for (int k = static_cast<int>(raw.rows.size()) - 1; k >= 0; --k) {
    int w = raw.width(k);
    bool divide = k > 0;
    for (int j = w - 1; j >= d; --j) {
      BigInt* cj = raw.at(k, j);
      ctx.reduce_raw(cj, T);
      bool zero = true;
      for (int s = 0; s < n; ++s)
        if (cj[s] != 0) zero = false;
      if (zero) continue;
      if (!divide) {
        if (policy == HeadPolicy::Strict) throw_precision("normalize: carry below τ-index 0");
        continue;
      }
      for (int s = 0; s < n; ++s) c[s] = cj[s];
      for (int i = 0; i < d; ++i) {
        BigInt* dst = raw.at(k, j - d + i);
        for (int t = 0; t < n; ++t) {
          unsigned long f = fb.c[i * n + t];
          if (!f) continue;
          for (int s = 0; s < n; ++s) mpz_submul_ui(dst[s + t].get_mpz_t(), c[s].get_mpz_t(), f);
        }
      }
      if (raw.width(k - 1) < j - d + 1) raw.rows[k - 1].resize(static_cast<std::size_t>(j - d + 1) * T);
      BigInt* carry = raw.at(k - 1, j - d);
      for (int s = 0; s < n; ++s) carry[s] += c[s];
      for (int s = 0; s < T; ++s) cj[s] = 0;
    }
    if (divide && w > d) raw.rows[k].resize(static_cast<std::size_t>(d) * T);
    for (int i = 0; i < std::min(w, d); ++i) ctx.reduce_raw(raw.at(k, i), T);
    if (!divide) {
      // Trim the head to its true length.
      int hw = raw.width(0);
      while (hw > 0) {
        BigInt* h = raw.at(0, hw - 1);
        bool zero = true;
        for (int s = 0; s < n; ++s)
          if (h[s] != 0) zero = false;
        if (!zero) break;
        --hw;
      }
      raw.rows[0].resize(static_cast<std::size_t>(hw) * T);
    }
  }
}

namespace {

TauSeries raw_to_series(const RawSeries& raw, int d) {
  const int n = raw.n, T = raw.T();
  TauSeries out(n, d, static_cast<int>(raw.rows.size()));
  for (int k = 0; k < out.length(); ++k) {
    int w = static_cast<int>(raw.rows[k].size()) / T;
    CC_ASSERT(w <= d, "series row not normalized");
    for (int i = 0; i < w; ++i)
      for (int s = 0; s < n; ++s) out.at(k, i)[s] = raw.rows[k][static_cast<std::size_t>(i) * T + s];
  }
  return out;
}

std::size_t bit_length(std::size_t x) {
  std::size_t b = 0;
  while (x) {
    ++b;
    x >>= 1;
  }
  return b;
}

}  // namespace

TauSeries series_mul(const ZqContext& ctx, const FbarData& fb, const TauSeries& a, const TauSeries& b,
                     int max_index) {
  const int n = ctx.n(), d = fb.d, T = 2 * n - 1, X = 2 * d - 1;
  int La = std::min(a.length(), max_index + 1), Lb = std::min(b.length(), max_index + 1);
  if (La == 0 || Lb == 0) return TauSeries(n, d, 0);
  int K = std::min(max_index, La + Lb - 2);

  std::size_t val_bits = mpz_sizeinbase(ctx.modulus().get_mpz_t(), 2);
  std::size_t count = static_cast<std::size_t>(std::min(La, Lb)) * d * n;
  std::size_t slot_bits = 2 * val_bits + bit_length(count) + 1;
  const std::size_t Ls = (slot_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  auto pack = [&](const TauSeries& s, int L, mpz_class& out) {
    std::size_t total = static_cast<std::size_t>(L) * X * T * Ls;
    mp_limb_t* limbs = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(total));
    std::fill(limbs, limbs + total, mp_limb_t(0));
    for (int k = 0; k < L; ++k)
      for (int i = 0; i < d; ++i)
        for (int t = 0; t < n; ++t) {
          const BigInt& v = s.at(k, i)[t];
          std::size_t sz = mpz_size(v.get_mpz_t());
          if (!sz) continue;
          const mp_limb_t* src = mpz_limbs_read(v.get_mpz_t());
          std::size_t slot = (static_cast<std::size_t>(k) * X + i) * T + t;
          std::copy(src, src + sz, limbs + slot * Ls);
        }
    mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(total));
  };

  mpz_class A, B, P;
  pack(a, La, A);
  pack(b, Lb, B);
  mpz_mul(P.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  const mp_limb_t* pl = mpz_limbs_read(P.get_mpz_t());
  const std::size_t psz = mpz_size(P.get_mpz_t());

  RawSeries raw;
  raw.n = n;
  raw.rows.assign(K + 1, std::vector<BigInt>(static_cast<std::size_t>(X) * T));
  for (int k = 0; k <= K; ++k)
    for (int i = 0; i < X; ++i)
      for (int t = 0; t < T; ++t) {
        std::size_t slot = (static_cast<std::size_t>(k) * X + i) * T + t;
        std::size_t off = slot * Ls;
        if (off >= psz) continue;
        std::size_t len = std::min(Ls, psz - off);
        mpz_import(raw.rows[k][static_cast<std::size_t>(i) * T + t].get_mpz_t(), len, -1, sizeof(mp_limb_t), 0, 0,
                   pl + off);
      }
  normalize_raw(ctx, fb, raw, HeadPolicy::Strict);
  return raw_to_series(raw, d);
}

TauSeries series_mul_naive(const ZqContext& ctx, const FbarData& fb, const TauSeries& a, const TauSeries& b,
                           int max_index) {
  const int n = ctx.n(), d = fb.d, T = 2 * n - 1, X = 2 * d - 1;
  int La = std::min(a.length(), max_index + 1), Lb = std::min(b.length(), max_index + 1);
  if (La == 0 || Lb == 0) return TauSeries(n, d, 0);
  int K = std::min(max_index, La + Lb - 2);
  RawSeries raw;
  raw.n = n;
  raw.rows.assign(K + 1, std::vector<BigInt>(static_cast<std::size_t>(X) * T));
  for (int k1 = 0; k1 < La; ++k1)
    for (int k2 = 0; k2 < Lb && k1 + k2 <= K; ++k2)
      for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2) ctx.addmul_raw(raw.at(k1 + k2, i1 + i2), a.at(k1, i1), b.at(k2, i2));
  normalize_raw(ctx, fb, raw, HeadPolicy::Strict);
  return raw_to_series(raw, d);
}

TauSeries series_add(const ZqContext& ctx, const TauSeries& a, const TauSeries& b) {
  const TauSeries& big = a.length() >= b.length() ? a : b;
  const TauSeries& small = a.length() >= b.length() ? b : a;
  TauSeries out = big;
  for (std::size_t i = 0; i < small.data.size(); ++i) {
    out.data[i] += small.data[i];
    if (out.data[i] >= ctx.modulus()) out.data[i] -= ctx.modulus();
  }
  return out;
}

TauSeries series_sub(const ZqContext& ctx, const TauSeries& a, const TauSeries& b) {
  TauSeries out(a.n, a.d, std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i];
  for (std::size_t i = 0; i < b.data.size(); ++i) {
    out.data[i] -= b.data[i];
    if (out.data[i] < 0) out.data[i] += ctx.modulus();
  }
  return out;
}

TauSeries series_mul_int(const ZqContext& ctx, const TauSeries& a, const BigInt& m) {
  TauSeries out = a;
  for (auto& v : out.data) {
    v *= m;
    ctx.mod_in_place(v);
  }
  return out;
}

bool series_equal(const TauSeries& a, const TauSeries& b) {
  int L = std::max(a.length(), b.length());
  for (int k = 0; k < L; ++k)
    for (int i = 0; i < a.d; ++i)
      for (int s = 0; s < a.n; ++s) {
        BigInt x = k < a.length() ? a.at(k, i)[s] : BigInt(0);
        BigInt y = k < b.length() ? b.at(k, i)[s] : BigInt(0);
        if (x != y) return false;
      }
  return true;
}

}  // namespace cyclecover
