#include "cyclecover/oracle.hpp"

#include <limits>
#include <numeric>
#include <random>

#include "cyclecover/errors.hpp"
#include "cyclecover/fp_poly.hpp"

namespace cyclecover {

namespace {

std::vector<long> random_monic(long p, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, p - 1);
  std::vector<long> f(m + 1);
  for (int i = 0; i < m; ++i) f[i] = dist(rng);
  f[m] = 1;
  return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t N) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t l = 2; l * l <= N; ++l) {
    if (N % l) continue;
    out.push_back(l);
    while (N % l == 0) N /= l;
  }
  if (N > 1) out.push_back(N);
  return out;
}

bool is_primitive(const std::vector<long>& f, long p, std::uint64_t order) {
  if (!fp::is_irreducible(f, p)) return false;
  const fp::Poly one{1};
  for (std::uint64_t l : prime_factors(order)) {
    if (fp::powmod(fp::Poly{0, 1}, {order / l}, f, p) == one) return false;
  }
  return true;
}

}  // namespace

std::vector<long> random_irreducible(long p, int m, std::uint64_t seed) {
  if (m < 1) throw InvalidInput("random_irreducible: degree must be >= 1");
  std::mt19937_64 rng(seed);
  for (;;) {
    auto f = random_monic(p, m, rng);
    if (fp::is_irreducible(f, p)) return f;
  }
}

FqTower::FqTower(long p, int n, const std::vector<long>& base_modulus, int e, std::uint64_t seed)
    : p_(p), n_(n), m_(n * e) {
  BigInt sz = ipow(p, static_cast<unsigned long>(m_));
  if (sz > BigInt(std::numeric_limits<std::int32_t>::max()))
    throw InvalidInput("FqTower: field too large for table arithmetic");
  size_ = sz.get_ui();
  const std::uint64_t N = size_ - 1;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  if (m_ == 1) {
    // x − c with c a primitive root mod p.
    for (long c = 1; c < p; ++c) {
      std::vector<long> f{fp::mod(-c, p), 1};
      if (is_primitive(f, p, N) || p == 2) {
        modulus_ = f;
        break;
      }
    }
  } else {
    do modulus_ = random_monic(p, m_, rng);
    while (!is_primitive(modulus_, p, N));
  }

  antilog_.assign(N, 0);
  log_.assign(size_, -1);
  std::vector<long> digits(m_, 0);
  std::vector<std::uint64_t> pw(m_);
  pw[0] = 1;
  for (int i = 1; i < m_; ++i) pw[i] = pw[i - 1] * static_cast<std::uint64_t>(p);
  digits[0] = 1;
  std::uint64_t code = 1;
  for (std::uint64_t k = 0; k < N; ++k) {
    CC_ASSERT(log_[code] < 0, "FqTower: modulus is not primitive");
    antilog_[k] = static_cast<std::uint32_t>(code);
    log_[code] = static_cast<std::int32_t>(k);
    // multiply by the generator
    long top = digits[m_ - 1];
    for (int i = m_ - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    if (top) {
      for (int i = 0; i < m_; ++i) digits[i] = fp::mod(digits[i] - top * modulus_[i], p);
    }
    code = 0;
    for (int i = 0; i < m_; ++i) code += static_cast<std::uint64_t>(digits[i]) * pw[i];
  }

  zech_.assign(N, -1);
  for (std::uint64_t k = 0; k < N; ++k) {
    std::uint64_t c = antilog_[k];
    std::uint64_t d0 = c % static_cast<std::uint64_t>(p);
    std::uint64_t c1 = c - d0 + (d0 + 1) % static_cast<std::uint64_t>(p);
    zech_[k] = log_[c1];
  }

  // Root of the base modulus with the smallest code.
  const std::uint64_t step = N / (ipow(p, static_cast<unsigned long>(n)).get_ui() - 1);
  std::vector<long> Q = fp::normalized(base_modulus, p);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  auto eval_log = [&](std::int64_t lx) {
    std::int64_t acc = log_[Q.back() % p];
    for (int i = static_cast<int>(Q.size()) - 2; i >= 0; --i) {
      if (acc >= 0 && lx >= 0) acc = (acc + lx) % static_cast<std::int64_t>(N);
      else acc = -1;
      acc = add_logs(acc, log_[Q[i]]);
    }
    return acc;
  };
  if (Q.size() >= 2 && Q[0] == 0) best = 0;
  for (std::uint64_t j = 0; j * step < N; ++j) {
    std::int64_t lx = static_cast<std::int64_t>(j * step);
    if (eval_log(lx) < 0 && antilog_[lx] < best) best = antilog_[lx];
  }
  CC_ASSERT(best != std::numeric_limits<std::uint64_t>::max(), "FqTower: base modulus has no root");
  base_gen_code_ = best;
  base_gen_log_ = log_[best];
}

std::int64_t FqTower::add_logs(std::int64_t a, std::int64_t b) const {
  if (a < 0) return b;
  if (b < 0) return a;
  const std::int64_t N = static_cast<std::int64_t>(order());
  std::int64_t diff = b - a;
  if (diff < 0) diff += N;
  std::int64_t z = zech_[diff];
  if (z < 0) return -1;
  std::int64_t s = a + z;
  return s >= N ? s - N : s;
}

std::int64_t FqTower::embed(const std::vector<long>& c) const {
  const std::int64_t N = static_cast<std::int64_t>(order());
  std::int64_t acc = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    long ci = fp::mod(c[i], p_);
    if (!ci) continue;
    std::int64_t term;
    if (i == 0) {
      term = log_[ci];
    } else {
      if (base_gen_log_ < 0) continue;
      term = (log_[ci] + static_cast<std::int64_t>(i) * base_gen_log_) % N;
    }
    acc = add_logs(acc, term);
  }
  return acc;
}

long points_at_infinity(int delta, const BigInt& qe) {
  BigInt g = gcd(BigInt(delta), qe - 1);
  return g.get_si();
}

long points_at_infinity_enumerated(const FqTower& field, int delta) {
  const std::uint64_t N = field.order();
  long count = 0;
  for (std::uint64_t k = 0; k < N; ++k)
    if ((k * static_cast<std::uint64_t>(delta)) % N == 0) ++count;
  return count;
}

BigInt naive_curve_count(const CurveData& raw, int e, std::uint64_t cap) {
  CurveData c = normalized_curve(raw);
  BigInt Qe = ipow(c.q(), static_cast<unsigned long>(e));
  if (Qe > BigInt(static_cast<unsigned long>(cap)))
    throw InvalidInput("oracle: q^e = " + to_string(Qe) + " exceeds the enumeration cap");
  FqTower F(c.p, c.n, c.field_poly, e);
  const std::int64_t N = static_cast<std::int64_t>(F.order());
  const std::int64_t m = std::gcd(static_cast<std::int64_t>(c.r), N);
  std::vector<std::int64_t> fl;
  for (const auto& coeff : c.f) fl.push_back(F.embed(coeff));
  const int d = c.degree();

  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < F.size(); ++code) {
    const std::int64_t lx = F.log(code);
    std::int64_t acc;
    if (lx < 0) {
      acc = fl[0];
    } else {
      acc = fl[d];
      for (int i = d - 1; i >= 0; --i) {
        if (acc >= 0) {
          acc += lx;
          if (acc >= N) acc -= N;
        }
        acc = F.add_logs(acc, fl[i]);
      }
    }
    if (acc < 0) count += 1;
    else if (acc % m == 0) count += static_cast<std::uint64_t>(m);
  }
  BigInt total = BigInt(static_cast<unsigned long>(count));
  total += points_at_infinity(std::gcd(c.r, d), Qe);
  return total;
}

WeilPolynomial weil_from_counts(const std::vector<BigInt>& counts, int g, const BigInt& q) {
  if (static_cast<int>(counts.size()) < g) throw InvalidInput("weil_from_counts: need g counts");
  std::vector<BigInt> s(g + 1), el(g + 1);
  BigInt qe = 1;
  for (int e = 1; e <= g; ++e) {
    qe *= q;
    s[e] = qe + 1 - counts[e - 1];
  }
  el[0] = 1;
  for (int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (i % 2) acc += el[k - i] * s[i];
      else acc -= el[k - i] * s[i];
    }
    CC_ASSERT(acc % k == 0, "Newton identity division is inexact");
    el[k] = acc / k;
  }
  WeilPolynomial W;
  W.g = g;
  W.q = q;
  W.a.resize(g);
  for (int k = 1; k <= g; ++k) W.a[k - 1] = (k % 2) ? BigInt(-el[k]) : el[k];
  return W;
}

std::vector<BigInt> counts_from_weil(const WeilPolynomial& P, int e_max) {
  const int deg = 2 * P.g;
  auto c = P.coefficients();
  std::vector<BigInt> el(deg + 1);
  for (int k = 0; k <= deg; ++k) el[k] = (k % 2) ? BigInt(-c[deg - k]) : c[deg - k];
  std::vector<BigInt> s(e_max + 1), out;
  BigInt qe = 1;
  for (int e = 1; e <= e_max; ++e) {
    BigInt acc = 0;
    for (int i = 1; i < e && i <= deg; ++i) {
      BigInt t = el[i] * s[e - i];
      if (i % 2) acc += t;
      else acc -= t;
    }
    if (e <= deg) {
      BigInt t = el[e] * e;
      if (e % 2) acc += t;
      else acc -= t;
    }
    s[e] = acc;
    qe *= P.q;
    out.push_back(qe + 1 - s[e]);
  }
  return out;
}

WeilPolynomial oracle_weil_polynomial(const CurveData& curve, std::uint64_t cap) {
  auto [g, delta] = genus_delta(curve.r, curve.degree());
  (void)delta;
  std::vector<BigInt> counts;
  for (int e = 1; e <= g; ++e) counts.push_back(naive_curve_count(curve, e, cap));
  return weil_from_counts(counts, g, curve.q());
}

}  // namespace cyclecover
