#pragma once

#include <cstdint>
#include <vector>

#include "cyclecover/bigint.hpp"
#include "cyclecover/curve.hpp"
#include "cyclecover/weil_polynomial.hpp"

namespace cyclecover {

// Monic irreducible polynomial of degree m over F_p, deterministic in seed.
std::vector<long> random_irreducible(long p, int m, std::uint64_t seed);

// F_{p^{ne}} with an embedded copy of F_{p^n}. Elements are encoded as integers
// (base-p digits = coefficients in the tower generator g); the tower modulus is
// primitive so every nonzero element is g^k, and arithmetic runs on log/Zech
// tables.
class FqTower {
 public:
  FqTower(long p, int n, const std::vector<long>& base_modulus, int e, std::uint64_t seed = 0);

  long p() const { return p_; }
  int degree() const { return m_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t order() const { return size_ - 1; }
  const std::vector<long>& modulus() const { return modulus_; }

  // log of a nonzero element code, -1 for zero.
  std::int64_t log(std::uint64_t code) const { return log_[code]; }
  std::uint64_t exp(std::int64_t k) const { return antilog_[static_cast<std::uint64_t>(k) % order()]; }
  // log(1 + g^k), or -1 when 1 + g^k = 0.
  std::int64_t zech(std::int64_t k) const { return zech_[k]; }
  // Adds elements given by logs (-1 = zero); returns the log of the sum.
  std::int64_t add_logs(std::int64_t a, std::int64_t b) const;

  // Image of the base field element c (n residues mod p) as a log (-1 for zero).
  std::int64_t embed(const std::vector<long>& c) const;
  std::uint64_t base_generator_code() const { return base_gen_code_; }

 private:
  long p_;
  int n_;
  int m_;
  std::uint64_t size_;
  std::vector<long> modulus_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> zech_;
  std::uint64_t base_gen_code_ = 0;
  std::int64_t base_gen_log_ = -1;
};

// Number of points at infinity over F_{q^e}: gcd(δ, q^e − 1).
long points_at_infinity(int delta, const BigInt& qe);
// Same quantity by enumerating T in F_{q^e}^* with T^δ = 1.
long points_at_infinity_enumerated(const FqTower& field, int delta);

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// #C(F_{q^e}) by exhaustive enumeration; throws InvalidInput when q^e > cap.
BigInt naive_curve_count(const CurveData& curve, int e, std::uint64_t cap = kDefaultOracleCap);

// Weil polynomial from #C(F_{q^e}), e = 1..g, via Newton's identities.
WeilPolynomial weil_from_counts(const std::vector<BigInt>& counts, int g, const BigInt& q);
// Predicted #C(F_{q^e}) for e = 1..e_max from a Weil polynomial.
std::vector<BigInt> counts_from_weil(const WeilPolynomial& P, int e_max);

// Convenience: the oracle's full Weil polynomial (throws when q^g > cap).
WeilPolynomial oracle_weil_polynomial(const CurveData& curve, std::uint64_t cap = kDefaultOracleCap);

}  // namespace cyclecover
