#include "cyclecover/bigint.hpp"
#include "cyclecover/errors.hpp"

namespace cyclecover {

void throw_precision(const std::string& what) { throw PrecisionError(what); }

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

int floor_log(long p, const BigInt& num, const BigInt& den) {
  if (num <= 0) return kNegInfLog;
  if (num < den) return -1;
  int e = 0;
  BigInt acc = den * p;
  while (acc <= num) {
    acc *= p;
    ++e;
  }
  return e;
}

int strip_p(long p, BigInt& m) {
  if (m == 0) return 0;
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

int valuation(long p, const BigInt& m) {
  BigInt t = m;
  return strip_p(p, t);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long multiplicative_order(const BigInt& q, long modulus) {
  if (modulus == 1) return 1;
  BigInt qm = q % modulus;
  long base = qm.get_si();
  if (gcd_long(base, modulus) != 1) throw InvalidInput("multiplicative_order: gcd(q, m) != 1");
  long acc = base % modulus;
  long k = 1;
  while (acc != 1) {
    acc = (acc * base) % modulus;
    ++k;
  }
  return k;
}

long euler_phi(long n) {
  long out = n;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      out -= out / f;
    }
  }
  if (n > 1) out -= out / n;
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace cyclecover
