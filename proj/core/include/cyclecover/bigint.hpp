#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclecover {

using BigInt = mpz_class;

BigInt ipow(const BigInt& base, unsigned long e);
BigInt ipow(long base, unsigned long e);

// Largest e with p^e * den <= num. Returns -1 when 0 < num < den and
// kNegInfLog when num <= 0 (log of a non-positive quantity).
inline constexpr int kNegInfLog = -(1 << 20);
int floor_log(long p, const BigInt& num, const BigInt& den = 1);

// p-adic valuation of a nonzero integer; strips the factor and returns v.
int strip_p(long p, BigInt& m);
int valuation(long p, const BigInt& m);

BigInt binomial(unsigned long n, unsigned long k);
long gcd_long(long a, long b);
long multiplicative_order(const BigInt& q, long modulus);
long euler_phi(long n);
bool is_prime(long n);

std::string to_string(const BigInt& x);

}  // namespace cyclecover
