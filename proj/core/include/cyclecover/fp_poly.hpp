#pragma once

#include <cstdint>
#include <vector>

// Dense polynomials over F_p with small p (coefficients in [0, p), little-endian,
// no trailing zeros; the zero polynomial is empty).
namespace cyclecover::fp {

using Poly = std::vector<long>;

long mod(long a, long p);
long inv(long a, long p);

void trim(Poly& f);
int degree(const Poly& f);
Poly normalized(Poly f, long p);

Poly add(const Poly& a, const Poly& b, long p);
Poly sub(const Poly& a, const Poly& b, long p);
Poly mul(const Poly& a, const Poly& b, long p);
Poly scale(const Poly& a, long c, long p);
Poly derivative(const Poly& a, long p);
void divmod(const Poly& u, const Poly& v, long p, Poly& q, Poly& r);
Poly rem(const Poly& u, const Poly& v, long p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, long p);
// x^e mod m for e possibly huge, given as a base-p power: x^(p^k).
Poly x_pow_p_pow(const Poly& m, long p, int k);
Poly powmod(const Poly& a, const std::vector<std::uint64_t>& exponent_limbs, const Poly& m, long p);
Poly gcd(Poly a, Poly b, long p);
// Extended gcd: returns g monic with s*a + t*b = g.
Poly xgcd(const Poly& a, const Poly& b, long p, Poly& s, Poly& t);

bool is_monic(const Poly& f);
bool is_irreducible(const Poly& f, long p);

}  // namespace cyclecover::fp
