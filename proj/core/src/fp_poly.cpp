#include "cyclecover/fp_poly.hpp"

#include "cyclecover/errors.hpp"

namespace cyclecover::fp {

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw NonUnitError("fp::inv of non-unit");
  return mod(t, p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly normalized(Poly f, long p) {
  for (auto& c : f) c = mod(c, p);
  trim(f);
  return f;
}

Poly add(const Poly& a, const Poly& b, long p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] + b[i], p);
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, long p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] - b[i], p);
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, long c, long p) {
  Poly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] * c, p);
  trim(out);
  return out;
}

Poly derivative(const Poly& a, long p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = mod(a[i] * static_cast<long>(i % p), p);
  trim(out);
  return out;
}

void divmod(const Poly& u, const Poly& v, long p, Poly& q, Poly& r) {
  if (v.empty()) throw InvalidInput("fp::divmod by zero polynomial");
  r = u;
  trim(r);
  q.clear();
  if (r.size() < v.size()) return;
  long lead_inv = inv(v.back(), p);
  q.assign(r.size() - v.size() + 1, 0);
  for (int k = degree(r); k >= degree(v); --k) {
    long c = mod(r[k] * lead_inv, p);
    if (!c) continue;
    size_t off = k - degree(v);
    q[off] = c;
    for (size_t i = 0; i < v.size(); ++i) r[off + i] = mod(r[off + i] - c * v[i], p);
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& u, const Poly& v, long p) {
  Poly q, r;
  divmod(u, v, p, q, r);
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, long p) { return rem(mul(a, b, p), m, p); }

Poly x_pow_p_pow(const Poly& m, long p, int k) {
  Poly x = rem(Poly{0, 1}, m, p);
  for (int i = 0; i < k; ++i) {
    // x <- x^p by square-and-multiply on the small exponent p.
    Poly base = x, acc{1};
    long e = p;
    while (e) {
      if (e & 1) acc = mulmod(acc, base, m, p);
      base = mulmod(base, base, m, p);
      e >>= 1;
    }
    x = acc;
  }
  return x;
}

Poly powmod(const Poly& a, const std::vector<std::uint64_t>& limbs, const Poly& m, long p) {
  Poly acc = rem(Poly{1}, m, p);
  Poly base = rem(a, m, p);
  for (std::uint64_t limb : limbs) {
    for (int b = 0; b < 64; ++b) {
      if ((limb >> b) & 1) acc = mulmod(acc, base, m, p);
      base = mulmod(base, base, m, p);
    }
  }
  return acc;
}

Poly gcd(Poly a, Poly b, long p) {
  a = normalized(a, p);
  b = normalized(b, p);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, inv(a.back(), p), p);
  return a;
}

Poly xgcd(const Poly& a, const Poly& b, long p, Poly& s, Poly& t) {
  Poly r0 = normalized(a, p), r1 = normalized(b, p);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  long c = inv(r0.back(), p);
  s = scale(s0, c, p);
  t = scale(t0, c, p);
  return scale(r0, c, p);
}

bool is_monic(const Poly& f) { return !f.empty() && f.back() == 1; }

bool is_irreducible(const Poly& f_in, long p) {
  Poly f = normalized(f_in, p);
  int m = degree(f);
  if (m < 1) return false;
  if (m == 1) return true;
  f = scale(f, inv(f.back(), p), p);
  // x^(p^m) == x mod f
  Poly x = rem(Poly{0, 1}, f, p);
  if (x_pow_p_pow(f, p, m) != x) return false;
  int mm = m;
  for (int l = 2; l <= mm; ++l) {
    if (mm % l) continue;
    while (mm % l == 0) mm /= l;
    Poly h = sub(x_pow_p_pow(f, p, m / l), x, p);
    if (degree(gcd(h, f, p)) != 0) return false;
  }
  return true;
}

}  // namespace cyclecover::fp
