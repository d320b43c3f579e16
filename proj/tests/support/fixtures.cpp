#include "fixtures.hpp"

#include "cyclecover/fp_poly.hpp"
#include "cyclecover/oracle.hpp"

namespace cctest {

using cyclecover::CurveData;

CurveData genus13_curve() {
  CurveData c;
  c.p = 7;
  c.n = 2;
  c.field_poly = {4, -1, 1};
  c.r = 3;
  c.f = {{0, 0}, {5, 6}, {5, 4}, {0, 1}, {6, 0}, {0, 0}, {0, 6}, {0, 4},
         {4, 2}, {3, 0}, {6, 3}, {0, 1}, {0, 2}, {5, 2}, {0, 0}, {1, 0}};
  return c;
}

std::vector<std::string> genus13_expected() {
  return {"4",       "-88",      "-317",      "3477",        "45743",        "-38408",      "-3064081",
          "1826186", "105964107", "178170657", "-3878128722", "-10860792624", "227741125446"};
}

CurveData genus26_curve() {
  CurveData c;
  c.p = 11;
  c.n = 2;
  c.field_poly = {4, -1, 1};
  c.r = 5;
  c.f = {{6, 2}, {4, 7}, {9, 5}, {1, 10}, {10, 0}, {1, 3}, {6, 0}, {2, 0},
         {4, 0}, {10, 1}, {4, 10}, {4, 2}, {6, 4}, {7, 4}, {0, 0}, {1, 0}};
  return c;
}

std::vector<std::string> genus26_expected() {
  return {"36",
          "418",
          "3928",
          "107603",
          "1546802",
          "10195080",
          "189193348",
          "3908194517",
          "35529836037",
          "323855056565",
          "6026279205222",
          "71054667707163",
          "577639402235514",
          "7788857330417489",
          "103362684561282136",
          "988282517113615745",
          "11354454883387292669",
          "122508522344304060111",
          "999211815604433952646",
          "13694995222065645049886",
          "174130364097714846506217",
          "1066845743104788110404502",
          "11897270459284483568657805",
          "243759226939902383459526275",
          "1925128879480201238759308035",
          "8130284653021215396447907725"};
}

CurveData small_curve(long p, int r, std::vector<long> f) {
  CurveData c;
  c.p = p;
  c.n = 1;
  c.field_poly = {0, 1};
  c.r = r;
  for (long v : f) c.f.push_back({v});
  return cyclecover::normalized_curve(c);
}

CurveData random_curve(std::mt19937_64& rng, const RandomCurveBounds& b) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    long p = b.primes[pick(0, static_cast<int>(b.primes.size()) - 1)];
    int n = pick(1, b.n_max);
    int r = pick(b.r_min, b.r_max);
    int d = pick(b.d_min, b.d_max);
    if (r % p == 0) continue;
    auto [g, delta] = cyclecover::genus_delta(r, d);
    if (g == 0) continue;
    if (cyclecover::ipow(p, static_cast<unsigned long>(g * n)) > cyclecover::BigInt(b.qg_max)) continue;
    CurveData c;
    c.p = p;
    c.n = n;
    c.r = r;
    c.field_poly = cyclecover::random_irreducible(p, n, rng());
    std::uniform_int_distribution<long> digit(0, p - 1);
    for (int i = 0; i < d; ++i) {
      std::vector<long> coeff(n);
      for (auto& v : coeff) v = digit(rng);
      c.f.push_back(coeff);
    }
    std::vector<long> lead(n, 0);
    lead[0] = 1;
    c.f.push_back(lead);
    if (!cyclecover::is_squarefree(c)) continue;
    return c;
  }
}

}  // namespace cctest
