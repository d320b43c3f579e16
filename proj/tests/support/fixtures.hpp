#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cyclecover/curve.hpp"

namespace cctest {

// y^3 = f(x) over F_49, genus 13.
cyclecover::CurveData genus13_curve();
std::vector<std::string> genus13_expected();

// y^5 = f(x) over F_121, genus 26.
cyclecover::CurveData genus26_curve();
std::vector<std::string> genus26_expected();

cyclecover::CurveData small_curve(long p, int r, std::vector<long> f);

struct RandomCurveBounds {
  std::vector<long> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  int n_max = 2;
  int r_min = 2, r_max = 6;
  int d_min = 3, d_max = 9;
  unsigned long qg_max = 10'000'000;
};

// Random squarefree monic curve within the bounds (p ∤ r, g >= 1).
cyclecover::CurveData random_curve(std::mt19937_64& rng, const RandomCurveBounds& b = {});

}  // namespace cctest
