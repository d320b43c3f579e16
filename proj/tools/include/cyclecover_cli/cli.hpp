#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclecover/curve.hpp"
#include "cyclecover/plan.hpp"

namespace cyclecover::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformed = 2,
  kNotSquarefree = 3,
  kCharacteristicDividesDegree = 4,
  kPrecisionFailure = 5,
  kOracleMismatch = 6,
};

struct JobSpec {
  long p = 0;
  int n = 1;
  std::optional<std::vector<long>> field_poly;
  int r = 0;
  std::vector<std::vector<long>> f;

  std::optional<BasisKind> basis;
  int guard_extra = 0;
  bool verify = false;
  bool json = true;
  int threads = 1;
  std::uint64_t oracle_cap = 10'000'000;
  std::uint64_t seed = 0;
};

// Parses a JSON job description; throws InvalidInput on malformed content.
JobSpec parse_job(const std::string& text);

// Full command-line entry point. Writes the report to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclecover::cli
