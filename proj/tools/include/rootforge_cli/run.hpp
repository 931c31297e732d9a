#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rootforge::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPrecisionCap = 3,
  kNonCoprime = 4,
  kInternal = 5,
};

struct JobSpec {
  enum class Command { isolate, refine, topology, solve2 } command = Command::isolate;
  // Polynomial texts; solve2 takes two.
  std::vector<std::string> inputs;
  std::optional<int> k;
  std::optional<int64_t> kappa;
  std::optional<int64_t> b_max;
  uint64_t seed = 0;
  std::optional<long> shear;
  std::optional<uint64_t> prime;
  enum class Format { json, text } format = Format::json;
  bool stats = false;
};

// Writes the result to `out` and diagnostics to `err`; returns the exit code.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace rootforge::cli
