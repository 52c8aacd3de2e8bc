#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fibpart::cli {

enum class Format { csv, json };

struct RunConfig {
  std::string command;
  std::string value;  ///< positional argument of r / zeckendorf / cdf
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t steps = 2582;
  std::uint64_t limit = 10'000;
  std::uint64_t max = 3000;
  unsigned depth = 10;
  std::size_t samples = 50;
  std::string pattern = "1";
  bool density = false;
  Format format = Format::csv;
  std::string out;  ///< empty: standard output
  unsigned precision = 12;
  unsigned jobs = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one command line (without the program name). Data goes to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibpart::cli
