#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqb_cli/table.hpp"

namespace pqb::cli {

enum ExitCode : int { kExitOk = 0, kExitCertificateFailure = 1, kExitUsage = 2 };

/// Invalid flags or parameter values.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;

  std::vector<std::string> functions;  // corpus names or expressions
  std::optional<double> p, q;          // x-axis pair (or the only pair)
  std::optional<double> p2, q2;        // y-axis pair, defaults to (p, q)
  std::vector<std::string> schedules;  // built-in ids
  int n = 10;
  std::optional<int> m;
  int n_max = 8;
  std::vector<int> degrees;
  std::vector<double> xs;
  std::optional<std::pair<double, double>> point;
  std::optional<int> grid;
  int modulus_grid = 200;
  std::vector<std::string> theorems;
  int order = 0;  // voronovskaja: 0 = trace, 2 or 4 = scaled moment limits
  bool allow_fd = false;
  bool assume_smooth = false;

  bool json = false;
  std::string output;  // empty = stdout
  std::uint64_t seed = 1;
};

struct RunResult {
  Table table;
  int status = kExitOk;
  std::vector<std::string> diagnostics;  // written to stderr
};

/// Runs one subcommand. Throws UsageError on invalid configuration.
RunResult execute(const RunConfig& config);

/// execute + emission; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Table selftest_table(std::uint64_t seed, int& status);

}  // namespace pqb::cli
