#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linnik/factorization.hpp"
#include "linnik/report.hpp"

namespace linnik::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kPrecondition = 3, kIo = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string lemma_id;
  std::optional<u64> x;
  double A = 1.0;
  u64 a = 1;
  std::optional<double> override_exponent;
  double omega = 1.0;
  std::optional<double> alpha;
  std::optional<u64> q;
  std::optional<double> y;
  std::optional<u64> k, n, r, s, L, p;
  std::optional<double> u, u_prime;
  std::optional<int> which;
  double tolerance = 1e-6;
  u64 x_min = 1000;
  u64 x_max = 100000;
  unsigned per_decade = 2;
  report::Format format = report::Format::csv;
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 1;
  std::optional<u64> segment_length;
};

const std::vector<std::string>& commands();

// Throws UsageError (or a CLI11 parse error) on bad flags.
RunConfig parse_args(const std::vector<std::string>& args);

// Runs one command and returns its report; never writes to any stream.
report::Report execute(const RunConfig& config);

// Full entry point: parse, execute, emit. The report is written to `out`
// only after it has been computed completely.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linnik::cli
