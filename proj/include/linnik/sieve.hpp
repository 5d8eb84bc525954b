#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "linnik/factorization.hpp"

namespace linnik::sieve {

struct SieveConfig {
  // Integers per sieved segment.
  u64 segment_length = u64{1} << 22;
  // Largest FactorTable (in entries) a single call may allocate.
  u64 table_budget = u64{1} << 27;
};

// Throws ConfigError on an unusable configuration.
void validate(const SieveConfig& config);

// Global parameters: X, A and the fixed residue a, with the derived
//   Q = (log X)^A, D = X^(1/2) / (log X)^(A+14), Y = X^(1/(log log X)^2)
// and the primes up to Y. log is the natural logarithm.
class Params {
 public:
  Params(u64 x, double a_exponent, u64 residue);

  u64 X() const { return x_; }
  double A() const { return a_exponent_; }
  u64 a() const { return residue_; }

  double log_x() const;
  double loglog_x() const;
  double Q() const;
  // Largest integer q with q <= Q.
  u64 q_max() const;
  double D() const;
  double Y() const;
  // Exponent of log X in the denominator of D: A + 14 unless overridden.
  double d_exponent() const;
  bool d_overridden() const { return d_exponent_override_.has_value() || d_value_override_.has_value(); }

  // Primes p <= Y; the prime support of P.
  const std::vector<u64>& primes_y() const { return primes_y_; }

  Params with_d_exponent(double exponent) const;
  // Pins D to an explicit value (exploration and small synthetic checks).
  Params with_d_value(double d) const;

 private:
  u64 x_;
  double a_exponent_;
  u64 residue_;
  std::optional<double> d_exponent_override_;
  std::optional<double> d_value_override_;
  std::vector<u64> primes_y_;
};

// Smallest-prime-factor table for n in [lo, hi). The entry for 1 is kUnit.
class FactorTable {
 public:
  static constexpr std::uint32_t kUnit = 1;

  FactorTable(u64 lo, u64 hi, std::vector<std::uint32_t> spf);

  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  bool contains(u64 n) const { return n >= lo_ && n < hi_; }
  std::uint32_t spf(u64 n) const { return spf_[n - lo_]; }
  bool is_prime(u64 n) const { return n >= 2 && spf(n) == n; }
  std::span<const std::uint32_t> entries() const { return spf_; }

  // Factors n in [lo, hi). Cofactors that drop below lo are finished by trial
  // division over the stored base primes (all primes <= sqrt(hi)).
  Factorization factorize_in_range(u64 n) const;

 private:
  u64 lo_;
  u64 hi_;
  std::vector<std::uint32_t> spf_;
  std::shared_ptr<const std::vector<std::uint32_t>> base_primes_;
};

// Calls fn(p) for each prime p <= limit in increasing order.
void for_each_prime(u64 limit, const SieveConfig& config, const std::function<void(u64)>& fn);
std::vector<u64> primes_up_to(u64 limit, const SieveConfig& config = {});
u64 prime_count(u64 limit, const SieveConfig& config = {});

FactorTable factor_table(u64 lo, u64 hi, const SieveConfig& config = {});

// Factors n via the table. Outside [lo, hi) falls back to trial division only
// when allowed; otherwise throws PreconditionError.
Factorization factorize(u64 n, const FactorTable& table, bool allow_trial_fallback = false);

// Number of (x, y) in Z^2 with x^2 + y^2 = n, read off the factorization.
u64 r_two_squares(const Factorization& f);
u64 r_two_squares(u64 n);
// 4 * sum_{d | n} chi(d) by direct divisor enumeration.
u64 r_via_identity(u64 n);

// sum_{d | n} chi(d), from the factorization.
i64 chi_divisor_sum(const Factorization& f);

// 1 iff n is a prime not exceeding Y.
int g_indicator(u64 n, const Params& params);
// 1 iff no prime <= Y divides n.
int h_indicator(u64 n, const Params& params);
// g(n) + h(n), which is 0 or 1.
int f_enveloping(u64 n, const Params& params);

// Binary SPF segment cache:
//   "LNKSIEVE" | u32 version | u64 lo | u64 hi | (hi - lo) x u32 spf, all little-endian.
inline constexpr char kCacheMagic[8] = {'L', 'N', 'K', 'S', 'I', 'E', 'V', 'E'};
inline constexpr std::uint32_t kCacheVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::filesystem::path cache_file(const std::filesystem::path& dir, u64 lo, u64 hi);
void write_cache(const std::filesystem::path& path, const FactorTable& table);
// Returns nullopt when the file is missing or fails magic/version/range checks.
std::optional<FactorTable> read_cache(const std::filesystem::path& path, u64 lo, u64 hi);
// Loads [lo, hi) from the cache directory, building and storing it on a miss.
FactorTable factor_table_cached(u64 lo, u64 hi, const SieveConfig& config,
                                const std::optional<std::filesystem::path>& cache_dir);

}  // namespace linnik::sieve
