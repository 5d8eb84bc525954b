#pragma once

#include <cstdint>
#include <vector>

#include "linnik/exact.hpp"
#include "linnik/options.hpp"
#include "linnik/sieve.hpp"

namespace linnik {

using sieve::Params;

// Raised by decompose when D < 2, so the range d <= D is vacuous.
class DegenerateDError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct DiscrepancyRow {
  u64 q;
  u64 a;
  // sum_{p <= X, p = a (q)} r(p - 1)
  u64 weighted_count;
  // (1/phi(q)) sum_{p <= X} r(p - 1)
  Rational main_term;
  Rational discrepancy;
};

struct DecompositionResult {
  Rational S1, S2, S3, S4;
  Rational lhs;
  Params params;

  double s1() const { return to_double(S1); }
  double s2() const { return to_double(S2); }
  double s3() const { return to_double(S3); }
  double s4() const { return to_double(S4); }
  double lhs_value() const { return to_double(lhs); }
  Rational total() const { return S1 + S2 + S3 + S4; }
  // lhs / (S1 + S2 + S3 + S4); 0 when both vanish.
  double ratio() const;
};

struct LinnikConstant {
  double value;
  u64 prime_bound;
  double tail_bound;
};

// Chi-sums over the divisors of p - 1 split into d <= D, D < d < X/D and the
// remaining divisors d >= X/D. The three parts always partition the divisors.
struct RangeSplit {
  i64 low;
  i64 mid;
  i64 high;
  i64 total() const { return low + mid + high; }
};

// sum_{p <= X} r(p - 1)
u64 sum_r_shifted_primes(u64 X, const ComputeOptions& options = {});

// pi * prod_{2 < p <= prime_bound} (1 + chi(p)/(p(p-1))).
LinnikConstant linnik_constant_truncated(u64 prime_bound, const sieve::SieveConfig& config = {});
// Truncates at B = ceil(1/tolerance), so the log-tail bound 1/B <= tolerance.
LinnikConstant linnik_constant(double tolerance, const sieve::SieveConfig& config = {});

// 1/2 - (e log 2)/4
double theta0();

DiscrepancyRow discrepancy(u64 X, u64 q, u64 a, const ComputeOptions& options = {});
// One row per reduced residue a mod q, in increasing a.
std::vector<DiscrepancyRow> discrepancy_rows(u64 X, u64 q, const ComputeOptions& options = {});

// sum_{q <= Q, (q, a) = 1} |discrepancy(X, q, a)|
Rational bv_sum_exact(const Params& params, const ComputeOptions& options = {});
double bv_sum(const Params& params, const ComputeOptions& options = {});

RangeSplit split_r_by_ranges(u64 p, const Params& params);

DecompositionResult decompose(const Params& params, const ComputeOptions& options = {});

}  // namespace linnik
