#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace linnik {

using Rational = mpq_class;

// Every finite double is a dyadic rational; this conversion is exact.
Rational to_rational(double x);

// Nearest double, ties to even. mpq_class::get_d truncates instead.
double to_double(const Rational& q);

std::string to_string(const Rational& q);

// Sums above this many terms (or with denominators above it) are accumulated
// in compensated floating point instead of exact rationals.
inline constexpr std::uint64_t kExactSumLimit = 100000;

// Exact sum of terms num/den with word-sized denominators. Terms are grouped
// by reduced denominator and combined over their lcm once, at the end.
class ReciprocalSum {
 public:
  void add(std::int64_t num, std::uint64_t den);
  void add(const mpz_class& num, std::uint64_t den);
  void merge(const ReciprocalSum& other);
  Rational value() const;
  bool empty() const { return terms_.empty(); }

 private:
  std::map<std::uint64_t, mpz_class> terms_;
};

// Neumaier compensated summation. Deterministic for a fixed add order.
class CompensatedSum {
 public:
  void add(double x);
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace linnik
