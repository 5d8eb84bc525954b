#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace linnik {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for invalid engine configuration (segment length, memory budget).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes. A 64-bit integer has
// at most 15 distinct prime factors, so storage is inline.
class Factorization {
 public:
  static constexpr std::size_t kMaxDistinct = 15;

  Factorization() = default;

  void push(u64 prime, unsigned exponent) {
    if (size_ == kMaxDistinct) throw std::length_error("too many distinct primes");
    if (size_ > 0 && factors_[size_ - 1].prime >= prime)
      throw std::logic_error("factorization primes must increase");
    factors_[size_++] = PrimePower{prime, exponent};
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const PrimePower* begin() const { return factors_.data(); }
  const PrimePower* end() const { return factors_.data() + size_; }
  const PrimePower& operator[](std::size_t i) const { return factors_[i]; }

  u64 value() const;
  // Total number of prime factors counted with multiplicity.
  unsigned big_omega() const;
  u64 divisor_count() const;
  std::vector<PrimePower> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (!(a.factors_[i] == b.factors_[i])) return false;
    return true;
  }

 private:
  std::array<PrimePower, kMaxDistinct> factors_{};
  std::size_t size_ = 0;
};

// Appends every divisor of the factored integer to `out` (cleared first).
// Order is unspecified.
void divisors(const Factorization& f, std::vector<u64>& out);
std::vector<u64> divisors(const Factorization& f);

// Factorization by trial division; intended for moderate n.
Factorization factor_trial(u64 n);

}  // namespace linnik
