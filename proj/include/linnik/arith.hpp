#pragma once

#include <cstdint>
#include <optional>

#include "linnik/exact.hpp"
#include "linnik/factorization.hpp"

// Exact elementary arithmetic functions. Everything here is a pure function.
namespace linnik::arith {

// A residue class value mod modulus, with 0 <= value < modulus.
class Residue {
 public:
  Residue(u64 value, u64 modulus);
  // Reduces an arbitrary value into [0, modulus).
  static Residue reduce(u64 value, u64 modulus);

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  u64 value_;
  u64 modulus_;
};

// A value of the non-principal character mod 4.
class CharValue {
 public:
  constexpr explicit CharValue(int v) : v_(v) {}
  constexpr int value() const { return v_; }

  friend constexpr CharValue operator*(CharValue a, CharValue b) {
    return CharValue(a.v_ * b.v_);
  }
  friend constexpr bool operator==(CharValue, CharValue) = default;

 private:
  int v_;
};

// +1 on n = 1 (4), -1 on n = 3 (4), 0 on even n.
constexpr int chi_int(u64 n) {
  if ((n & 1) == 0) return 0;
  return (n & 3) == 1 ? 1 : -1;
}

CharValue chi(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

int moebius(u64 n);
int moebius(const Factorization& f);

// Big omega: number of prime factors with multiplicity.
unsigned omega_big(u64 n);

// The residue l mod lcm(d, q) with l = a1 (d) and l = a2 (q), if the system is
// solvable. Moduli 1 are legal.
std::optional<Residue> crt_l(Residue a1, Residue a2);

// sum_{d | n} 1/d, or the tail sum_{d | n, d > y} 1/d when y is given.
Rational sigma_minus1_exact(u64 n, std::optional<double> y = std::nullopt);
Rational sigma_minus1_exact(const Factorization& f, std::optional<double> y = std::nullopt);
double sigma_minus1(u64 n, std::optional<double> y = std::nullopt);

// Number of divisors d of n with d <= y.
u64 tau_trunc(u64 n, double y);
u64 tau_trunc(const Factorization& f, double y);

// Number of ordered k-tuples of positive integers with product n.
u64 tau_k(u64 n, unsigned k);

// (log 2y)/y * tau_2(s)/(rs) * tau(n, y).
double r_envelope(u64 n, u64 r, u64 s, double y);

}  // namespace linnik::arith
