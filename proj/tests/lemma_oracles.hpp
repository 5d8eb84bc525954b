#pragma once

// Direct-scan references for the lemma checkers (test-only).

#include <cmath>

#include "oracles.hpp"

namespace oracle {

inline u64 hooley1(u64 X, double omega) {
  const double lx = std::log(static_cast<double>(X));
  const double lo = std::sqrt(static_cast<double>(X)) * std::pow(lx, -omega);
  const double hi = std::sqrt(static_cast<double>(X)) * std::pow(lx, omega);
  u64 total = 0;
  for (u64 p : simple_sieve(X)) {
    i64 s = 0;
    for (u64 d : divisors(p - 1))
      if (static_cast<double>(d) > lo && static_cast<double>(d) < hi) s += chi(d);
    total += static_cast<u64>(s < 0 ? -s : s);
  }
  return total;
}

inline u64 count_N(u64 n, u64 r) {
  u64 c = 0;
  for (u64 p2 = 2; r * p2 < n; ++p2)
    if (is_prime(p2) && is_prime(n - r * p2)) ++c;
  return c;
}

inline u64 f_progression(u64 y, u64 k, u64 a, double Y) {
  u64 total = 0;
  for (u64 n = 1; n < y; ++n)
    if (n % k == a % k) total += static_cast<u64>(f_envelope(n, Y));
  return total;
}

inline mpq_class omega_power(u64 y, double alpha) {
  const mpq_class base(alpha);
  mpq_class total = 0;
  for (u64 n = 1; n <= y; ++n) {
    mpq_class term = 1;
    for (unsigned i = 0; i < big_omega(n); ++i) term *= base;
    total += term;
  }
  return total;
}

inline mpq_class hooley13(u64 y, double alpha, double omega) {
  const double ly = std::log(static_cast<double>(y));
  const double lo = std::sqrt(static_cast<double>(y)) * std::pow(ly, -omega);
  const double hi = std::sqrt(static_cast<double>(y)) * std::pow(ly, omega);
  const double threshold = alpha * std::log(ly);
  mpq_class total = 0;
  for (u64 n = 1; static_cast<double>(n) < hi; ++n) {
    if (!(static_cast<double>(n) > lo)) continue;
    if (static_cast<double>(big_omega(n)) <= threshold) total += mpq_class(1, static_cast<unsigned long>(n));
  }
  return total;
}

inline mpq_class hooley13q(u64 y, double alpha, u64 q) {
  const double threshold = alpha * std::log(std::log(static_cast<double>(y))) - 1.0;
  mpq_class total = 0;
  for (u64 n = 1; n <= y; ++n)
    if (n % q == 0 && static_cast<double>(big_omega(n)) > threshold)
      total += mpq_class(1, static_cast<unsigned long>(n));
  return total;
}

inline mpq_class hooley14(u64 r, u64 s, u64 n, double y, u64 L) {
  mpq_class total = 0;
  for (u64 l = 1; l <= L; ++l) {
    if (static_cast<double>(l) < y || std::gcd(l, n * s) != 1 || chi(l) == 0) continue;
    total += mpq_class(chi(l), static_cast<unsigned long>(phi_formula(r * s * l)));
  }
  return total;
}

inline u64 tau_upto(u64 n, double y) {
  u64 c = 0;
  for (u64 d : divisors(n))
    if (static_cast<double>(d) <= y) ++c;
  return c;
}

inline mpq_class sigma_minus1_tail(u64 n, double y) {
  mpq_class s = 0;
  for (u64 d : divisors(n))
    if (static_cast<double>(d) > y) s += mpq_class(1, static_cast<unsigned long>(d));
  return s;
}

// Selector 1 is returned through `real`, selectors 2 and 3 exactly.
inline mpq_class hooley15(double u, double u_prime, double omega, u64 n, int which, u64 X, double* real) {
  const double width = u * std::pow(std::log(static_cast<double>(X)), omega);
  mpq_class total = 0;
  double real_total = 0.0;
  for (u64 h = 1; static_cast<double>(h) <= u; ++h) {
    const double hd = static_cast<double>(h);
    const double yp = u_prime / hd;
    mpq_class inner = 0;
    for (u64 d = 1; static_cast<double>(d) < width / hd; ++d) {
      if (!(static_cast<double>(d) > u / hd)) continue;
      const mpq_class dd(static_cast<unsigned long>(d));
      if (which == 1) inner += mpq_class(static_cast<unsigned long>(divisors(d).size())) / dd;
      if (which == 2) inner += mpq_class(static_cast<unsigned long>(sigma(d))) / (dd * dd);
      if (which == 3) inner += 1 / dd;
    }
    if (which == 1)
      real_total += std::log(2.0 * yp) / yp * static_cast<double>(tau_upto(n, yp)) / hd * inner.get_d();
    if (which == 2) total += sigma_minus1_tail(n, yp) * inner / mpq_class(static_cast<unsigned long>(h));
    if (which == 3) total += inner;
  }
  if (which == 3) total /= mpq_class(u);
  if (real) *real = real_total;
  return total;
}

inline mpq_class murty(u64 X) {
  mpq_class total = 0;
  for (u64 n = 1; n <= X; ++n) total += mpq_class(1, static_cast<unsigned long>(phi_formula(n)));
  return total;
}

struct EF {
  u64 E;
  i64 F;
};

// Scans every integer d in (D, X/D).
inline EF e_f(u64 p, u64 q, u64 a, u64 X, double D) {
  EF out{0, 0};
  const double xd = static_cast<double>(X) / D;
  if (std::gcd(a, q) != 1 || p % q != a % q) return out;
  for (u64 d = 1; static_cast<double>(d) < xd; ++d) {
    if (!(static_cast<double>(d) > D)) continue;
    if (std::gcd(d, q) != 1 || p % d != 1 % d) continue;
    ++out.E;
    out.F += chi(d);
  }
  return out;
}

}  // namespace oracle
