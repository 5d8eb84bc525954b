#pragma once

// Naive reference implementations used only by tests. Nothing here calls the
// library's sieve, divisor or summation code.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Plain (non-segmented) sieve of Eratosthenes.
inline std::vector<u64> simple_sieve(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  return out;
}

inline int chi(u64 n) {
  static constexpr int table[4] = {0, 1, 0, -1};
  return table[n % 4];
}

inline u64 phi_count(u64 n) {
  u64 c = 0;
  for (u64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

inline u64 phi_formula(u64 n) {
  u64 result = n;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline unsigned big_omega(u64 n) {
  unsigned c = 0;
  for (u64 p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++c;
    }
  return c + (n > 1 ? 1 : 0);
}

inline u64 sigma(u64 n) {
  u64 s = 0;
  for (u64 d : divisors(n)) s += d;
  return s;
}

// #{(x, y) in Z^2 : x^2 + y^2 = n}, by scanning x.
inline u64 lattice_r(u64 n) {
  u64 count = 0;
  const auto bound = static_cast<i64>(std::sqrt(static_cast<double>(n))) + 1;
  for (i64 x = -bound; x <= bound; ++x) {
    const i64 rest = static_cast<i64>(n) - x * x;
    if (rest < 0) continue;
    auto y = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (y * y > rest) --y;
    while ((y + 1) * (y + 1) <= rest) ++y;
    if (y * y == rest) count += (y == 0) ? 1 : 2;
  }
  return count;
}

// counts[n] = #{(x, y) : x^2 + y^2 = n} for all n <= N, by enumerating the disk.
inline std::vector<u64> lattice_counts(u64 N) {
  std::vector<u64> counts(N + 1, 0);
  const auto bound = static_cast<i64>(std::sqrt(static_cast<double>(N))) + 1;
  for (i64 x = -bound; x <= bound; ++x)
    for (i64 y = -bound; y <= bound; ++y) {
      const i64 v = x * x + y * y;
      if (v <= static_cast<i64>(N)) ++counts[static_cast<u64>(v)];
    }
  return counts;
}

inline u64 r_by_divisors(u64 n) {
  i64 s = 0;
  for (u64 d : divisors(n)) s += chi(d);
  return static_cast<u64>(4 * s);
}

// f = g + h with smoothness bound Y (a real).
inline int f_envelope(u64 n, double Y) {
  const bool g = is_prime(n) && static_cast<double>(n) <= Y;
  u64 P = 1;
  for (u64 p = 2; static_cast<double>(p) <= Y; ++p)
    if (is_prime(p)) P *= p;
  const bool h = std::gcd(n, P) == 1;
  return (g ? 1 : 0) + (h ? 1 : 0);
}

struct PrimeTable {
  std::vector<u64> primes;
  std::vector<u64> r_pm1;  // r(p - 1)
  u64 total = 0;
};

inline PrimeTable prime_table(u64 X) {
  PrimeTable t;
  t.primes = simple_sieve(X);
  for (u64 p : t.primes) {
    const u64 r = r_by_divisors(p - 1);
    t.r_pm1.push_back(r);
    t.total += r;
  }
  return t;
}

inline mpq_class abs_q(const mpq_class& x) { return x < 0 ? mpq_class(-x) : x; }

// Per-modulus enumeration of sum_{q <= Q, (q,a)=1} |sum_{p = a (q)} r(p-1) - total/phi(q)|.
inline mpq_class bv_sum(const PrimeTable& t, u64 q_max, u64 a) {
  mpq_class out = 0;
  for (u64 q = 1; q <= q_max; ++q) {
    if (std::gcd(q, a) != 1) continue;
    mpz_class in_class = 0;
    for (std::size_t i = 0; i < t.primes.size(); ++i)
      if (t.primes[i] % q == a % q) in_class += static_cast<unsigned long>(t.r_pm1[i]);
    mpq_class main(mpz_class(static_cast<unsigned long>(t.total)),
                   mpz_class(static_cast<unsigned long>(phi_formula(q))));
    main.canonicalize();
    out += abs_q(mpq_class(in_class) - main);
  }
  return out;
}

struct Decomposition {
  mpq_class S1, S2, S3, S4;
};

// Nested-loop evaluation of S1..S4 straight from their displayed definitions.
inline Decomposition decompose(const PrimeTable& t, u64 X, u64 q_max, u64 a, double D) {
  const double xd = static_cast<double>(X) / D;
  auto in_low = [&](u64 d) { return static_cast<double>(d) <= D; };
  auto in_mid = [&](u64 d) { return static_cast<double>(d) > D && static_cast<double>(d) < xd; };
  auto in_high = [&](u64 d) { return static_cast<double>(d) >= xd && static_cast<double>(d) > D; };
  auto chi_sum = [&](u64 p, auto pred) {
    i64 s = 0;
    for (u64 d : divisors(p - 1))
      if (pred(d)) s += chi(d);
    return s;
  };
  Decomposition out{0, 0, 0, 0};
  for (u64 q = 1; q <= q_max; ++q) {
    if (std::gcd(q, a) != 1) continue;
    const mpq_class inv_phi(1, static_cast<unsigned long>(phi_formula(q)));
    i64 low_prog = 0, low_all = 0, high_prog = 0, high_all = 0, mid_prog = 0;
    mpq_class mid_abs = 0;
    for (u64 p : t.primes) {
      const i64 lo = chi_sum(p, in_low);
      const i64 hi = chi_sum(p, in_high);
      const i64 mi = chi_sum(p, in_mid);
      low_all += lo;
      high_all += hi;
      mid_abs += mi < 0 ? -mi : mi;
      if (p % q == a % q) {
        low_prog += lo;
        high_prog += hi;
        mid_prog += mi;
      }
    }
    out.S1 += abs_q(mpq_class(static_cast<long>(low_prog)) - inv_phi * static_cast<long>(low_all));
    out.S2 += abs_q(mpq_class(static_cast<long>(high_prog)) - inv_phi * static_cast<long>(high_all));
    out.S3 += inv_phi * mid_abs;
    out.S4 += mid_prog < 0 ? -mid_prog : mid_prog;
  }
  return out;
}

}  // namespace oracle
