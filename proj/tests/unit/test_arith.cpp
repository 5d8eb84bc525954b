#include <numeric>

#include "doctest.h"
#include "linnik/arith.hpp"
#include "linnik/sieve.hpp"
#include "oracles.hpp"

using namespace linnik;
using namespace linnik::arith;

TEST_CASE("chi on the mod 4 classes") {
  CHECK(chi(1) == CharValue(1));
  CHECK(chi(4) == CharValue(0));
  CHECK(chi(7) == CharValue(-1));
  CHECK(chi(2).value() == 0);
  CHECK_THROWS_AS(chi(0), PreconditionError);
}

TEST_CASE("chi is completely multiplicative up to 10^4") {
  bool ok = true;
  for (u64 m = 1; m <= 10000 && ok; ++m)
    for (u64 n = 1; n <= 10000; ++n)
      if (chi(m * n) != chi(m) * chi(n)) {
        ok = false;
        break;
      }
  CHECK(ok);
}

TEST_CASE("partial sums of chi stay in {0, 1}") {
  int sum = 0;
  bool ok = true;
  for (u64 n = 1; n <= 100000; ++n) {
    sum += chi(n).value();
    ok = ok && (sum == 0 || sum == 1);
  }
  CHECK(ok);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(13) == 12);
  CHECK(euler_phi(12) == 4);
  for (u64 n = 1; n <= 500; ++n) REQUIRE(euler_phi(n) == oracle::phi_count(n));

  // multiplicative over coprime pairs
  u64 pairs = 0;
  for (u64 m = 1; m <= 200; ++m)
    for (u64 n = 1; n <= 200; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      REQUIRE(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
  CHECK(pairs >= 10000);
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  // sum_{d | n} mu(d) = [n = 1]
  for (u64 n = 1; n <= 2000; ++n) {
    int s = 0;
    for (u64 d : oracle::divisors(n)) s += moebius(d);
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("crt_l examples") {
  auto l = crt_l(Residue(1, 3), Residue(1, 4));
  REQUIRE(l);
  CHECK(*l == Residue(1, 12));

  l = crt_l(Residue(2, 3), Residue(3, 4));
  REQUIRE(l);
  CHECK(*l == Residue(11, 12));

  CHECK_FALSE(crt_l(Residue(1, 2), Residue(2, 4)));

  // degenerate moduli
  l = crt_l(Residue(0, 1), Residue(0, 1));
  REQUIRE(l);
  CHECK(*l == Residue(0, 1));
}

TEST_CASE("crt_l agrees with exhaustive search for d, q <= 30") {
  for (u64 d = 1; d <= 30; ++d)
    for (u64 q = 1; q <= 30; ++q) {
      const u64 lcm = std::lcm(d, q);
      for (u64 a1 = 0; a1 < d; ++a1)
        for (u64 a2 = 0; a2 < q; ++a2) {
          std::optional<u64> found;
          for (u64 l = 0; l < lcm; ++l)
            if (l % d == a1 && l % q == a2) {
              found = l;
              break;
            }
          const auto got = crt_l(Residue(a1, d), Residue(a2, q));
          REQUIRE(got.has_value() == found.has_value());
          if (!got) continue;
          REQUIRE(got->modulus() == lcm);
          REQUIRE(got->value() == *found);
          if (std::gcd(a1, d) == 1 && std::gcd(a2, q) == 1) REQUIRE(std::gcd(got->value(), lcm) == 1);
        }
    }
}

TEST_CASE("Residue rejects value >= modulus") {
  CHECK_THROWS_AS(Residue(3, 3), PreconditionError);
  CHECK_THROWS_AS(Residue(0, 0), PreconditionError);
  CHECK(Residue::reduce(7, 3) == Residue(1, 3));
}

TEST_CASE("omega_big") {
  CHECK(omega_big(1) == 0);
  CHECK(omega_big(13) == 1);
  CHECK(omega_big(12) == 3);
  const auto table = sieve::factor_table(1, 100001);
  for (u64 n = 1; n <= 100000; ++n) REQUIRE(omega_big(n) == sieve::factorize(n, table).big_omega());
  // additivity
  for (u64 m = 1; m <= 100; ++m)
    for (u64 n = 1; n <= 100; ++n) REQUIRE(omega_big(m * n) == omega_big(m) + omega_big(n));
}

TEST_CASE("sigma_minus1") {
  CHECK(sigma_minus1_exact(1) == Rational(1));
  CHECK(sigma_minus1_exact(6) == Rational(2));
  CHECK(sigma_minus1_exact(6, 2.0) == Rational(1, 2));
  CHECK(sigma_minus1(6) == 2.0);
  for (u64 n = 1; n <= 10000; ++n) {
    Rational expect(mpz_class(static_cast<unsigned long>(oracle::sigma(n))), mpz_class(static_cast<unsigned long>(n)));
    expect.canonicalize();
    REQUIRE(sigma_minus1_exact(n) == expect);
  }
}

TEST_CASE("tau_trunc") {
  CHECK(tau_trunc(1, 10) == 1);
  CHECK(tau_trunc(13, 1) == 1);
  CHECK(tau_trunc(12, 3) == 3);
  CHECK(tau_trunc(12, 2.999) == 2);
  CHECK(tau_trunc(12, 1e9) == 6);
}

TEST_CASE("tau_k") {
  CHECK(tau_k(1, 4) == 1);
  CHECK(tau_k(13, 2) == 2);
  CHECK(tau_k(6, 2) == 4);
  for (u64 n = 1; n <= 10000; ++n) REQUIRE(tau_k(n, 2) == oracle::divisors(n).size());
  // tau_k(p^e) = C(e + k - 1, k - 1), multiplicative
  auto binom = [](u64 n, u64 k) {
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (unsigned k = 3; k <= 4; ++k)
    for (u64 n = 1; n <= 2000; ++n) {
      u64 expect = 1;
      for (const auto& [p, e] : factor_trial(n)) expect *= binom(e + k - 1, k - 1);
      REQUIRE(tau_k(n, k) == expect);
    }
}

TEST_CASE("r_envelope") {
  CHECK(r_envelope(1, 1, 1, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(r_envelope(6, 1, 2, 3.0) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
  CHECK(r_envelope(1, 2, 1, 1.0) == doctest::Approx(std::log(2.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(r_envelope(1, 1, 1, 0.0), PreconditionError);
}

TEST_CASE("to_double rounds to nearest") {
  CHECK(to_double(Rational(232, 1000)) == 0.232);
  CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(Rational(-2, 3)) == -2.0 / 3.0);
  CHECK(to_double(Rational(0)) == 0.0);
  for (long n = 1; n <= 2000; ++n)
    for (long d = 1; d <= 60; ++d) REQUIRE(to_double(Rational(n, d)) == static_cast<double>(n) / static_cast<double>(d));
  // exact tie: 1 + 2^-53 sits halfway between 1 and the next double
  Rational tie(mpz_class(1), mpz_class(1) << 53);
  tie += 1;
  CHECK(to_double(tie) == 1.0);
  CHECK(to_double(tie + Rational(mpz_class(1), mpz_class(1) << 52)) == 1.0 + std::ldexp(1.0, -51));
}
