#include "linnik/theorem.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "linnik/arith.hpp"
#include "prime_walk.hpp"

namespace linnik {

namespace {

void require_x(u64 X) {
  if (X < 2) throw PreconditionError("X must be >= 2");
}

// Moduli q <= Q with (q, a) = 1, with a mod q and phi(q).
struct Moduli {
  std::vector<u64> q;
  std::vector<u64> a_mod_q;
  std::vector<u64> phi;
};

Moduli qualifying_moduli(const Params& params) {
  Moduli m;
  for (u64 q = 1; q <= params.q_max(); ++q) {
    if (std::gcd(q, params.a()) != 1) continue;
    m.q.push_back(q);
    m.a_mod_q.push_back(params.a() % q);
    m.phi.push_back(arith::euler_phi(q));
  }
  return m;
}

// sum_i |count_i * phi_i - total| / phi_i, exactly.
Rational sum_abs_deviation(const std::vector<i64>& counts, i64 total, const std::vector<u64>& phi) {
  ReciprocalSum sum;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    mpz_class dev = mpz_class(static_cast<long>(counts[i])) * static_cast<unsigned long>(phi[i]) -
                    mpz_class(static_cast<long>(total));
    sum.add(mpz_class(abs(dev)), phi[i]);
  }
  return sum.value();
}

RangeSplit split_divisors(const std::vector<u64>& divs, double D, double x_over_d) {
  RangeSplit s{0, 0, 0};
  for (const u64 d : divs) {
    const auto dd = static_cast<double>(d);
    const int c = arith::chi_int(d);
    if (dd <= D) {
      s.low += c;
    } else if (dd < x_over_d) {
      s.mid += c;
    } else {
      s.high += c;
    }
  }
  return s;
}

struct BvAcc {
  i64 total = 0;
  std::vector<i64> in_class;
};

}  // namespace

double DecompositionResult::ratio() const {
  const Rational t = total();
  if (t == 0) return 0.0;
  return to_double(Rational(lhs / t));
}

u64 sum_r_shifted_primes(u64 X, const ComputeOptions& options) {
  require_x(X);
  return detail::reduce_shifted_primes<u64>(
      X, options, [] { return u64{0}; },
      [](u64& acc, u64, const Factorization& f) { acc += sieve::r_two_squares(f); },
      [](u64& out, const u64& part) { out += part; });
}

LinnikConstant linnik_constant_truncated(u64 prime_bound, const sieve::SieveConfig& config) {
  if (prime_bound < 3) throw PreconditionError("linnik_constant: prime bound must be >= 3");
  CompensatedSum log_product;
  sieve::for_each_prime(prime_bound, config, [&](u64 p) {
    if (p == 2) return;
    const double pd = static_cast<double>(p);
    log_product.add(std::log1p(arith::chi_int(p) / (pd * (pd - 1.0))));
  });
  return LinnikConstant{std::numbers::pi * std::exp(log_product.value()), prime_bound,
                        1.0 / static_cast<double>(prime_bound)};
}

LinnikConstant linnik_constant(double tolerance, const sieve::SieveConfig& config) {
  if (!(tolerance > 0) || !std::isfinite(tolerance))
    throw PreconditionError("linnik_constant: tolerance must be > 0");
  const double bound = std::ceil(1.0 / tolerance);
  if (bound > 1e12) throw PreconditionError("linnik_constant: tolerance too small");
  return linnik_constant_truncated(std::max<u64>(3, static_cast<u64>(bound)), config);
}

double theta0() { return 0.5 - 0.25 * std::numbers::e * std::numbers::ln2; }

std::vector<DiscrepancyRow> discrepancy_rows(u64 X, u64 q, const ComputeOptions& options) {
  require_x(X);
  if (q == 0) throw PreconditionError("q must be >= 1");
  struct Acc {
    u64 total = 0;
    std::vector<u64> by_residue;
  };
  const Acc acc = detail::reduce_shifted_primes<Acc>(
      X, options, [q] { return Acc{0, std::vector<u64>(q, 0)}; },
      [q](Acc& a, u64 p, const Factorization& f) {
        const u64 w = sieve::r_two_squares(f);
        a.total += w;
        a.by_residue[p % q] += w;
      },
      [](Acc& out, const Acc& part) {
        out.total += part.total;
        for (std::size_t i = 0; i < out.by_residue.size(); ++i) out.by_residue[i] += part.by_residue[i];
      });

  const u64 phi = arith::euler_phi(q);
  Rational main_term(mpz_class(static_cast<unsigned long>(acc.total)),
                     mpz_class(static_cast<unsigned long>(phi)));
  main_term.canonicalize();
  std::vector<DiscrepancyRow> rows;
  const u64 a_max = q == 1 ? 1 : q - 1;
  for (u64 a = 1; a <= a_max; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const u64 w = acc.by_residue[a % q];
    Rational disc = Rational(mpz_class(static_cast<unsigned long>(w))) - main_term;
    rows.push_back(DiscrepancyRow{q, a, w, main_term, disc});
  }
  return rows;
}

DiscrepancyRow discrepancy(u64 X, u64 q, u64 a, const ComputeOptions& options) {
  require_x(X);
  if (q == 0 || a == 0) throw PreconditionError("q and a must be >= 1");
  if (std::gcd(a, q) != 1)
    throw PreconditionError("discrepancy: gcd(a, q) = " + std::to_string(std::gcd(a, q)) + " > 1");
  const u64 target = a % q;
  struct Acc {
    u64 total = 0;
    u64 in_class = 0;
  };
  const Acc acc = detail::reduce_shifted_primes<Acc>(
      X, options, [] { return Acc{}; },
      [q, target](Acc& s, u64 p, const Factorization& f) {
        const u64 w = sieve::r_two_squares(f);
        s.total += w;
        if (p % q == target) s.in_class += w;
      },
      [](Acc& out, const Acc& part) {
        out.total += part.total;
        out.in_class += part.in_class;
      });
  Rational main(mpz_class(static_cast<unsigned long>(acc.total)),
                mpz_class(static_cast<unsigned long>(arith::euler_phi(q))));
  main.canonicalize();
  Rational disc = Rational(mpz_class(static_cast<unsigned long>(acc.in_class))) - main;
  return DiscrepancyRow{q, a, acc.in_class, main, disc};
}

Rational bv_sum_exact(const Params& params, const ComputeOptions& options) {
  const Moduli mods = qualifying_moduli(params);
  const std::size_t nq = mods.q.size();
  const BvAcc acc = detail::reduce_shifted_primes<BvAcc>(
      params.X(), options, [nq] { return BvAcc{0, std::vector<i64>(nq, 0)}; },
      [&mods, nq](BvAcc& s, u64 p, const Factorization& f) {
        const auto w = static_cast<i64>(sieve::r_two_squares(f));
        s.total += w;
        for (std::size_t i = 0; i < nq; ++i)
          if (p % mods.q[i] == mods.a_mod_q[i]) s.in_class[i] += w;
      },
      [](BvAcc& out, const BvAcc& part) {
        out.total += part.total;
        for (std::size_t i = 0; i < out.in_class.size(); ++i) out.in_class[i] += part.in_class[i];
      });
  return sum_abs_deviation(acc.in_class, acc.total, mods.phi);
}

double bv_sum(const Params& params, const ComputeOptions& options) {
  return to_double(bv_sum_exact(params, options));
}

RangeSplit split_r_by_ranges(u64 p, const Params& params) {
  if (p < 2 || p > params.X()) throw PreconditionError("split_r_by_ranges: need 2 <= p <= X");
  const Factorization fp = factor_trial(p);
  if (fp.size() != 1 || fp[0].exponent != 1)
    throw PreconditionError("split_r_by_ranges: p must be prime");
  const double D = params.D();
  return split_divisors(divisors(factor_trial(p - 1)), D, static_cast<double>(params.X()) / D);
}

DecompositionResult decompose(const Params& params, const ComputeOptions& options) {
  const double D = params.D();
  if (D < 2.0)
    throw DegenerateDError("degenerate D = " + std::to_string(D) +
                           " < 2; the range d <= D is vacuous (override the D exponent)");
  const double x_over_d = static_cast<double>(params.X()) / D;
  const Moduli mods = qualifying_moduli(params);
  const std::size_t nq = mods.q.size();

  struct Acc {
    BvAcc bv;
    i64 total_low = 0;
    i64 total_high = 0;
    i64 mid_abs_total = 0;
    std::vector<i64> low, high, mid;
    std::vector<u64> divs;
  };
  auto make = [nq] {
    Acc a;
    a.bv.in_class.assign(nq, 0);
    a.low.assign(nq, 0);
    a.high.assign(nq, 0);
    a.mid.assign(nq, 0);
    return a;
  };
  Acc acc = detail::reduce_shifted_primes<Acc>(
      params.X(), options, make,
      [&](Acc& s, u64 p, const Factorization& f) {
        divisors(f, s.divs);
        const RangeSplit split = split_divisors(s.divs, D, x_over_d);
        const i64 w = 4 * split.total();
        s.bv.total += w;
        s.total_low += split.low;
        s.total_high += split.high;
        s.mid_abs_total += split.mid < 0 ? -split.mid : split.mid;
        for (std::size_t i = 0; i < nq; ++i) {
          if (p % mods.q[i] != mods.a_mod_q[i]) continue;
          s.bv.in_class[i] += w;
          s.low[i] += split.low;
          s.high[i] += split.high;
          s.mid[i] += split.mid;
        }
      },
      [](Acc& out, const Acc& part) {
        out.bv.total += part.bv.total;
        out.total_low += part.total_low;
        out.total_high += part.total_high;
        out.mid_abs_total += part.mid_abs_total;
        for (std::size_t i = 0; i < out.low.size(); ++i) {
          out.bv.in_class[i] += part.bv.in_class[i];
          out.low[i] += part.low[i];
          out.high[i] += part.high[i];
          out.mid[i] += part.mid[i];
        }
      });

  ReciprocalSum s3;
  Rational s4 = 0;
  for (std::size_t i = 0; i < nq; ++i) {
    s3.add(acc.mid_abs_total, mods.phi[i]);
    s4 += acc.mid[i] < 0 ? -acc.mid[i] : acc.mid[i];
  }
  return DecompositionResult{sum_abs_deviation(acc.low, acc.total_low, mods.phi),
                             sum_abs_deviation(acc.high, acc.total_high, mods.phi),
                             s3.value(),
                             s4,
                             sum_abs_deviation(acc.bv.in_class, acc.bv.total, mods.phi),
                             params};
}

}  // namespace linnik
