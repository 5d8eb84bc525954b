#include "linnik/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "linnik/arith.hpp"
#include "linnik/theorem.hpp"
#include "prime_walk.hpp"

namespace linnik::lemmas {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

// Euler phi for 0..N (phi[0] = 0), from a smallest-prime-factor table.
std::vector<u64> phi_table(u64 N) {
  std::vector<u64> phi(N + 1, 0);
  if (N == 0) return phi;
  phi[1] = 1;
  if (N < 2) return phi;
  const auto table = sieve::factor_table(1, N + 1);
  for (u64 n = 2; n <= N; ++n) {
    const u64 p = table.spf(n);
    const u64 m = n / p;
    phi[n] = (m % p == 0) ? phi[m] * p : phi[m] * (p - 1);
  }
  return phi;
}

// Omega(n) for 0..N (entry 0 unused).
std::vector<unsigned char> big_omega_table(u64 N) {
  std::vector<unsigned char> om(N + 1, 0);
  if (N < 2) return om;
  const auto table = sieve::factor_table(1, N + 1);
  for (u64 n = 2; n <= N; ++n) om[n] = static_cast<unsigned char>(om[n / table.spf(n)] + 1);
  return om;
}

// Smallest integer strictly greater than the real x (x >= 0).
u64 first_above(double x) { return static_cast<u64>(std::floor(x)) + 1; }

LemmaValue from_exact(Rational q) {
  LemmaValue v;
  v.value = to_double(q);
  v.exact = std::move(q);
  return v;
}

LemmaValue from_real(double x) { return LemmaValue{x, std::nullopt}; }

}  // namespace

double gamma_alpha(double alpha) { return alpha - alpha * std::log(alpha); }

u64 hooley1_lhs(u64 X, double omega, const ComputeOptions& options) {
  require(X >= 16, "hooley1: X must be >= 16");
  require(omega > 0 && std::isfinite(omega), "hooley1: omega must be > 0");
  const double lx = std::log(static_cast<double>(X));
  const double root = std::sqrt(static_cast<double>(X));
  const double lo = root * std::pow(lx, -omega);
  const double hi = root * std::pow(lx, omega);
  struct Acc {
    u64 total = 0;
    std::vector<u64> divs;
  };
  const Acc acc = detail::reduce_shifted_primes<Acc>(
      X, options, [] { return Acc{}; },
      [lo, hi](Acc& s, u64, const Factorization& f) {
        divisors(f, s.divs);
        i64 c = 0;
        for (const u64 d : s.divs) {
          const auto dd = static_cast<double>(d);
          if (dd > lo && dd < hi) c += arith::chi_int(d);
        }
        s.total += static_cast<u64>(c < 0 ? -c : c);
      },
      [](Acc& out, const Acc& part) { out.total += part.total; });
  return acc.total;
}

double hooley1_envelope(u64 X) {
  const double lx = std::log(static_cast<double>(X));
  return static_cast<double>(X) * std::pow(std::log(lx), 5) / std::pow(lx, 1.0 + theta0());
}

BrunTitchmarsh brun_titchmarsh_check(std::span<const u64> primes, u64 X, u64 q, u64 a) {
  require(q >= 1 && q < X, "brun_titchmarsh: need 1 <= q < X");
  require(std::gcd(a, q) == 1, "brun_titchmarsh: need gcd(a, q) = 1");
  const u64 target = a % q;
  u64 count = 0;
  for (const u64 p : primes) {
    if (p > X) break;
    if (p % q == target) ++count;
  }
  const double x = static_cast<double>(X);
  const double bound = 2.0 * x /
                       (static_cast<double>(arith::euler_phi(q)) * std::log(2.0 * x / static_cast<double>(q)));
  return BrunTitchmarsh{count, bound, static_cast<double>(count) < bound};
}

BrunTitchmarsh brun_titchmarsh_check(u64 X, u64 q, u64 a) {
  require(q >= 1 && q < X, "brun_titchmarsh: need 1 <= q < X");
  const auto primes = sieve::primes_up_to(X);
  return brun_titchmarsh_check(primes, X, q, a);
}

u64 count_N(u64 n, u64 r) {
  require(r >= 1 && 2 * r < n, "count_N: need 1 <= r < n/2");
  std::vector<char> is_prime(n + 1, 0);
  const auto primes = sieve::primes_up_to(n);
  for (const u64 p : primes) is_prime[p] = 1;
  u64 count = 0;
  for (const u64 p2 : primes) {
    if (r * p2 + 2 > n) break;
    if (is_prime[n - r * p2]) ++count;
  }
  return count;
}

double count_N_envelope(u64 n, u64 r) {
  const double ln = std::log(static_cast<double>(n) / static_cast<double>(r));
  const double nd = static_cast<double>(n);
  return nd * nd / (static_cast<double>(arith::euler_phi(n * r)) * ln * ln);
}

u64 f_progression_sum(u64 y, u64 k, u64 a, const Params& params) {
  require(y <= params.X(), "f_progression_sum: need y <= X");
  require(k >= 1, "f_progression_sum: need k >= 1");
  if (y <= 1) return 0;
  // f[n] = h(n) + g(n) over 1 <= n < y, by marking multiples of the primes <= Y.
  std::vector<unsigned char> f(y, 1);
  f[0] = 0;
  for (const u64 p : params.primes_y()) {
    for (u64 m = p; m < y; m += p) f[m] = 0;
    if (p < y) f[p] = 1;
  }
  u64 total = 0;
  const u64 start = (a % k == 0) ? k : a % k;
  for (u64 n = start; n < y; n += k) total += f[n];
  return total;
}

Rational estimate_B_exact(const Params& params, u64 y) {
  require(y >= 1 && y <= params.X(), "estimate_B: need 1 <= y <= X");
  Rational b(mpz_class(static_cast<unsigned long>(f_progression_sum(y, 1, 1, params))),
             mpz_class(static_cast<unsigned long>(y)));
  b.canonicalize();
  return b;
}

double estimate_B(const Params& params, u64 y) { return to_double(estimate_B_exact(params, y)); }

std::vector<u64> omega_histogram(u64 y) {
  require(y >= 1, "omega_histogram: need y >= 1");
  const auto om = big_omega_table(y);
  std::vector<u64> hist;
  for (u64 n = 1; n <= y; ++n) {
    if (om[n] >= hist.size()) hist.resize(om[n] + 1, 0);
    ++hist[om[n]];
  }
  return hist;
}

Rational omega_power_sum_exact(u64 y, double alpha) {
  require(y >= 1, "omega_power_sum: need y >= 1");
  require(alpha >= 0.5 && alpha <= 1.75, "omega_power_sum: alpha must lie in [1/2, 7/4]");
  const auto hist = omega_histogram(y);
  const Rational base = to_rational(alpha);
  Rational power = 1;
  Rational total = 0;
  for (const u64 count : hist) {
    total += power * mpz_class(static_cast<unsigned long>(count));
    power *= base;
  }
  return total;
}

double omega_power_sum(u64 y, double alpha) { return to_double(omega_power_sum_exact(y, alpha)); }

LemmaValue hooley13_sum(u64 y, double alpha, double omega) {
  require(y >= 16, "hooley13: need y >= 16");
  require(alpha >= 0.5 && alpha < 1.0, "hooley13: alpha must lie in [1/2, 1)");
  require(omega > 0 && std::isfinite(omega), "hooley13: omega must be > 0");
  const double ly = std::log(static_cast<double>(y));
  const double root = std::sqrt(static_cast<double>(y));
  const double lo = root * std::pow(ly, -omega);
  const double hi = root * std::pow(ly, omega);
  const double threshold = alpha * std::log(ly);
  const u64 n_max = static_cast<u64>(std::ceil(hi));
  const auto om = big_omega_table(n_max);
  const bool exact = n_max <= kExactSumLimit;
  ReciprocalSum rs;
  CompensatedSum cs;
  for (u64 n = first_above(lo); static_cast<double>(n) < hi; ++n) {
    if (!(static_cast<double>(om[n]) <= threshold)) continue;
    if (exact)
      rs.add(1, n);
    else
      cs.add(1.0 / static_cast<double>(n));
  }
  return exact ? from_exact(rs.value()) : from_real(cs.value());
}

LemmaValue hooley13q_sum(u64 y, double alpha, u64 q) {
  require(y >= 16, "hooley13q: need y >= 16");
  require(alpha > 1.0 && alpha <= 1.5, "hooley13q: alpha must lie in (1, 3/2]");
  require(q >= 1, "hooley13q: need q >= 1");
  if (q > y) return from_exact(Rational(0));
  const double threshold = alpha * std::log(std::log(static_cast<double>(y))) - 1.0;
  const u64 m_max = y / q;
  const auto om = big_omega_table(m_max);
  const unsigned omega_q = factor_trial(q).big_omega();
  const bool exact = y <= kExactSumLimit;
  ReciprocalSum rs;
  CompensatedSum cs;
  for (u64 m = 1; m <= m_max; ++m) {
    if (!(static_cast<double>(omega_q + om[m]) > threshold)) continue;
    if (exact)
      rs.add(1, q * m);
    else
      cs.add(1.0 / static_cast<double>(q * m));
  }
  return exact ? from_exact(rs.value()) : from_real(cs.value());
}

LemmaValue hooley14_partial(u64 r, u64 s, u64 n, double y, u64 L) {
  require(r >= 1 && s >= 1 && n >= 1, "hooley14: need r, s, n >= 1");
  require(std::gcd(r * s, n) == 1, "hooley14: need gcd(rs, n) = 1");
  require(y > 0 && std::isfinite(y), "hooley14: need y > 0");
  const u64 start = static_cast<u64>(std::ceil(y));
  if (L < start) return from_exact(Rational(0));
  const u64 rs = r * s;
  const u64 ns = n * s;
  const u64 phi_rs = arith::euler_phi(rs);
  const auto phi = phi_table(L);
  const bool exact = L <= kExactSumLimit;
  ReciprocalSum sum;
  CompensatedSum cs;
  for (u64 l = start; l <= L; ++l) {
    const int c = arith::chi_int(l);
    if (c == 0 || std::gcd(l, ns) != 1) continue;
    // phi(mn) = phi(m) phi(n) g / phi(g), g = gcd(m, n)
    const u64 g = std::gcd(rs, l);
    const u64 phi_rsl = phi_rs * phi[l] / phi[g] * g;
    if (exact)
      sum.add(c, phi_rsl);
    else
      cs.add(static_cast<double>(c) / static_cast<double>(phi_rsl));
  }
  return exact ? from_exact(sum.value()) : from_real(cs.value());
}

Hooley14Envelope hooley14_envelope(u64 r, u64 s, u64 n, double y, u64 X) {
  require(X >= 16, "hooley14: X must be >= 16");
  require(r <= X && s <= X && n <= X, "hooley14: need r, s, n <= X");
  const double ll = std::log(std::log(static_cast<double>(X)));
  const double rs = static_cast<double>(r) * static_cast<double>(s);
  Hooley14Envelope e{};
  e.r_term = ll * arith::r_envelope(n, r, s, y);
  e.sigma_term = ll * arith::sigma_minus1(s) * arith::sigma_minus1(n, y) / rs;
  e.tail_term = ll * ll / (rs * y);
  return e;
}

LemmaValue hooley15_sums(double u, double u_prime, double omega, u64 n, int which, u64 X) {
  require(which >= 1 && which <= 3, "hooley15: selector must be 1, 2 or 3");
  require(X >= 16, "hooley15: X must be >= 16");
  require(u > 1 && u < static_cast<double>(X), "hooley15: need 1 < u < X");
  require(u_prime >= u, "hooley15: need u' >= u");
  require(omega > 0 && std::isfinite(omega), "hooley15: omega must be > 0");
  require(n >= 1 && n <= X, "hooley15: need 1 <= n <= X");

  const double width = u * std::pow(std::log(static_cast<double>(X)), omega);
  const u64 h_max = static_cast<u64>(std::floor(u));
  const u64 d_max = static_cast<u64>(std::ceil(width));
  const auto table = sieve::factor_table(1, d_max + 1);
  const Factorization fn = factor_trial(n);

  u64 terms = 0;
  for (u64 h = 1; h <= h_max; ++h) {
    const double lo = u / static_cast<double>(h);
    const double hi = width / static_cast<double>(h);
    const u64 first = first_above(lo);
    if (static_cast<double>(first) < hi) terms += static_cast<u64>(std::ceil(hi)) - first;
  }
  const bool exact = terms <= kExactSumLimit && d_max <= kExactSumLimit && which != 1;

  Rational exact_total = 0;
  CompensatedSum total;
  for (u64 h = 1; h <= h_max; ++h) {
    const auto hd = static_cast<double>(h);
    const double lo = u / hd;
    const double hi = width / hd;
    const double yp = u_prime / hd;
    ReciprocalSum inner;
    CompensatedSum inner_real;
    for (u64 d = first_above(lo); static_cast<double>(d) < hi; ++d) {
      const Factorization fd = table.factorize_in_range(d);
      switch (which) {
        case 1:  // tau(d)/d
          if (d_max <= kExactSumLimit)
            inner.add(static_cast<i64>(fd.divisor_count()), d);
          else
            inner_real.add(static_cast<double>(fd.divisor_count()) / static_cast<double>(d));
          break;
        case 2: {  // sigma(d)/d^2
          u64 sigma = 0;
          for (const u64 e : divisors(fd)) sigma += e;
          if (exact)
            inner.add(static_cast<i64>(sigma), d * d);
          else
            inner_real.add(static_cast<double>(sigma) / (static_cast<double>(d) * static_cast<double>(d)));
          break;
        }
        default:  // 1/d
          if (exact)
            inner.add(1, d);
          else
            inner_real.add(1.0 / static_cast<double>(d));
          break;
      }
    }
    switch (which) {
      case 1: {
        const double coef =
            std::log(2.0 * yp) / yp * static_cast<double>(arith::tau_trunc(fn, yp)) / hd;
        const double inner_value =
            d_max <= kExactSumLimit ? to_double(inner.value()) : inner_real.value();
        total.add(coef * inner_value);
        break;
      }
      case 2:
        if (exact) {
          exact_total += arith::sigma_minus1_exact(fn, yp) * inner.value() / mpz_class(static_cast<unsigned long>(h));
        } else {
          total.add(to_double(arith::sigma_minus1_exact(fn, yp)) * inner_real.value() / hd);
        }
        break;
      default:
        if (exact)
          exact_total += inner.value();
        else
          total.merge(inner_real);
        break;
    }
  }
  if (which == 1) return from_real(total.value());
  if (which == 3) {
    if (exact) return from_exact(exact_total / to_rational(u));
    return from_real(total.value() / u);
  }
  return exact ? from_exact(exact_total) : from_real(total.value());
}

double hooley15_envelope(int which, u64 X) {
  const double ll = std::log(std::log(static_cast<double>(X)));
  switch (which) {
    case 1:
      return std::pow(ll, 4);
    case 2:
      return std::pow(ll, 3);
    case 3:
      return ll;
    default:
      throw PreconditionError("hooley15: selector must be 1, 2 or 3");
  }
}

LemmaValue murty_sum(u64 X) {
  require(X >= 2, "murty: need X >= 2");
  const auto phi = phi_table(X);
  if (X <= kExactSumLimit) {
    ReciprocalSum sum;
    for (u64 n = 1; n <= X; ++n) sum.add(1, phi[n]);
    return from_exact(sum.value());
  }
  CompensatedSum sum;
  for (u64 n = 1; n <= X; ++n) sum.add(1.0 / static_cast<double>(phi[n]));
  return from_real(sum.value());
}

EFPair E_F_pq(u64 p, u64 q, const Params& params) {
  require(q >= 1, "E_F_pq: need q >= 1");
  require(p >= 2 && p <= params.X(), "E_F_pq: need 2 <= p <= X");
  const Factorization fp = factor_trial(p);
  require(fp.size() == 1 && fp[0].exponent == 1, "E_F_pq: p must be prime");
  const double D = params.D();
  const double x_over_d = static_cast<double>(params.X()) / D;
  const arith::Residue a_mod_q = arith::Residue::reduce(params.a(), q);

  EFPair out{0, 0};
  // p = l(d, q) (mod dq) forces d | p - 1, so only those d can contribute.
  for (const u64 d : divisors(factor_trial(p - 1))) {
    const auto dd = static_cast<double>(d);
    if (!(dd > D && dd < x_over_d)) continue;
    if (std::gcd(d, q) != 1) continue;
    const auto l = arith::crt_l(arith::Residue::reduce(1, d), a_mod_q);
    if (!l) continue;
    const u64 dq = l->modulus();
    if (std::gcd(l->value(), dq) != 1) continue;
    if (p % dq != l->value()) continue;
    ++out.E;
    out.F += arith::chi_int(d);
  }
  return out;
}

}  // namespace linnik::lemmas
