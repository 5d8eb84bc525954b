#include "linnik/exact.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace linnik {

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("cannot convert non-finite value to a rational");
  // mpq_set_d is exact for finite doubles.
  Rational q(x);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  const double t = q.get_d();
  if (!std::isfinite(t) || to_rational(t) == q) return t;
  const double away = std::nextafter(t, q > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return t;
  const Rational gap_t = abs(q - to_rational(t));
  const Rational gap_a = abs(to_rational(away) - q);
  if (gap_a < gap_t) return away;
  if (gap_t < gap_a) return t;
  std::int64_t bits;
  std::memcpy(&bits, &t, sizeof bits);
  return (bits & 1) == 0 ? t : away;
}

std::string to_string(const Rational& q) { return q.get_str(); }

void ReciprocalSum::add(std::int64_t num, std::uint64_t den) {
  add(mpz_class(static_cast<long>(num)), den);
}

void ReciprocalSum::add(const mpz_class& num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (num == 0) return;
  mpz_class n = num;
  mpz_class d(static_cast<unsigned long>(den));
  mpz_class g = gcd(n, d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  terms_[d.get_ui()] += n;
}

void ReciprocalSum::merge(const ReciprocalSum& other) {
  for (const auto& [den, num] : other.terms_) terms_[den] += num;
}

Rational ReciprocalSum::value() const {
  mpz_class lcm_all(1);
  for (const auto& [den, num] : terms_) {
    if (num != 0) mpz_lcm_ui(lcm_all.get_mpz_t(), lcm_all.get_mpz_t(), den);
  }
  mpz_class numer(0);
  mpz_class part;
  for (const auto& [den, num] : terms_) {
    if (num == 0) continue;
    mpz_divexact_ui(part.get_mpz_t(), lcm_all.get_mpz_t(), den);
    numer += part * num;
  }
  Rational out(numer, lcm_all);
  out.canonicalize();
  return out;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

}  // namespace linnik
