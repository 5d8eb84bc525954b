#include "linnik/factorization.hpp"

namespace linnik {

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : *this)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

unsigned Factorization::big_omega() const {
  unsigned total = 0;
  for (const auto& pp : *this) total += pp.exponent;
  return total;
}

u64 Factorization::divisor_count() const {
  u64 count = 1;
  for (const auto& pp : *this) count *= pp.exponent + 1;
  return count;
}

void divisors(const Factorization& f, std::vector<u64>& out) {
  out.clear();
  out.push_back(1);
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out;
  divisors(f, out);
  return out;
}

Factorization factor_trial(u64 n) {
  Factorization f;
  if (n == 0) throw PreconditionError("cannot factor 0");
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push(p, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) f.push(n, 1);
  return f;
}

}  // namespace linnik
