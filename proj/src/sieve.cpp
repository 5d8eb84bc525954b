#include "linnik/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linnik/arith.hpp"

namespace linnik::sieve {

namespace {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Primes up to a small limit (base primes for segmented work).
std::vector<std::uint32_t> small_primes(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace

void validate(const SieveConfig& config) {
  if (config.segment_length == 0) throw ConfigError("sieve segment length must be positive");
  if (config.table_budget == 0) throw ConfigError("sieve table budget must be positive");
}

Params::Params(u64 x, double a_exponent, u64 residue)
    : x_(x), a_exponent_(a_exponent), residue_(residue) {
  if (x < 16) throw PreconditionError("X must be >= 16");
  if (!(a_exponent >= 0) || !std::isfinite(a_exponent))
    throw PreconditionError("A must be a finite nonnegative real");
  if (residue == 0) throw PreconditionError("the residue a must be >= 1");
  const double y = Y();
  const u64 bound = static_cast<u64>(std::floor(y));
  for (auto p : small_primes(bound)) primes_y_.push_back(p);
}

double Params::log_x() const { return std::log(static_cast<double>(x_)); }

double Params::loglog_x() const { return std::log(log_x()); }

double Params::Q() const { return std::pow(log_x(), a_exponent_); }

u64 Params::q_max() const { return static_cast<u64>(std::floor(Q())); }

double Params::d_exponent() const {
  return d_exponent_override_ ? *d_exponent_override_ : a_exponent_ + 14.0;
}

double Params::D() const {
  if (d_value_override_) return *d_value_override_;
  return std::sqrt(static_cast<double>(x_)) / std::pow(log_x(), d_exponent());
}

double Params::Y() const {
  const double ll = loglog_x();
  return std::exp(log_x() / (ll * ll));
}

Params Params::with_d_exponent(double exponent) const {
  if (!std::isfinite(exponent)) throw PreconditionError("D exponent must be finite");
  Params p = *this;
  p.d_exponent_override_ = exponent;
  p.d_value_override_.reset();
  return p;
}

Params Params::with_d_value(double d) const {
  if (!(d > 0) || !std::isfinite(d)) throw PreconditionError("D must be a positive real");
  Params p = *this;
  p.d_value_override_ = d;
  p.d_exponent_override_.reset();
  return p;
}

FactorTable::FactorTable(u64 lo, u64 hi, std::vector<std::uint32_t> spf)
    : lo_(lo), hi_(hi), spf_(std::move(spf)) {
  if (lo == 0 || hi <= lo) throw PreconditionError("factor table needs 1 <= lo < hi");
  if (hi - 1 > UINT32_MAX) throw PreconditionError("factor table limited to n < 2^32");
  if (spf_.size() != hi - lo) throw PreconditionError("factor table size mismatch");
  base_primes_ = std::make_shared<const std::vector<std::uint32_t>>(small_primes(isqrt(hi - 1)));
}

Factorization FactorTable::factorize_in_range(u64 n) const {
  Factorization f;
  u64 m = n;
  u64 last = 0;
  while (m > 1 && m >= lo_) {
    const u64 p = spf_[m - lo_];
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.push(p, e);
    last = p;
  }
  if (m > 1) {
    const auto& base = *base_primes_;
    auto it = std::upper_bound(base.begin(), base.end(), last);
    for (; it != base.end(); ++it) {
      const u64 p = *it;
      if (p * p > m) break;
      if (m % p != 0) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.push(p, e);
    }
    if (m > 1) f.push(m, 1);
  }
  return f;
}

void for_each_prime(u64 limit, const SieveConfig& config, const std::function<void(u64)>& fn) {
  validate(config);
  if (limit < 2) return;
  fn(2);
  if (limit < 3) return;
  const auto base = small_primes(isqrt(limit));
  // Odd-only segments: slot i of a segment starting at odd `lo` is lo + 2i.
  const u64 slots = std::max<u64>(1, config.segment_length / 2);
  std::vector<char> composite(slots);
  for (u64 lo = 3; lo <= limit; lo += 2 * slots) {
    const u64 hi = std::min<u64>(limit, lo + 2 * (slots - 1));
    const u64 count = (hi - lo) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (std::size_t k = 1; k < base.size(); ++k) {
      const u64 p = base[k];
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (u64 j = (start - lo) / 2; j < count; j += p) composite[j] = 1;
    }
    for (u64 j = 0; j < count; ++j)
      if (!composite[j]) fn(lo + 2 * j);
  }
}

std::vector<u64> primes_up_to(u64 limit, const SieveConfig& config) {
  std::vector<u64> out;
  if (limit >= 10)
    out.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) /
                                         std::log(static_cast<double>(limit))));
  for_each_prime(limit, config, [&](u64 p) { out.push_back(p); });
  return out;
}

u64 prime_count(u64 limit, const SieveConfig& config) {
  u64 count = 0;
  for_each_prime(limit, config, [&](u64) { ++count; });
  return count;
}

FactorTable factor_table(u64 lo, u64 hi, const SieveConfig& config) {
  validate(config);
  if (lo == 0 || hi <= lo) throw PreconditionError("factor_table needs 1 <= lo < hi");
  if (hi - lo > config.table_budget)
    throw ConfigError("factor table of " + std::to_string(hi - lo) +
                      " entries exceeds the memory budget of " +
                      std::to_string(config.table_budget));
  if (hi - 1 > UINT32_MAX) throw PreconditionError("factor_table limited to n < 2^32");

  std::vector<std::uint32_t> spf(hi - lo, 0);
  const auto base = small_primes(isqrt(hi - 1));
  for (u64 seg = lo; seg < hi; seg += config.segment_length) {
    const u64 seg_hi = std::min(hi, seg + config.segment_length);
    for (const u64 p : base) {
      if (p * p >= seg_hi) break;
      const u64 start = std::max(p * p, (seg + p - 1) / p * p);
      for (u64 m = start; m < seg_hi; m += p) {
        auto& slot = spf[m - lo];
        if (slot == 0) slot = static_cast<std::uint32_t>(p);
      }
    }
    for (u64 n = seg; n < seg_hi; ++n) {
      auto& slot = spf[n - lo];
      if (slot == 0) slot = (n == 1) ? FactorTable::kUnit : static_cast<std::uint32_t>(n);
    }
  }
  return FactorTable(lo, hi, std::move(spf));
}

Factorization factorize(u64 n, const FactorTable& table, bool allow_trial_fallback) {
  if (n == 0) throw PreconditionError("factorize: n must be >= 1");
  if (table.contains(n)) return table.factorize_in_range(n);
  if (!allow_trial_fallback)
    throw PreconditionError("factorize: " + std::to_string(n) + " outside table range [" +
                            std::to_string(table.lo()) + ", " + std::to_string(table.hi()) + ")");
  return factor_trial(n);
}

u64 r_two_squares(const Factorization& f) {
  u64 product = 1;
  for (const auto& [p, e] : f) {
    if (p % 4 == 3) {
      if (e % 2 == 1) return 0;
    } else if (p % 4 == 1) {
      product *= e + 1;
    }
  }
  return 4 * product;
}

u64 r_two_squares(u64 n) {
  if (n == 0) throw PreconditionError("r_two_squares: n must be >= 1");
  return r_two_squares(factor_trial(n));
}

u64 r_via_identity(u64 n) {
  if (n == 0) throw PreconditionError("r_via_identity: n must be >= 1");
  i64 sum = 0;
  for (u64 d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    sum += arith::chi_int(d);
    if (d != n / d) sum += arith::chi_int(n / d);
  }
  return static_cast<u64>(4 * sum);
}

i64 chi_divisor_sum(const Factorization& f) {
  i64 product = 1;
  for (const auto& [p, e] : f) {
    if (p % 4 == 1) {
      product *= static_cast<i64>(e) + 1;
    } else if (p % 4 == 3 && e % 2 == 1) {
      return 0;
    }
  }
  return product;
}

int g_indicator(u64 n, const Params& params) {
  const auto& ps = params.primes_y();
  return std::binary_search(ps.begin(), ps.end(), n) ? 1 : 0;
}

int h_indicator(u64 n, const Params& params) {
  if (n == 0) throw PreconditionError("h_indicator: n must be >= 1");
  for (const u64 p : params.primes_y())
    if (n % p == 0) return 0;
  return 1;
}

int f_enveloping(u64 n, const Params& params) {
  return g_indicator(n, params) + h_indicator(n, params);
}

}  // namespace linnik::sieve
