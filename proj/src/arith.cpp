#include "linnik/arith.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace linnik::arith {

namespace {

void require_positive(u64 n, const char* what) {
  if (n == 0) throw PreconditionError(std::string(what) + ": argument must be >= 1");
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
u64 mod_inverse(u64 a, u64 m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

}  // namespace

Residue::Residue(u64 value, u64 modulus) : value_(value), modulus_(modulus) {
  if (modulus == 0) throw PreconditionError("Residue: modulus must be >= 1");
  if (value >= modulus) throw PreconditionError("Residue: value must be < modulus");
}

Residue Residue::reduce(u64 value, u64 modulus) {
  if (modulus == 0) throw PreconditionError("Residue: modulus must be >= 1");
  return Residue(value % modulus, modulus);
}

CharValue chi(u64 n) {
  require_positive(n, "chi");
  return CharValue(chi_int(n));
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 n) {
  require_positive(n, "euler_phi");
  return euler_phi(factor_trial(n));
}

int moebius(const Factorization& f) {
  for (const auto& pp : f)
    if (pp.exponent > 1) return 0;
  return (f.size() % 2 == 0) ? 1 : -1;
}

int moebius(u64 n) {
  require_positive(n, "moebius");
  return moebius(factor_trial(n));
}

unsigned omega_big(u64 n) {
  require_positive(n, "omega_big");
  return factor_trial(n).big_omega();
}

std::optional<Residue> crt_l(Residue a1, Residue a2) {
  const u64 d = a1.modulus();
  const u64 q = a2.modulus();
  const u64 g = std::gcd(d, q);
  const u64 r1 = a1.value();
  const u64 r2 = a2.value();
  if (r1 % g != r2 % g) return std::nullopt;

  const unsigned __int128 lcm = static_cast<unsigned __int128>(d / g) * q;
  if (lcm > static_cast<unsigned __int128>(UINT64_MAX))
    throw PreconditionError("crt_l: lcm(d, q) exceeds 64 bits");
  const u64 q_red = q / g;
  // l = r1 + d*k with d*k = r2 - r1 (mod q); divide through by g.
  const __int128 diff = static_cast<__int128>(r2) - static_cast<__int128>(r1);
  __int128 rhs = (diff / static_cast<__int128>(g)) % static_cast<__int128>(q_red);
  if (rhs < 0) rhs += q_red;
  const u64 inv = mod_inverse((d / g) % q_red, q_red);
  const unsigned __int128 k =
      (static_cast<unsigned __int128>(rhs) * inv) % static_cast<unsigned __int128>(q_red);
  const unsigned __int128 l = (static_cast<unsigned __int128>(r1) + d * k) % lcm;
  return Residue(static_cast<u64>(l), static_cast<u64>(lcm));
}

Rational sigma_minus1_exact(const Factorization& f, std::optional<double> y) {
  const u64 n = f.value();
  // 1/d = (n/d)/n
  mpz_class num(0);
  std::vector<u64> divs;
  divisors(f, divs);
  for (u64 d : divs) {
    if (y && !(static_cast<double>(d) > *y)) continue;
    num += mpz_class(static_cast<unsigned long>(n / d));
  }
  Rational out(num, mpz_class(static_cast<unsigned long>(n)));
  out.canonicalize();
  return out;
}

Rational sigma_minus1_exact(u64 n, std::optional<double> y) {
  require_positive(n, "sigma_minus1");
  return sigma_minus1_exact(factor_trial(n), y);
}

double sigma_minus1(u64 n, std::optional<double> y) { return to_double(sigma_minus1_exact(n, y)); }

u64 tau_trunc(const Factorization& f, double y) {
  std::vector<u64> divs;
  divisors(f, divs);
  u64 count = 0;
  for (u64 d : divs)
    if (static_cast<double>(d) <= y) ++count;
  return count;
}

u64 tau_trunc(u64 n, double y) {
  require_positive(n, "tau_trunc");
  return tau_trunc(factor_trial(n), y);
}

namespace {

u64 tau_k_rec(u64 n, unsigned k, std::map<std::pair<u64, unsigned>, u64>& memo) {
  if (k == 1 || n == 1) return 1;
  const auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  u64 total = 0;
  for (u64 d : divisors(factor_trial(n))) total += tau_k_rec(d, k - 1, memo);
  memo.emplace(key, total);
  return total;
}

}  // namespace

u64 tau_k(u64 n, unsigned k) {
  require_positive(n, "tau_k");
  if (k == 0) throw PreconditionError("tau_k: k must be >= 1");
  std::map<std::pair<u64, unsigned>, u64> memo;
  return tau_k_rec(n, k, memo);
}

double r_envelope(u64 n, u64 r, u64 s, double y) {
  require_positive(n, "r_envelope");
  require_positive(r, "r_envelope");
  require_positive(s, "r_envelope");
  if (!(y > 0)) throw PreconditionError("r_envelope: y must be > 0");
  const double tau2_s = static_cast<double>(factor_trial(s).divisor_count());
  return std::log(2.0 * y) / y * tau2_s / (static_cast<double>(r) * static_cast<double>(s)) *
         static_cast<double>(tau_trunc(n, y));
}

}  // namespace linnik::arith
