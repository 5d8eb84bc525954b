#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linnik/exact.hpp"
#include "linnik/options.hpp"
#include "linnik/sieve.hpp"

// Empirical checkers for the auxiliary estimates. Each computes a left-hand
// side exactly (or, past kExactSumLimit terms, with compensated summation)
// and pairs it with the right-hand-side shape evaluated with constant 1.
namespace linnik::lemmas {

using sieve::Params;

struct LemmaValue {
  double value = 0.0;
  // Present whenever the sum was accumulated exactly.
  std::optional<Rational> exact;
};

struct LemmaReport {
  std::string lemma_id;
  std::vector<std::pair<std::string, double>> inputs;
  double lhs = 0.0;
  std::optional<Rational> lhs_exact;
  double envelope = 0.0;
  // |lhs| / envelope
  double ratio = 0.0;
  std::vector<std::pair<std::string, double>> extras;
};

// gamma_alpha = alpha - alpha log alpha
double gamma_alpha(double alpha);

// sum_{p <= X} | sum_{d | p-1, sqrt(X) L^-omega < d < sqrt(X) L^omega} chi(d) |, L = log X.
u64 hooley1_lhs(u64 X, double omega, const ComputeOptions& options = {});
double hooley1_envelope(u64 X);

struct BrunTitchmarsh {
  u64 count;
  double bound;
  bool holds;
};

// pi(X; q, a) against 2X / (phi(q) log(2X/q)).
BrunTitchmarsh brun_titchmarsh_check(u64 X, u64 q, u64 a);
// Same, reusing an ascending list that contains every prime <= X.
BrunTitchmarsh brun_titchmarsh_check(std::span<const u64> primes, u64 X, u64 q, u64 a);

// Number of prime pairs (p1, p2) with p1 + r p2 = n; requires r < n/2.
u64 count_N(u64 n, u64 r);
double count_N_envelope(u64 n, u64 r);

// sum_{n < y, n = a (k)} f(n)
u64 f_progression_sum(u64 y, u64 k, u64 a, const Params& params);

// (1/y) sum_{n < y} f(n)
Rational estimate_B_exact(const Params& params, u64 y);
double estimate_B(const Params& params, u64 y);

// hist[k] = #{n <= y : Omega(n) = k}
std::vector<u64> omega_histogram(u64 y);
// sum_{n <= y} alpha^Omega(n) for alpha in [1/2, 7/4], exact in the double alpha.
Rational omega_power_sum_exact(u64 y, double alpha);
double omega_power_sum(u64 y, double alpha);

// sum 1/n over sqrt(y) L^-omega < n < sqrt(y) L^omega with Omega(n) <= alpha log log y,
// L = log y; 1/2 <= alpha < 1.
LemmaValue hooley13_sum(u64 y, double alpha, double omega);

// sum 1/n over n <= y, q | n, Omega(n) > alpha log log y - 1; 1 < alpha <= 3/2.
LemmaValue hooley13q_sum(u64 y, double alpha, u64 q);

// sum_{y <= l <= L, (l, ns) = 1} chi(l)/phi(rsl); requires (rs, n) = 1.
LemmaValue hooley14_partial(u64 r, u64 s, u64 n, double y, u64 L);

struct Hooley14Envelope {
  double r_term;      // loglog X * R_n(r, s, y)
  double sigma_term;  // loglog X * sigma_{-1}(s) sigma_{-1}(n, y) / (rs)
  double tail_term;   // (loglog X)^2 / (rsy)
  double total() const { return r_term + sigma_term + tail_term; }
};
Hooley14Envelope hooley14_envelope(u64 r, u64 s, u64 n, double y, u64 X);

// The double sums over h <= u, u/h < d < u (log X)^omega / h of
//   which = 1: R_n(h, d, u'/h)
//   which = 2: sigma_{-1}(d)/(hd) * sigma_{-1}(n, u'/h)
//   which = 3: (h/u) * 1/(hd)
// Selector 1 involves logarithms and is never exact.
LemmaValue hooley15_sums(double u, double u_prime, double omega, u64 n, int which, u64 X);
double hooley15_envelope(int which, u64 X);

// sum_{n <= X} 1/phi(n)
LemmaValue murty_sum(u64 X);

struct EFPair {
  u64 E;
  i64 F;
};

// Counts (E) and chi-weights (F) of d in (D, X/D) with (d, q) = 1 for which
// l(d, q) = CRT(1 mod d, a mod q) exists, is coprime to dq, and p = l (mod dq).
EFPair E_F_pq(u64 p, u64 q, const Params& params);

// Arguments for run_lemma; each checker reads only the fields it needs.
struct LemmaArgs {
  std::optional<u64> x;
  double A = 0.0;
  u64 a = 1;
  std::optional<double> d_exponent;
  double omega = 1.0;
  std::optional<double> alpha;
  std::optional<u64> q;
  std::optional<double> y;
  std::optional<u64> k;
  std::optional<u64> n;
  std::optional<u64> r;
  std::optional<u64> s;
  std::optional<u64> L;
  std::optional<double> u;
  std::optional<double> u_prime;
  std::optional<int> which;
  std::optional<u64> p;
};

// Ids: hooley1, brun-titchmarsh, count-n, f-progression, estimate-b,
// omega-power, hooley13, hooley13q, hooley14, hooley15, murty, epq.
const std::vector<std::string>& lemma_ids();
LemmaReport run_lemma(std::string_view id, const LemmaArgs& args, const ComputeOptions& options = {});

}  // namespace linnik::lemmas
