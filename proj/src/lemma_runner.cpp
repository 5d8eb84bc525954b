#include <cmath>
#include <string>

#include "linnik/arith.hpp"
#include "linnik/lemmas.hpp"

namespace linnik::lemmas {

namespace {

template <typename T>
T need(const std::optional<T>& value, const char* flag, std::string_view id) {
  if (!value) throw PreconditionError("lemma " + std::string(id) + " requires " + flag);
  return *value;
}

u64 need_integer(const std::optional<double>& value, const char* flag, std::string_view id) {
  const double v = need(value, flag, id);
  if (!(v >= 0) || std::floor(v) != v || v > 1e18)
    throw PreconditionError("lemma " + std::string(id) + ": " + flag + " must be a nonnegative integer");
  return static_cast<u64>(v);
}

double as_double(u64 v) { return static_cast<double>(v); }

LemmaValue from_exact_value(Rational q) {
  LemmaValue v;
  v.value = to_double(q);
  v.exact = std::move(q);
  return v;
}

void finish(LemmaReport& report) {
  if (!(report.envelope > 0)) throw PreconditionError("lemma envelope is not positive for these inputs");
  report.ratio = std::fabs(report.lhs) / report.envelope;
}

void set_lhs(LemmaReport& report, const LemmaValue& v) {
  report.lhs = v.value;
  report.lhs_exact = v.exact;
}

void set_lhs(LemmaReport& report, u64 v) {
  report.lhs = as_double(v);
  report.lhs_exact = Rational(mpz_class(static_cast<unsigned long>(v)));
}

Params params_from(const LemmaArgs& args, std::string_view id) {
  Params params(need(args.x, "--x", id), args.A, args.a);
  if (args.d_exponent) params = params.with_d_exponent(*args.d_exponent);
  return params;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "hooley1",  "brun-titchmarsh", "count-n",   "f-progression", "estimate-b", "omega-power",
      "hooley13", "hooley13q",       "hooley14",  "hooley15",      "murty",      "epq"};
  return ids;
}

LemmaReport run_lemma(std::string_view id, const LemmaArgs& args, const ComputeOptions& options) {
  LemmaReport r;
  r.lemma_id = std::string(id);

  if (id == "hooley1") {
    const u64 X = need(args.x, "--x", id);
    r.inputs = {{"x", as_double(X)}, {"omega", args.omega}};
    set_lhs(r, hooley1_lhs(X, args.omega, options));
    r.envelope = hooley1_envelope(X);
  } else if (id == "brun-titchmarsh") {
    const u64 X = need(args.x, "--x", id);
    const u64 q = need(args.q, "--q", id);
    r.inputs = {{"x", as_double(X)}, {"q", as_double(q)}, {"a", as_double(args.a)}};
    const auto bt = brun_titchmarsh_check(X, q, args.a);
    set_lhs(r, bt.count);
    r.envelope = bt.bound;
    r.extras = {{"holds", bt.holds ? 1.0 : 0.0}};
  } else if (id == "count-n") {
    const u64 n = need(args.n, "--n", id);
    const u64 rr = need(args.r, "--r", id);
    r.inputs = {{"n", as_double(n)}, {"r", as_double(rr)}};
    set_lhs(r, count_N(n, rr));
    r.envelope = count_N_envelope(n, rr);
  } else if (id == "f-progression") {
    const Params params = params_from(args, id);
    const u64 y = need_integer(args.y, "--y", id);
    const u64 k = need(args.k, "--k", id);
    r.inputs = {{"x", as_double(params.X())}, {"A", params.A()}, {"y", as_double(y)},
                {"k", as_double(k)},          {"a", as_double(args.a)}};
    set_lhs(r, f_progression_sum(y, k, args.a, params));
    const double lx = params.log_x();
    const double ll = params.loglog_x();
    r.envelope = as_double(y) * ll * ll / (as_double(arith::euler_phi(k)) * lx);
    r.extras = {{"Y", params.Y()}};
  } else if (id == "estimate-b") {
    const Params params = params_from(args, id);
    const u64 y = need_integer(args.y, "--y", id);
    r.inputs = {{"x", as_double(params.X())}, {"A", params.A()}, {"y", as_double(y)}};
    set_lhs(r, from_exact_value(estimate_B_exact(params, y)));
    const double ll = params.loglog_x();
    r.envelope = ll * ll / params.log_x();
    r.extras = {{"Y", params.Y()}};
  } else if (id == "omega-power") {
    const u64 y = need_integer(args.y, "--y", id);
    const double alpha = need(args.alpha, "--alpha", id);
    r.inputs = {{"y", as_double(y)}, {"alpha", alpha}};
    set_lhs(r, from_exact_value(omega_power_sum_exact(y, alpha)));
    r.envelope = as_double(y) * std::pow(std::log(2.0 * as_double(y)), alpha - 1.0);
  } else if (id == "hooley13") {
    const u64 y = need_integer(args.y, "--y", id);
    const double alpha = need(args.alpha, "--alpha", id);
    r.inputs = {{"y", as_double(y)}, {"alpha", alpha}, {"omega", args.omega}};
    set_lhs(r, hooley13_sum(y, alpha, args.omega));
    const double ly = std::log(as_double(y));
    r.envelope = std::pow(ly, gamma_alpha(alpha) - 1.0) * std::log(ly);
  } else if (id == "hooley13q") {
    const u64 y = need_integer(args.y, "--y", id);
    const double alpha = need(args.alpha, "--alpha", id);
    const u64 q = need(args.q, "--q", id);
    r.inputs = {{"y", as_double(y)}, {"alpha", alpha}, {"q", as_double(q)}};
    set_lhs(r, hooley13q_sum(y, alpha, q));
    const double ly = std::log(as_double(y));
    r.envelope = std::pow(alpha, factor_trial(q).big_omega()) / as_double(q) *
                 std::pow(ly, gamma_alpha(alpha)) * std::log(ly);
  } else if (id == "hooley14") {
    const u64 X = need(args.x, "--x", id);
    const u64 rr = need(args.r, "--r", id);
    const u64 s = need(args.s, "--s", id);
    const u64 n = need(args.n, "--n", id);
    const double y = need(args.y, "--y", id);
    const u64 L = need(args.L, "--L", id);
    r.inputs = {{"x", as_double(X)}, {"r", as_double(rr)}, {"s", as_double(s)},
                {"n", as_double(n)}, {"y", y},              {"L", as_double(L)}};
    const auto partial = hooley14_partial(rr, s, n, y, L);
    set_lhs(r, partial);
    const auto env = hooley14_envelope(rr, s, n, y, X);
    r.envelope = env.total();
    const auto next = hooley14_partial(rr, s, n, y, L + 4);
    double bracket_bound = 0.0;
    for (u64 l = L + 1; l <= L + 4; ++l)
      bracket_bound = std::max(bracket_bound, 1.0 / as_double(arith::euler_phi(rr * s * l)));
    r.extras = {{"r_term", env.r_term},
                {"sigma_term", env.sigma_term},
                {"tail_term", env.tail_term},
                {"partial_L_plus_4", next.value},
                {"bracket_gap", std::fabs(next.value - partial.value)},
                {"bracket_bound", 2.0 * bracket_bound}};
  } else if (id == "hooley15") {
    const u64 X = need(args.x, "--x", id);
    const double u = need(args.u, "--u", id);
    const double up = need(args.u_prime, "--u-prime", id);
    const u64 n = need(args.n, "--n", id);
    const int which = need(args.which, "--which", id);
    r.inputs = {{"x", as_double(X)}, {"u", u},          {"u_prime", up},
                {"omega", args.omega}, {"n", as_double(n)}, {"which", static_cast<double>(which)}};
    set_lhs(r, hooley15_sums(u, up, args.omega, n, which, X));
    r.envelope = hooley15_envelope(which, X);
  } else if (id == "murty") {
    const u64 X = need(args.x, "--x", id);
    r.inputs = {{"x", as_double(X)}};
    set_lhs(r, murty_sum(X));
    r.envelope = std::log(as_double(X));
  } else if (id == "epq") {
    const Params params = params_from(args, id);
    const u64 p = need(args.p, "--p", id);
    const u64 q = need(args.q, "--q", id);
    r.inputs = {{"x", as_double(params.X())}, {"A", params.A()}, {"a", as_double(params.a())},
                {"p", as_double(p)},          {"q", as_double(q)}};
    const EFPair ef = E_F_pq(p, q, params);
    set_lhs(r, ef.E);
    // E counts divisors of p - 1, so tau(p - 1) is its trivial ceiling.
    r.envelope = as_double(factor_trial(p - 1).divisor_count());
    r.extras = {{"F", static_cast<double>(ef.F)}, {"D", params.D()}};
  } else {
    throw PreconditionError("unknown lemma id: " + std::string(id));
  }
  finish(r);
  return r;
}

}  // namespace linnik::lemmas
