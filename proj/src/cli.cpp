#include "linnik/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "linnik/lemmas.hpp"
#include "linnik/scan.hpp"
#include "linnik/theorem.hpp"

namespace linnik::cli {

namespace {

using report::Cell;
using report::Report;

Cell cell(u64 v) { return Cell(static_cast<std::uint64_t>(v)); }
Cell cell(double v) { return Cell(v); }
Cell cell(std::string v) { return Cell(std::move(v)); }

u64 need_x(const RunConfig& c) {
  if (!c.x) throw UsageError(c.command + " requires --x");
  return *c.x;
}

ComputeOptions options_of(const RunConfig& c) {
  ComputeOptions o;
  o.threads = c.threads;
  o.cache_dir = c.cache_dir;
  if (c.segment_length) o.sieve.segment_length = *c.segment_length;
  return o;
}

Params params_of(const RunConfig& c) {
  Params p(need_x(c), c.A, c.a);
  if (c.override_exponent) p = p.with_d_exponent(*c.override_exponent);
  return p;
}

void add_theorem_params(Report& r, const Params& p) {
  r.params = {{"x", cell(p.X())}, {"A", cell(p.A())}, {"a", cell(p.a())}};
}

Report run_primes(const RunConfig& c) {
  const u64 X = need_x(c);
  Report r{"primes", {{"x", cell(X)}}, {{"x", "pi_x"}, {}}};
  r.table.rows.push_back({cell(X), cell(sieve::prime_count(X, options_of(c).sieve))});
  return r;
}

Report run_rsum(const RunConfig& c) {
  const u64 X = need_x(c);
  Report r{"rsum", {{"x", cell(X)}}, {{"x", "value"}, {}}};
  r.table.rows.push_back({cell(X), cell(sum_r_shifted_primes(X, options_of(c)))});
  return r;
}

Report run_discrepancy(const RunConfig& c, bool a_given) {
  const u64 X = need_x(c);
  if (!c.q) throw UsageError("discrepancy requires --q");
  Report r{"discrepancy",
           {{"x", cell(X)}, {"q", cell(*c.q)}},
           {{"q", "a", "weighted_count", "main_term", "discrepancy"}, {}}};
  std::vector<DiscrepancyRow> rows;
  if (a_given) {
    r.params.emplace_back("a", cell(c.a));
    rows.push_back(discrepancy(X, *c.q, c.a, options_of(c)));
  } else {
    rows = discrepancy_rows(X, *c.q, options_of(c));
  }
  for (const auto& row : rows)
    r.table.rows.push_back({cell(row.q), cell(row.a), cell(row.weighted_count),
                            cell(to_double(row.main_term)), cell(to_double(row.discrepancy))});
  return r;
}

Report run_bvsum(const RunConfig& c) {
  const Params p = params_of(c);
  Report r{"bvsum", {}, {{"x", "A", "a", "Q", "value"}, {}}};
  add_theorem_params(r, p);
  r.table.rows.push_back({cell(p.X()), cell(p.A()), cell(p.a()), cell(p.Q()), cell(bv_sum(p, options_of(c)))});
  return r;
}

Report run_decompose(const RunConfig& c) {
  const Params p = params_of(c);
  const DecompositionResult d = decompose(p, options_of(c));
  Report r{"decompose",
           {},
           {{"x", "A", "a", "Q", "D", "Y", "d_exponent", "d_overridden", "S1", "S2", "S3", "S4", "lhs",
             "ratio"},
            {}}};
  add_theorem_params(r, p);
  r.params.emplace_back("d_exponent", cell(p.d_exponent()));
  r.params.emplace_back("d_overridden", cell(std::string(p.d_overridden() ? "true" : "false")));
  r.table.rows.push_back({cell(p.X()), cell(p.A()), cell(p.a()), cell(p.Q()), cell(p.D()), cell(p.Y()),
                          cell(p.d_exponent()), cell(u64{p.d_overridden() ? 1u : 0u}), cell(d.s1()),
                          cell(d.s2()), cell(d.s3()), cell(d.s4()), cell(d.lhs_value()), cell(d.ratio())});
  return r;
}

Report run_constant(const RunConfig& c) {
  const LinnikConstant k = linnik_constant(c.tolerance, options_of(c).sieve);
  Report r{"constant", {{"tolerance", cell(c.tolerance)}}, {{"value", "prime_bound", "tail_bound"}, {}}};
  r.table.rows.push_back({cell(k.value), cell(k.prime_bound), cell(k.tail_bound)});
  return r;
}

Report run_theta0() {
  Report r{"theta0", {}, {{"theta0"}, {}}};
  r.table.rows.push_back({cell(theta0())});
  return r;
}

Report run_lemma_command(const RunConfig& c) {
  lemmas::LemmaArgs args;
  args.x = c.x;
  args.A = c.A;
  args.a = c.a;
  args.d_exponent = c.override_exponent;
  args.omega = c.omega;
  args.alpha = c.alpha;
  args.q = c.q;
  args.y = c.y;
  args.k = c.k;
  args.n = c.n;
  args.r = c.r;
  args.s = c.s;
  args.L = c.L;
  args.u = c.u;
  args.u_prime = c.u_prime;
  args.which = c.which;
  args.p = c.p;
  const lemmas::LemmaReport lr = lemmas::run_lemma(c.lemma_id, args, options_of(c));

  Report r{"lemma", {{"id", cell(lr.lemma_id)}}, {}};
  auto& cols = r.table.columns;
  cols = {"lemma", "lhs", "lhs_exact", "envelope", "ratio"};
  std::vector<Cell> row = {cell(lr.lemma_id), cell(lr.lhs),
                           cell(lr.lhs_exact ? to_string(*lr.lhs_exact) : std::string()),
                           cell(lr.envelope), cell(lr.ratio)};
  for (const auto& [name, value] : lr.inputs) {
    r.params.emplace_back(name, cell(value));
    cols.push_back(name);
    row.push_back(cell(value));
  }
  for (const auto& [name, value] : lr.extras) {
    cols.push_back(name);
    row.push_back(cell(value));
  }
  r.table.rows.push_back(std::move(row));
  return r;
}

Report run_scan(const RunConfig& c) {
  const auto grid = scan_grid(c.x_min, c.x_max, c.per_decade);
  const double constant = linnik_constant(c.tolerance, options_of(c).sieve).value;
  Report r{"scan",
           {{"x_min", cell(c.x_min)},
            {"x_max", cell(c.x_max)},
            {"per_decade", cell(u64{c.per_decade})},
            {"A", cell(c.A)},
            {"a", cell(c.a)},
            {"omega", cell(c.omega)},
            {"linnik_constant", cell(constant)}},
           {{"x", "rsum", "rsum_main", "rsum_ratio", "bvsum", "bv_envelope", "bv_ratio", "hooley1",
             "hooley1_envelope", "hooley1_ratio", "murty", "murty_ratio"},
            {}}};
  for (const u64 X : grid) {
    const ScanRow s = scan_point(X, c.A, c.a, c.omega, constant, options_of(c));
    r.table.rows.push_back({cell(s.x), cell(s.rsum), cell(s.rsum_main), cell(s.rsum_ratio), cell(s.bvsum),
                            cell(s.bv_envelope), cell(s.bv_ratio), cell(s.hooley1),
                            cell(s.hooley1_envelope), cell(s.hooley1_ratio), cell(s.murty),
                            cell(s.murty_ratio)});
  }
  return r;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"primes", "rsum",     "discrepancy", "bvsum", "decompose",
                                                 "constant", "theta0", "lemma",       "scan"};
  return names;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Linnik-prime discrepancy toolkit", "linnik"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string cache_dir;
  app.add_option("--x", c.x, "main range bound X");
  app.add_option("--A", c.A, "moduli exponent A (Q = (log X)^A)");
  app.add_option("--a", c.a, "fixed residue a");
  app.add_option("--override-exponent", c.override_exponent, "replace A + 14 in the exponent of D");
  app.add_option("--omega", c.omega, "window exponent omega");
  app.add_option("--alpha", c.alpha, "lemma exponent alpha");
  app.add_option("--q", c.q, "modulus q");
  app.add_option("--y", c.y, "lemma range bound y");
  app.add_option("--k", c.k, "modulus k");
  app.add_option("--n", c.n, "lemma integer n");
  app.add_option("--r", c.r, "lemma integer r");
  app.add_option("--s", c.s, "lemma integer s");
  app.add_option("--L", c.L, "partial-sum cutoff L");
  app.add_option("--u", c.u, "lemma bound u");
  app.add_option("--u-prime", c.u_prime, "lemma bound u'");
  app.add_option("--which", c.which, "sum selector 1..3");
  app.add_option("--p", c.p, "prime p");
  app.add_option("--tolerance", c.tolerance, "log-tail tolerance for the Linnik constant");
  app.add_option("--x-min", c.x_min, "scan: smallest X");
  app.add_option("--x-max", c.x_max, "scan: largest X");
  app.add_option("--per-decade", c.per_decade, "scan: grid points per decade");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache-dir", cache_dir, "directory for cached sieve segments");
  app.add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--segment-length", c.segment_length, "sieve segment length")->check(CLI::PositiveNumber);

  std::string lemma_id;
  for (const auto& name : commands()) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "lemma") sub->add_option("id", lemma_id, "lemma checker id")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  c.command = app.get_subcommands().front()->get_name();
  c.lemma_id = lemma_id;
  c.format = report::parse_format(format);
  if (!cache_dir.empty()) {
    c.cache_dir = cache_dir;
  } else if (const char* env = std::getenv("LINNIK_CACHE_DIR"); env && *env) {
    c.cache_dir = std::filesystem::path(env);
  }
  if (c.command == "discrepancy" && app.count("--a") == 0) c.a = 0;
  return c;
}

report::Report execute(const RunConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "primes") return run_primes(c);
  if (cmd == "rsum") return run_rsum(c);
  if (cmd == "discrepancy") return run_discrepancy(c, c.a != 0);
  if (cmd == "bvsum") return run_bvsum(c);
  if (cmd == "decompose") return run_decompose(c);
  if (cmd == "constant") return run_constant(c);
  if (cmd == "theta0") return run_theta0();
  if (cmd == "lemma") return run_lemma_command(c);
  if (cmd == "scan") return run_scan(c);
  throw UsageError("unknown command: " + cmd);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    err << "usage: linnik <command> [flags]; commands:";
    for (const auto& c : commands()) err << ' ' << c;
    err << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "linnik: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "linnik: " << e.what() << '\n';
    return kUsage;
  }

  std::string bytes;
  try {
    bytes = report::emit_report(execute(config), config.format);
  } catch (const UsageError& e) {
    err << "linnik: " << e.what() << '\n';
    return kUsage;
  } catch (const sieve::IoError& e) {
    err << "linnik: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "linnik: " << e.what() << '\n';
    return kPrecondition;
  }

  out << bytes;
  out.flush();
  if (!out) {
    err << "linnik: failed writing report\n";
    return kIo;
  }
  return kOk;
}

}  // namespace linnik::cli
