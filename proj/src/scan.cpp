#include "linnik/scan.hpp"

#include <cmath>

#include "linnik/lemmas.hpp"
#include "linnik/theorem.hpp"

namespace linnik {

std::vector<u64> scan_grid(u64 x_min, u64 x_max, unsigned per_decade) {
  if (x_min < 16 || x_max < x_min) throw PreconditionError("scan: need 16 <= x_min <= x_max");
  if (per_decade == 0) throw PreconditionError("scan: points per decade must be >= 1");
  std::vector<u64> grid;
  for (unsigned i = 0;; ++i) {
    const double x = static_cast<double>(x_min) * std::pow(10.0, static_cast<double>(i) / per_decade);
    const auto xi = static_cast<u64>(std::llround(x));
    if (xi > x_max) break;
    if (grid.empty() || grid.back() != xi) grid.push_back(xi);
  }
  return grid;
}

ScanRow scan_point(u64 X, double A, u64 a, double omega, double linnik_c,
                   const ComputeOptions& options) {
  const Params params(X, A, a);
  const double x = static_cast<double>(X);
  const double lx = params.log_x();
  const double ll = params.loglog_x();

  ScanRow row{};
  row.x = X;
  row.rsum = sum_r_shifted_primes(X, options);
  row.rsum_main = linnik_c * x / lx;
  row.rsum_ratio = static_cast<double>(row.rsum) / row.rsum_main;
  row.bvsum = bv_sum(params, options);
  row.bv_envelope = x * std::pow(ll, 7) / std::pow(lx, 1.0 + theta0());
  row.bv_ratio = row.bvsum / row.bv_envelope;
  row.hooley1 = lemmas::hooley1_lhs(X, omega, options);
  row.hooley1_envelope = lemmas::hooley1_envelope(X);
  row.hooley1_ratio = static_cast<double>(row.hooley1) / row.hooley1_envelope;
  row.murty = lemmas::murty_sum(X).value;
  row.murty_ratio = row.murty / lx;
  return row;
}

}  // namespace linnik
