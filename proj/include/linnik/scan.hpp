#pragma once

#include <vector>

#include "linnik/options.hpp"

namespace linnik {

// Raw values and envelope ratios at one X of a growth-rate sweep.
struct ScanRow {
  u64 x;
  u64 rsum;
  double rsum_main;  // C X / log X with the Linnik constant C
  double rsum_ratio;
  double bvsum;
  double bv_envelope;  // X (log log X)^7 / (log X)^(1 + theta0)
  double bv_ratio;
  u64 hooley1;
  double hooley1_envelope;
  double hooley1_ratio;
  double murty;
  double murty_ratio;  // murty / log X
};

// x_min * 10^(i / per_decade), rounded to integers, up to x_max; duplicates dropped.
std::vector<u64> scan_grid(u64 x_min, u64 x_max, unsigned per_decade);

ScanRow scan_point(u64 X, double A, u64 a, double omega, double linnik_c,
                   const ComputeOptions& options = {});

}  // namespace linnik
