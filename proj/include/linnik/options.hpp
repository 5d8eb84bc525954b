#pragma once

#include <filesystem>
#include <optional>

#include "linnik/sieve.hpp"

namespace linnik {

// Execution knobs shared by the bulk computations. Results never depend on
// `threads`: work is split into fixed segments and merged in segment order.
struct ComputeOptions {
  unsigned threads = 1;
  sieve::SieveConfig sieve;
  std::optional<std::filesystem::path> cache_dir;
};

}  // namespace linnik
