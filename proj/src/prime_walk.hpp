#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "linnik/options.hpp"

namespace linnik::detail {

// Runs task(i) for i in [0, count) on up to `threads` workers.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Visits every prime p <= X together with the factorization of p - 1.
// Segment boundaries depend only on the sieve segment length, and partial
// accumulators are merged in segment order, so the result is independent of
// the thread count.
template <typename Acc, typename Make, typename Body, typename Merge>
Acc reduce_shifted_primes(u64 X, const ComputeOptions& options, Make make, Body body, Merge merge) {
  sieve::validate(options.sieve);
  // Each segment's table also holds lo - 1.
  const u64 budget = options.sieve.table_budget;
  const u64 len = std::min(options.sieve.segment_length, budget > 1 ? budget - 1 : u64{1});
  std::vector<std::pair<u64, u64>> segments;
  for (u64 lo = 2; lo <= X; lo += len) segments.emplace_back(lo, std::min(X + 1, lo + len));

  std::vector<std::optional<Acc>> partial(segments.size());
  parallel_for(segments.size(), options.threads, [&](std::size_t i) {
    const auto [lo, hi] = segments[i];
    const auto table = sieve::factor_table_cached(lo - 1, hi, options.sieve, options.cache_dir);
    Acc acc = make();
    for (u64 p = lo; p < hi; ++p) {
      if (!table.is_prime(p)) continue;
      body(acc, p, table.factorize_in_range(p - 1));
    }
    partial[i] = std::move(acc);
  });

  Acc out = make();
  for (auto& part : partial) merge(out, *part);
  return out;
}

}  // namespace linnik::detail
