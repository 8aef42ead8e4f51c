#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "mpl/op_counter.hpp"

namespace mpl {

/// Splits [0, count) into `threads` contiguous chunks and runs
/// body(chunk_index, begin, end) for each, in parallel when threads > 1.
/// Chunk boundaries depend only on (count, threads), so callers that store
/// per-chunk results and concatenate them in chunk order get output that is
/// independent of scheduling. Op counts from workers are added to the
/// caller's OpCounter. The first exception thrown by a worker is rethrown.
template <class Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(count, 1));
  auto bounds = [&](unsigned c) { return count * c / threads; };
  if (threads == 1) {
    body(0U, std::uint64_t{0}, count);
    return;
  }
  std::vector<OpCounts> worker_counts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned c = 0; c < threads; ++c) {
    pool.emplace_back([&, c] {
      OpCounter counter;
      try {
        body(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
      worker_counts[c] = counter.counts();
    });
  }
  for (auto& t : pool) t.join();
  if (auto* active = detail::active_counts())
    for (const auto& wc : worker_counts) *active += wc;
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace mpl
