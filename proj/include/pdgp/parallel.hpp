#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pdgp {

/// 0 means "use the hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, runs `body(begin, end, acc)` on
/// each with a fresh accumulator, then merges the accumulators in chunk order.
/// The merge must be commutative and associative for the result to be
/// independent of the thread count.
template <typename Acc, typename Body, typename Merge>
Acc parallel_reduce(std::uint64_t total, unsigned threads, Acc init, Body body, Merge merge,
                    std::uint64_t min_chunk = std::uint64_t{1} << 14) {
  threads = resolve_threads(threads);
  const std::uint64_t max_workers = std::max<std::uint64_t>(1, total / min_chunk);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, max_workers));
  if (workers <= 1) {
    Acc acc = init;
    body(std::uint64_t{0}, total, acc);
    return acc;
  }

  std::vector<Acc> partial(workers, init);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Acc acc = init;
  for (auto& p : partial) merge(acc, p);
  return acc;
}

}  // namespace pdgp
