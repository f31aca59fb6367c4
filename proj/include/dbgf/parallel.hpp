#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dbgf {

/// 0 means "use every available core".
inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, runs `body(begin, end)` on each
/// chunk in its own thread, and returns the per-chunk results in range order.
template <typename Body>
auto map_chunks(std::uint64_t count, unsigned workers, Body body) {
  using Result = decltype(body(std::uint64_t{}, std::uint64_t{}));
  workers = resolve_workers(workers);
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = body(0, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = count * c / chunks;
      const std::uint64_t end = count * (c + 1) / chunks;
      threads.emplace_back([&, c, begin, end] {
        try {
          results[c] = body(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace dbgf
