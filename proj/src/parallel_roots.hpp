#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "subcomp/vertex_set.hpp"

namespace subcomp::detail {

/// Runs `explore(child, stop)` for each root child on a small thread pool and
/// returns the first witness any worker reports. `explore` must poll `stop`
/// and give up once it is set.
template <typename Explore>
std::optional<VertexSet> race_children(const std::vector<VertexSet>& children, Explore&& explore) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::optional<VertexSet> found;

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                     children.size()));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        while (!stop.load(std::memory_order_relaxed)) {
          const std::size_t i = next.fetch_add(1);
          if (i >= children.size()) return;
          auto result = explore(children[i], stop);
          if (result) {
            std::lock_guard lock(mu);
            if (!found) found = std::move(result);
            stop = true;
          }
        }
      });
    }
  }
  return found;
}

}  // namespace subcomp::detail
