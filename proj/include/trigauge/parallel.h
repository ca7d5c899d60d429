// Copyright 2026 The trigauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIGAUGE_PARALLEL_H_
#define TRIGAUGE_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace trigauge {

// Sums body(scratch, i) over [0, n) using `workers` threads, where each
// worker owns one scratch object from make_scratch(). Items are handed out in
// chunks from a shared counter; partial sums are combined with integer
// addition, so the total does not depend on the worker count or schedule.
template <typename MakeScratch, typename Body>
std::uint64_t parallel_sum(std::uint64_t n, unsigned workers,
                           MakeScratch make_scratch, Body body,
                           std::uint64_t chunk = 256) {
  workers = std::max(1u, workers);
  if (workers == 1 || n <= chunk) {
    auto scratch = make_scratch();
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < n; ++i) total += body(scratch, i);
    return total;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto scratch = make_scratch();
        std::uint64_t local = 0;
        for (;;) {
          const std::uint64_t begin = next.fetch_add(chunk);
          if (begin >= n) break;
          const std::uint64_t end = std::min(n, begin + chunk);
          for (std::uint64_t i = begin; i < end; ++i) {
            local += body(scratch, i);
          }
        }
        partial[w] = local;
      });
    }
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

template <typename Body>
std::uint64_t parallel_sum(std::uint64_t n, unsigned workers, Body body,
                           std::uint64_t chunk = 256) {
  struct None {};
  return parallel_sum(
      n, workers, [] { return None{}; },
      [&](None&, std::uint64_t i) { return body(i); }, chunk);
}

}  // namespace trigauge

#endif  // TRIGAUGE_PARALLEL_H_
