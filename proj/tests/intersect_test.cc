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

#include "trigauge/intersect.h"

#include <algorithm>
#include <iterator>
#include <vector>

#include "doctest.h"
#include "trigauge/rng.h"

namespace trigauge {
namespace {

std::vector<Vertex> random_sorted_set(CounterRng& rng, std::size_t size,
                                      Vertex universe) {
  std::vector<Vertex> v;
  for (std::size_t i = 0; i < size; ++i) v.push_back(rng.next() % universe);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::uint64_t reference(const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out.size();
}

TEST_CASE("intersection of small fixed lists") {
  const std::vector<Vertex> a{1, 3, 5, 7, 9};
  const std::vector<Vertex> b{2, 3, 4, 9, 10};
  const std::vector<Vertex> none;
  CHECK(intersect_merge(a, b) == 2);
  CHECK(intersect_merge(a, none) == 0);
  CHECK(intersect_merge(a, a) == 5);
  RowMarker marker(11);
  marker.load(a);
  CHECK(marker.count(b) == 2);
  CHECK(marker.count(none) == 0);
  CHECK(marker.contains(7));
  CHECK_FALSE(marker.contains(8));
  marker.clear(a);
  CHECK(marker.count(a) == 0);
}

TEST_CASE("merge and marker probe agree on random and skewed lists") {
  CounterRng rng(42);
  RowMarker marker(5000);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto small_size = 1 + rng.next() % 20;
    const auto large_size =
        trial % 2 ? small_size : small_size * (1 + rng.next() % 200);
    const Vertex universe = 1 + rng.next() % 5000;
    const auto a = random_sorted_set(rng, small_size, universe);
    const auto b = random_sorted_set(rng, large_size, universe);
    const auto expected = reference(a, b);
    CHECK(intersect_merge(a, b) == expected);
    CHECK(intersect_merge(b, a) == expected);
    marker.load(b);
    CHECK(marker.count(a) == expected);
    marker.clear(b);
    marker.load(a);
    CHECK(marker.count(b) == expected);
    marker.clear(a);
  }
}

TEST_CASE("prefer_probe follows the policy and threshold") {
  CHECK_FALSE(prefer_probe(100, 1, IntersectPolicy::kMergeOnly, 1));
  CHECK(prefer_probe(1, 1, IntersectPolicy::kProbeOnly, 64));
  CHECK(prefer_probe(65, 1, IntersectPolicy::kAdaptive, 64));
  CHECK_FALSE(prefer_probe(64, 1, IntersectPolicy::kAdaptive, 64));
  CHECK_FALSE(prefer_probe(5, 5, IntersectPolicy::kAdaptive, 1));
  CHECK(prefer_probe(6, 5, IntersectPolicy::kAdaptive, 1));
}

}  // namespace
}  // namespace trigauge
