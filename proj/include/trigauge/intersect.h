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

#ifndef TRIGAUGE_INTERSECT_H_
#define TRIGAUGE_INTERSECT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "trigauge/graph.h"

namespace trigauge {

enum class IntersectPolicy {
  kAdaptive,   // merge, or probe when one list is skew_threshold x longer
  kMergeOnly,
  kProbeOnly,
};

// Two-pointer merge over strictly increasing lists.
inline std::uint64_t intersect_merge(std::span<const Vertex> a,
                                     std::span<const Vertex> b) {
  std::uint64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Dense membership bitmap over vertex ids, loaded with one row at a time.
// Probing a list against it costs one bit test per element.
class RowMarker {
 public:
  explicit RowMarker(std::uint64_t n_vertices)
      : words_((n_vertices + 63) / 64, 0) {}

  void load(std::span<const Vertex> row) {
    for (Vertex v : row) words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  // Must be given the row that was loaded.
  void clear(std::span<const Vertex> row) {
    for (Vertex v : row) words_[v >> 6] = 0;
  }
  bool contains(Vertex v) const { return words_[v >> 6] >> (v & 63) & 1; }
  std::uint64_t count(std::span<const Vertex> list) const {
    std::uint64_t hits = 0;
    for (Vertex v : list) hits += contains(v);
    return hits;
  }

 private:
  std::vector<std::uint64_t> words_;
};

inline constexpr std::uint64_t kDefaultSkewThreshold = 1;

// True when the longer list should be probed rather than merged.
inline bool prefer_probe(std::size_t longer, std::size_t shorter,
                         IntersectPolicy policy,
                         std::uint64_t skew_threshold) {
  switch (policy) {
    case IntersectPolicy::kMergeOnly:
      return false;
    case IntersectPolicy::kProbeOnly:
      return true;
    case IntersectPolicy::kAdaptive:
      break;
  }
  return longer > skew_threshold * shorter;
}

}  // namespace trigauge

#endif  // TRIGAUGE_INTERSECT_H_
