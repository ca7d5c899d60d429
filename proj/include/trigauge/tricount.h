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

#ifndef TRIGAUGE_TRICOUNT_H_
#define TRIGAUGE_TRICOUNT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trigauge/graph.h"
#include "trigauge/intersect.h"

namespace trigauge {

enum class Algorithm {
  kAdj2,       // sum(A^2 .* A) / 6
  kLu,         // sum((L U) .* A) / 2
  kIncidence,  // nnz(A E) / 3
  kBrute,      // triple enumeration over a dense adjacency bitmap
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kAdj2, Algorithm::kLu, Algorithm::kIncidence,
    Algorithm::kBrute};

std::string_view to_string(Algorithm algorithm);
// Accepts "adj2", "lu", "incidence", "brute". Throws InvalidArgument.
Algorithm parse_algorithm(std::string_view tag);

struct TriangleCount {
  std::uint64_t count = 0;
  Algorithm algorithm = Algorithm::kAdj2;
  // Pre-division aggregate: sum of C for adj2 and lu, nnz(C) for incidence,
  // and the count itself for brute.
  std::uint64_t aggregate = 0;
  std::uint64_t divisor = 1;
};

inline constexpr std::uint64_t kDefaultOracleLimit = 2000;

struct CountOptions {
  unsigned workers = 1;
  IntersectPolicy policy = IntersectPolicy::kAdaptive;
  std::uint64_t skew_threshold = kDefaultSkewThreshold;
  std::uint64_t oracle_limit = kDefaultOracleLimit;
};

TriangleCount count_adj2(const CsrGraph& g, const CountOptions& options = {});

// Throws InvalidArgument when `split` was not derived from `g`.
TriangleCount count_lu(const CsrGraph& g, const TriangularSplit& split,
                       const CountOptions& options = {});

// Throws InvalidArgument when `inc` was not derived from `g`.
TriangleCount count_incidence(const CsrGraph& g, const IncidenceMatrix& inc,
                              const CountOptions& options = {});

// Verification oracle. Throws OracleLimitExceeded above options.oracle_limit
// vertices.
TriangleCount count_brute(const CsrGraph& g, const CountOptions& options = {});

// A kernel with its auxiliary structures (split or incidence) already built
// and checked, so that run() performs only the counting work.
class PreparedKernel {
 public:
  PreparedKernel(const CsrGraph& g, Algorithm algorithm,
                 CountOptions options = {});

  TriangleCount run() const;
  Algorithm algorithm() const { return algorithm_; }
  const CsrGraph& graph() const { return *graph_; }

 private:
  const CsrGraph* graph_;
  Algorithm algorithm_;
  CountOptions options_;
  std::optional<TriangularSplit> split_;
  std::optional<IncidenceMatrix> incidence_;
};

// Runs the given algorithm, building any auxiliary structure it needs.
TriangleCount count_triangles(const CsrGraph& g, Algorithm algorithm,
                              const CountOptions& options = {});

}  // namespace trigauge

#endif  // TRIGAUGE_TRICOUNT_H_
