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

#include "trigauge/tricount.h"

#include <algorithm>
#include <string>
#include <vector>

#include "trigauge/error.h"
#include "trigauge/parallel.h"

namespace trigauge {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAdj2:
      return "adj2";
    case Algorithm::kLu:
      return "lu";
    case Algorithm::kIncidence:
      return "incidence";
    case Algorithm::kBrute:
      return "brute";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view tag) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == tag) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(tag) + "'");
}

namespace {

constexpr Vertex kNoVertex = ~Vertex{0};

TriangleCount finish(Algorithm algorithm, std::uint64_t aggregate,
                     std::uint64_t divisor) {
  if (aggregate % divisor != 0) {
    // Cannot happen on a canonical graph; guards against corrupted input.
    throw Error(std::string(to_string(algorithm)) + " aggregate " +
                std::to_string(aggregate) + " is not divisible by " +
                std::to_string(divisor));
  }
  return {aggregate / divisor, algorithm, aggregate, divisor};
}

// Degree order with ties broken by id. Each mirrored pair of mask positions
// is evaluated once, at the endpoint that ranks higher.
bool outranks(std::uint64_t deg_a, Vertex a, std::uint64_t deg_b, Vertex b) {
  return deg_a > deg_b || (deg_a == deg_b && a > b);
}

// |long_row ∩ short_row| where long_row is the row currently owned by the
// caller. The marker is loaded lazily, at most once per row.
struct RowIntersector {
  RowMarker marker;
  bool loaded = false;

  std::uint64_t count(std::span<const Vertex> long_row,
                      std::span<const Vertex> short_row,
                      const CountOptions& o) {
    if (short_row.empty()) return 0;
    if (!prefer_probe(long_row.size(), short_row.size(), o.policy,
                      o.skew_threshold)) {
      return intersect_merge(long_row, short_row);
    }
    if (!loaded) {
      marker.load(long_row);
      loaded = true;
    }
    return marker.count(short_row);
  }

  void release(std::span<const Vertex> long_row) {
    if (loaded) marker.clear(long_row);
    loaded = false;
  }
};

// Sum over mask positions (i, j) of a symmetric product P(i, j) =
// |row(i) ∩ row(j)|, walking the adjacency for the mask.
std::uint64_t masked_symmetric_sum(const CsrGraph& g, const CsrPattern& rows,
                                   const CountOptions& o) {
  const std::uint64_t n = g.n_vertices();
  return parallel_sum(
      n, o.workers, [n] { return RowIntersector{RowMarker(n)}; },
      [&](RowIntersector& scratch, std::uint64_t i) {
        auto ri = rows.row(i);
        std::uint64_t row_sum = 0;
        for (Vertex j : g.neighbors(i)) {
          auto rj = rows.row(j);
          if (!outranks(ri.size(), i, rj.size(), j)) continue;
          row_sum += 2 * scratch.count(ri, rj, o);
        }
        scratch.release(ri);
        return row_sum;
      });
}

// C = A^2 .* A: C(i, j) = |N(i) ∩ N(j)| where A(i, j) = 1, zero elsewhere,
// so only positions under the mask are computed.
std::uint64_t adj2_aggregate(const CsrGraph& g, const CountOptions& o) {
  return masked_symmetric_sum(g, g.pattern(), o);
}

// B = L U with U = L^T gives B(i, j) = |L(i,:) ∩ L(j,:)|; C = A .* B.
std::uint64_t lu_aggregate(const CsrGraph& g, const TriangularSplit& split,
                           const CountOptions& o) {
  return masked_symmetric_sum(g, split.lower, o);
}

// Column j of C = A E is nonzero at row i exactly when i is adjacent to both
// endpoints of edge j, so nnz(C) sums common-neighbor counts over edges.
// Columns are visited grouped by their higher-ranked endpoint, whose row is
// kept in the marker across the group.
std::uint64_t incidence_aggregate(const CsrGraph& g,
                                  const IncidenceMatrix& inc,
                                  const CountOptions& o) {
  const std::uint64_t n = g.n_vertices();
  const std::uint64_t m = inc.n_edges;
  auto owner = [&](std::uint64_t e) {
    const auto& [x, y] = inc.edge_endpoints[e];
    return outranks(g.degree(x), x, g.degree(y), y) ? x : y;
  };
  std::vector<std::uint64_t> start(n + 1, 0);
  for (std::uint64_t e = 0; e < m; ++e) ++start[owner(e) + 1];
  for (std::uint64_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::uint64_t> order(m);
  for (std::uint64_t e = 0; e < m; ++e) order[start[owner(e)]++] = e;

  struct Scratch {
    RowMarker marker;
    Vertex loaded = kNoVertex;
  };
  return parallel_sum(
      m, o.workers, [n] { return Scratch{RowMarker(n)}; },
      [&](Scratch& s, std::uint64_t k) -> std::uint64_t {
        const std::uint64_t e = order[k];
        const auto& [x, y] = inc.edge_endpoints[e];
        const Vertex big = owner(e);
        auto long_row = g.neighbors(big);
        auto short_row = g.neighbors(big == x ? y : x);
        if (short_row.empty()) return 0;
        if (!prefer_probe(long_row.size(), short_row.size(), o.policy,
                          o.skew_threshold)) {
          return intersect_merge(long_row, short_row);
        }
        if (s.loaded != big) {
          if (s.loaded != kNoVertex) s.marker.clear(g.neighbors(s.loaded));
          s.marker.load(long_row);
          s.loaded = big;
        }
        return s.marker.count(short_row);
      },
      4096);
}

void check_split(const CsrGraph& g, const TriangularSplit& split) {
  const std::uint64_t n = g.n_vertices();
  if (split.lower.n_rows() != n || split.upper.n_rows() != n ||
      split.lower.nnz() != g.n_edges() || split.upper.nnz() != g.n_edges()) {
    throw InvalidArgument("triangular split does not match the graph");
  }
  for (Vertex r = 0; r < n; ++r) {
    auto row = g.neighbors(r);
    auto lo = split.lower.row(r);
    auto up = split.upper.row(r);
    if (lo.size() + up.size() != row.size() ||
        !std::equal(lo.begin(), lo.end(), row.begin()) ||
        !std::equal(up.begin(), up.end(), row.begin() + lo.size()) ||
        (!lo.empty() && lo.back() >= r) || (!up.empty() && up.front() <= r)) {
      throw InvalidArgument("triangular split does not match the graph");
    }
  }
}

void check_incidence(const CsrGraph& g, const IncidenceMatrix& inc) {
  if (inc.n_vertices != g.n_vertices() || inc.n_edges != g.n_edges() ||
      inc.edge_endpoints.size() != inc.n_edges) {
    throw InvalidArgument("incidence matrix does not match the graph");
  }
  // Columns must enumerate the upper triangle of A in row-major order.
  std::uint64_t e = 0;
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    auto row = g.neighbors(u);
    for (auto it = std::upper_bound(row.begin(), row.end(), u);
         it != row.end(); ++it, ++e) {
      if (inc.edge_endpoints[e] != std::pair<Vertex, Vertex>(u, *it)) {
        throw InvalidArgument("incidence matrix does not match the graph");
      }
    }
  }
}

}  // namespace

TriangleCount count_adj2(const CsrGraph& g, const CountOptions& options) {
  return finish(Algorithm::kAdj2, adj2_aggregate(g, options), 6);
}

TriangleCount count_lu(const CsrGraph& g, const TriangularSplit& split,
                       const CountOptions& options) {
  check_split(g, split);
  return finish(Algorithm::kLu, lu_aggregate(g, split, options), 2);
}

TriangleCount count_incidence(const CsrGraph& g, const IncidenceMatrix& inc,
                              const CountOptions& options) {
  check_incidence(g, inc);
  return finish(Algorithm::kIncidence, incidence_aggregate(g, inc, options),
                3);
}

TriangleCount count_brute(const CsrGraph& g, const CountOptions& options) {
  const std::uint64_t n = g.n_vertices();
  if (n > options.oracle_limit) {
    throw OracleLimitExceeded("brute-force oracle refuses " +
                              std::to_string(n) + " vertices (limit " +
                              std::to_string(options.oracle_limit) + ")");
  }
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) adjacent[u][v] = true;
  }
  std::uint64_t count = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!adjacent[i][j]) continue;
      for (Vertex k = j + 1; k < n; ++k) {
        if (adjacent[i][k] && adjacent[j][k]) ++count;
      }
    }
  }
  return {count, Algorithm::kBrute, count, 1};
}

PreparedKernel::PreparedKernel(const CsrGraph& g, Algorithm algorithm,
                               CountOptions options)
    : graph_(&g), algorithm_(algorithm), options_(options) {
  switch (algorithm) {
    case Algorithm::kLu:
      split_ = split_lower_upper(g);
      check_split(g, *split_);
      break;
    case Algorithm::kIncidence:
      incidence_ = build_incidence(g);
      check_incidence(g, *incidence_);
      break;
    case Algorithm::kBrute:
      if (g.n_vertices() > options.oracle_limit) {
        throw OracleLimitExceeded(
            "brute-force oracle refuses " + std::to_string(g.n_vertices()) +
            " vertices (limit " + std::to_string(options.oracle_limit) + ")");
      }
      break;
    case Algorithm::kAdj2:
      break;
  }
}

TriangleCount PreparedKernel::run() const {
  switch (algorithm_) {
    case Algorithm::kAdj2:
      return count_adj2(*graph_, options_);
    case Algorithm::kLu:
      return finish(Algorithm::kLu, lu_aggregate(*graph_, *split_, options_),
                    2);
    case Algorithm::kIncidence:
      return finish(Algorithm::kIncidence,
                    incidence_aggregate(*graph_, *incidence_, options_), 3);
    case Algorithm::kBrute:
      return count_brute(*graph_, options_);
  }
  throw InvalidArgument("unknown algorithm");
}

TriangleCount count_triangles(const CsrGraph& g, Algorithm algorithm,
                              const CountOptions& options) {
  return PreparedKernel(g, algorithm, options).run();
}

}  // namespace trigauge
