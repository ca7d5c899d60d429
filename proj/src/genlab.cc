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

#include "trigauge/genlab.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "graph_access.h"
#include "trigauge/error.h"
#include "trigauge/rng.h"

namespace trigauge {

std::string_view to_string(GraphModel model) {
  switch (model) {
    case GraphModel::kErdosRenyi:
      return "erdos_renyi";
    case GraphModel::kKronPower:
      return "kron_power";
    case GraphModel::kStochasticKron:
      return "stochastic_kron";
  }
  return "unknown";
}

GraphModel parse_graph_model(std::string_view tag) {
  if (tag == "er" || tag == "erdos_renyi") return GraphModel::kErdosRenyi;
  if (tag == "kron" || tag == "kron_power") return GraphModel::kKronPower;
  if (tag == "skron" || tag == "stochastic_kron") {
    return GraphModel::kStochasticKron;
  }
  throw InvalidArgument("unknown graph model '" + std::string(tag) + "'");
}

CsrGraph gen_erdos_renyi(std::uint64_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (p == 1.0) {
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex w = 0; w < v; ++w) pairs.emplace_back(w, v);
    }
  } else if (p > 0.0 && n > 1) {
    // Geometric skipping over the pairs (v, w), w < v, in row-major order:
    // the gap to the next included pair is Geometric(p).
    CounterRng rng(seed);
    const double log_q = std::log1p(-p);
    std::uint64_t v = 1;
    std::uint64_t w = 0;
    bool first = true;
    for (;;) {
      const double r = rng.uniform();
      const double gap = std::floor(std::log1p(-r) / log_q);
      if (gap >= static_cast<double>(n) * static_cast<double>(n)) break;
      auto skip = static_cast<std::uint64_t>(gap) + (first ? 0 : 1);
      first = false;
      w += skip;
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v >= n) break;
      pairs.emplace_back(w, v);
    }
  }
  return CsrGraph::FromPairs(n, std::move(pairs));
}

namespace {

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace

CsrGraph gen_kron_power(const CsrGraph& seed_graph, unsigned power,
                        std::uint64_t entry_budget) {
  if (power < 1) throw InvalidArgument("Kronecker power must be >= 1");
  const std::uint64_t seed_n = seed_graph.n_vertices();
  const std::uint64_t seed_nnz = seed_graph.column_indices().size();
  std::uint64_t n = 1;
  std::uint64_t nnz = 1;
  for (unsigned i = 0; i < power; ++i) {
    if (!checked_mul(n, seed_n, n) || !checked_mul(nnz, seed_nnz, nnz)) {
      throw InvalidArgument("Kronecker power overflows 64-bit sizes");
    }
  }
  if (nnz > entry_budget) {
    throw InvalidArgument("Kronecker power needs " + std::to_string(nnz) +
                          " adjacency entries, budget is " +
                          std::to_string(entry_budget));
  }

  // Row (a, b) of P ⊗ S holds columns c * n_S + d for c in N_P(a), d in
  // N_S(b); iterating c then d ascending yields a sorted row. The diagonal
  // stays zero because c != a.
  CsrPattern current = seed_graph.pattern();
  for (unsigned step = 1; step < power; ++step) {
    const std::uint64_t rows = current.n_rows() * seed_n;
    std::vector<std::uint64_t> offsets(rows + 1, 0);
    std::vector<Vertex> columns;
    columns.reserve(current.nnz() * seed_nnz);
    for (Vertex a = 0; a < current.n_rows(); ++a) {
      for (Vertex b = 0; b < seed_n; ++b) {
        for (Vertex c : current.row(a)) {
          for (Vertex d : seed_graph.neighbors(b)) {
            columns.push_back(c * seed_n + d);
          }
        }
        offsets[a * seed_n + b + 1] = columns.size();
      }
    }
    current = CsrPattern(std::move(offsets), std::move(columns));
  }
  return detail::GraphAccess::Adopt(std::move(current));
}

CsrGraph gen_stochastic_kron(const std::array<double, 4>& initiator,
                             unsigned scale, std::uint64_t edge_factor,
                             std::uint64_t seed) {
  double sum = 0.0;
  for (double q : initiator) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw InvalidArgument("initiator probabilities must lie in [0, 1]");
    }
    sum += q;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidArgument("initiator probabilities must sum to 1");
  }
  if (scale > 40) throw InvalidArgument("scale must be <= 40");
  const std::uint64_t n = std::uint64_t{1} << scale;
  std::uint64_t samples = 0;
  if (!checked_mul(n, edge_factor, samples)) {
    throw InvalidArgument("edge count overflows 64 bits");
  }

  const double ab = initiator[0] + initiator[1];
  const double abc = ab + initiator[2];
  CounterRng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(samples);
  for (std::uint64_t e = 0; e < samples; ++e) {
    Vertex u = 0;
    Vertex v = 0;
    for (unsigned level = 0; level < scale; ++level) {
      const double r = rng.uniform();
      const Vertex row_bit = r >= ab ? 1 : 0;
      const Vertex col_bit =
          (r >= initiator[0] && r < ab) || r >= abc ? 1 : 0;
      u = (u << 1) | row_bit;
      v = (v << 1) | col_bit;
    }
    pairs.emplace_back(u, v);
  }
  return CsrGraph::FromPairs(n, std::move(pairs));
}

CsrGraph generate(const GenSpec& spec) {
  switch (spec.model) {
    case GraphModel::kErdosRenyi:
      return gen_erdos_renyi(spec.n, spec.p, spec.rng_seed);
    case GraphModel::kKronPower:
      if (!spec.seed_graph) {
        throw InvalidArgument("Kronecker power needs a seed graph");
      }
      return gen_kron_power(*spec.seed_graph, spec.power);
    case GraphModel::kStochasticKron:
      return gen_stochastic_kron(spec.initiator, spec.scale, spec.edge_factor,
                                 spec.rng_seed);
  }
  throw InvalidArgument("unknown graph model");
}

}  // namespace trigauge
