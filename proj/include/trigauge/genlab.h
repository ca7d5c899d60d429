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

#ifndef TRIGAUGE_GENLAB_H_
#define TRIGAUGE_GENLAB_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trigauge/graph.h"

namespace trigauge {

enum class GraphModel { kErdosRenyi, kKronPower, kStochasticKron };

std::string_view to_string(GraphModel model);
// Accepts "er", "kron", "skron" and the long names. Throws InvalidArgument.
GraphModel parse_graph_model(std::string_view tag);

// Graph500 initiator probabilities.
inline constexpr std::array<double, 4> kGraph500Initiator = {0.57, 0.19, 0.19,
                                                             0.05};

struct GenSpec {
  GraphModel model = GraphModel::kErdosRenyi;
  // Erdos-Renyi.
  std::uint64_t n = 0;
  double p = 0.0;
  // Kronecker power; seed_graph is required for this model.
  std::optional<CsrGraph> seed_graph;
  unsigned power = 1;
  // Stochastic Kronecker: row-major 2x2 quadrant probabilities.
  std::array<double, 4> initiator = kGraph500Initiator;
  unsigned scale = 0;
  std::uint64_t edge_factor = 16;

  std::uint64_t rng_seed = 0;
};

// Refuses Kronecker powers with more stored adjacency entries than this.
inline constexpr std::uint64_t kDefaultKronEntryBudget = std::uint64_t{1}
                                                         << 31;

CsrGraph gen_erdos_renyi(std::uint64_t n, double p, std::uint64_t seed);

CsrGraph gen_kron_power(const CsrGraph& seed_graph, unsigned power,
                        std::uint64_t entry_budget = kDefaultKronEntryBudget);

CsrGraph gen_stochastic_kron(const std::array<double, 4>& initiator,
                             unsigned scale, std::uint64_t edge_factor,
                             std::uint64_t seed);

// Dispatches on spec.model after validating the fields that model uses.
CsrGraph generate(const GenSpec& spec);

}  // namespace trigauge

#endif  // TRIGAUGE_GENLAB_H_
