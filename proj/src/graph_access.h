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

#ifndef TRIGAUGE_SRC_GRAPH_ACCESS_H_
#define TRIGAUGE_SRC_GRAPH_ACCESS_H_

#include <utility>

#include "trigauge/graph.h"

namespace trigauge::detail {

// Library-internal constructor for patterns already known to be canonical.
struct GraphAccess {
  static CsrGraph Adopt(CsrPattern adj) { return CsrGraph(std::move(adj)); }
};

}  // namespace trigauge::detail

#endif  // TRIGAUGE_SRC_GRAPH_ACCESS_H_
