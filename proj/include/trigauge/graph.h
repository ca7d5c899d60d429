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

#ifndef TRIGAUGE_GRAPH_H_
#define TRIGAUGE_GRAPH_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace trigauge {

namespace detail {
struct GraphAccess;
}  // namespace detail

using Vertex = std::uint64_t;
using Label = std::int64_t;

// Raw (source, target) pairs as they appeared in the input, in line order.
// Labels are kept as written; `labels` holds every distinct label in
// ascending order, so a label's vertex index is its rank in that list.
struct EdgeList {
  std::vector<std::pair<Label, Label>> edges;
  std::vector<Label> labels;

  std::uint64_t n_vertices() const { return labels.size(); }
  // Throws InvalidArgument for a label that is not present.
  Vertex index_of(Label label) const;
};

// Sorted-row sparse pattern with no values; the building block for both the
// adjacency matrix and its triangular halves.
class CsrPattern {
 public:
  CsrPattern() : offsets_{0} {}
  CsrPattern(std::vector<std::uint64_t> offsets, std::vector<Vertex> columns);

  std::uint64_t n_rows() const { return offsets_.size() - 1; }
  std::uint64_t nnz() const { return columns_.size(); }
  std::span<const Vertex> row(Vertex r) const {
    return {columns_.data() + offsets_[r], columns_.data() + offsets_[r + 1]};
  }
  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const Vertex> columns() const { return columns_; }

  bool operator==(const CsrPattern&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> columns_;
};

// Undirected simple graph: symmetric adjacency, zero diagonal, strictly
// increasing columns per row. Immutable once built.
class CsrGraph {
 public:
  CsrGraph() = default;

  // Validates every canonical invariant; throws InvalidArgument otherwise.
  static CsrGraph FromCsr(std::vector<std::uint64_t> offsets,
                          std::vector<Vertex> columns);

  // Builds from unordered vertex pairs. Loops are dropped, duplicates and
  // reversed duplicates merged. Every endpoint must be < n_vertices.
  static CsrGraph FromPairs(std::uint64_t n_vertices,
                            std::vector<std::pair<Vertex, Vertex>> pairs);

  std::uint64_t n_vertices() const { return adj_.n_rows(); }
  std::uint64_t n_edges() const { return adj_.nnz() / 2; }
  std::uint64_t degree(Vertex v) const { return adj_.row(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.row(v); }
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const std::uint64_t> row_offsets() const { return adj_.offsets(); }
  std::span<const Vertex> column_indices() const { return adj_.columns(); }
  const CsrPattern& pattern() const { return adj_; }

  bool operator==(const CsrGraph&) const = default;

 private:
  explicit CsrGraph(CsrPattern adj) : adj_(std::move(adj)) {}
  friend struct detail::GraphAccess;

  CsrPattern adj_;
};

// Strictly lower (L) and strictly upper (U) halves of the adjacency matrix.
struct TriangularSplit {
  CsrPattern lower;
  CsrPattern upper;
};

// Vertex-by-edge incidence structure. Column j joins edge_endpoints[j].first
// and edge_endpoints[j].second, first < second, columns in lexicographic order.
struct IncidenceMatrix {
  std::uint64_t n_vertices = 0;
  std::uint64_t n_edges = 0;
  std::vector<std::pair<Vertex, Vertex>> edge_endpoints;
};

struct ParseOptions {
  // Accept a third column (edge weight) and discard it.
  bool allow_weight_column = true;
};

// Reads a whitespace separated edge list. Lines whose first non-blank
// character is '#' or '%' are comments. Throws ParseError.
EdgeList parse_edge_list(std::istream& in, const ParseOptions& options = {});
EdgeList parse_edge_list(std::string_view text,
                         const ParseOptions& options = {});

CsrGraph canonicalize(const EdgeList& edges);

TriangularSplit split_lower_upper(const CsrGraph& g);
CsrGraph merge_lower_upper(const TriangularSplit& split);

IncidenceMatrix build_incidence(const CsrGraph& g);

// perm[v] is the new index of vertex v. Throws InvalidArgument unless perm
// is a bijection on 0..n_vertices-1.
CsrGraph permute_vertices(const CsrGraph& g, std::span<const Vertex> perm);

// Writes "u\tv" per edge with u < v in sorted order, preceded by a single
// comment line giving the vertex and edge counts.
void export_edge_list(const CsrGraph& g, std::ostream& out);

}  // namespace trigauge

#endif  // TRIGAUGE_GRAPH_H_
