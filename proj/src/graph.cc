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

#include "trigauge/graph.h"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>
#include <string>

#include "graph_access.h"
#include "trigauge/error.h"

namespace trigauge {

Vertex EdgeList::index_of(Label label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) {
    throw InvalidArgument("unknown vertex label " + std::to_string(label));
  }
  return static_cast<Vertex>(it - labels.begin());
}

CsrPattern::CsrPattern(std::vector<std::uint64_t> offsets,
                       std::vector<Vertex> columns)
    : offsets_(std::move(offsets)), columns_(std::move(columns)) {
  if (offsets_.empty() || offsets_.front() != 0 ||
      offsets_.back() != columns_.size()) {
    throw InvalidArgument("row offsets do not describe the column array");
  }
  for (std::size_t r = 0; r + 1 < offsets_.size(); ++r) {
    if (offsets_[r] > offsets_[r + 1]) {
      throw InvalidArgument("row offsets are not monotone");
    }
  }
}

bool CsrGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_vertices() || v >= n_vertices()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

CsrGraph CsrGraph::FromCsr(std::vector<std::uint64_t> offsets,
                           std::vector<Vertex> columns) {
  CsrPattern adj(std::move(offsets), std::move(columns));
  const std::uint64_t n = adj.n_rows();
  for (Vertex r = 0; r < n; ++r) {
    auto row = adj.row(r);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Vertex c = row[k];
      if (c >= n) throw InvalidArgument("column index out of range");
      if (c == r) throw InvalidArgument("self-loop on the diagonal");
      if (k > 0 && row[k - 1] >= c) {
        throw InvalidArgument("row columns are not strictly increasing");
      }
      auto other = adj.row(c);
      if (!std::binary_search(other.begin(), other.end(), r)) {
        throw InvalidArgument("adjacency is not symmetric");
      }
    }
  }
  return CsrGraph(std::move(adj));
}

CsrGraph CsrGraph::FromPairs(std::uint64_t n_vertices,
                             std::vector<std::pair<Vertex, Vertex>> pairs) {
  // Orient every pair u < v, then sort and dedup once.
  std::erase_if(pairs, [](const auto& e) { return e.first == e.second; });
  for (auto& [u, v] : pairs) {
    if (u >= n_vertices || v >= n_vertices) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<std::uint64_t> offsets(n_vertices + 1, 0);
  for (const auto& [u, v] : pairs) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::uint64_t r = 0; r < n_vertices; ++r) offsets[r + 1] += offsets[r];

  std::vector<Vertex> columns(offsets.back());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  // Pairs are sorted by (u, v), so each row receives its lower entries in
  // ascending order, then its upper entries in ascending order.
  for (const auto& [u, v] : pairs) columns[cursor[v]++] = u;
  for (const auto& [u, v] : pairs) columns[cursor[u]++] = v;
  return CsrGraph(CsrPattern(std::move(offsets), std::move(columns)));
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view next_field(std::string_view& line) {
  std::size_t i = 0;
  while (i < line.size() && is_blank(line[i])) ++i;
  std::size_t j = i;
  while (j < line.size() && !is_blank(line[j])) ++j;
  auto field = line.substr(i, j - i);
  line.remove_prefix(j);
  return field;
}

bool parse_integer(std::string_view field, Label& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() &&
         !field.empty();
}

bool parse_number(std::string_view field) {
  double value = 0;
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size() &&
         !field.empty();
}

}  // namespace

EdgeList parse_edge_list(std::string_view text, const ParseOptions& options) {
  EdgeList result;
  std::uint64_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size()) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::string_view fields[4];
    int n_fields = 0;
    for (; n_fields < 4; ++n_fields) {
      fields[n_fields] = next_field(line);
      if (fields[n_fields].empty()) break;
    }
    const int max_fields = options.allow_weight_column ? 3 : 2;
    if (n_fields < 2 || n_fields > max_fields) {
      throw ParseError(line_no, "expected 2" +
                                    std::string(max_fields == 3 ? " or 3" : "") +
                                    " fields, found " +
                                    (n_fields == 4 ? std::string("more")
                                                   : std::to_string(n_fields)));
    }
    Label src = 0, dst = 0;
    if (!parse_integer(fields[0], src) || !parse_integer(fields[1], dst)) {
      throw ParseError(line_no, "vertex label is not an integer");
    }
    if (n_fields == 3 && !parse_number(fields[2])) {
      throw ParseError(line_no, "weight is not a number");
    }
    result.edges.emplace_back(src, dst);
  }
  if (result.edges.empty()) throw ParseError(0, "no edges");

  result.labels.reserve(result.edges.size() * 2);
  for (const auto& [s, t] : result.edges) {
    result.labels.push_back(s);
    result.labels.push_back(t);
  }
  std::sort(result.labels.begin(), result.labels.end());
  result.labels.erase(std::unique(result.labels.begin(), result.labels.end()),
                      result.labels.end());
  result.labels.shrink_to_fit();
  return result;
}

EdgeList parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed to read edge list");
  return parse_edge_list(std::string_view(text), options);
}

CsrGraph canonicalize(const EdgeList& edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.edges.size());
  for (const auto& [s, t] : edges.edges) {
    pairs.emplace_back(edges.index_of(s), edges.index_of(t));
  }
  return CsrGraph::FromPairs(edges.n_vertices(), std::move(pairs));
}

TriangularSplit split_lower_upper(const CsrGraph& g) {
  const std::uint64_t n = g.n_vertices();
  std::vector<std::uint64_t> lower_offsets(n + 1, 0);
  std::vector<std::uint64_t> upper_offsets(n + 1, 0);
  std::vector<Vertex> lower_cols;
  std::vector<Vertex> upper_cols;
  lower_cols.reserve(g.n_edges());
  upper_cols.reserve(g.n_edges());
  for (Vertex r = 0; r < n; ++r) {
    auto row = g.neighbors(r);
    auto mid = std::lower_bound(row.begin(), row.end(), r);
    lower_cols.insert(lower_cols.end(), row.begin(), mid);
    upper_cols.insert(upper_cols.end(), mid, row.end());
    lower_offsets[r + 1] = lower_cols.size();
    upper_offsets[r + 1] = upper_cols.size();
  }
  return {CsrPattern(std::move(lower_offsets), std::move(lower_cols)),
          CsrPattern(std::move(upper_offsets), std::move(upper_cols))};
}

CsrGraph merge_lower_upper(const TriangularSplit& split) {
  const std::uint64_t n = split.lower.n_rows();
  if (split.upper.n_rows() != n || split.lower.nnz() != split.upper.nnz()) {
    throw InvalidArgument("lower and upper halves have different shapes");
  }
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<Vertex> columns;
  columns.reserve(2 * split.lower.nnz());
  for (Vertex r = 0; r < n; ++r) {
    auto lo = split.lower.row(r);
    auto up = split.upper.row(r);
    columns.insert(columns.end(), lo.begin(), lo.end());
    columns.insert(columns.end(), up.begin(), up.end());
    offsets[r + 1] = columns.size();
  }
  return CsrGraph::FromCsr(std::move(offsets), std::move(columns));
}

IncidenceMatrix build_incidence(const CsrGraph& g) {
  IncidenceMatrix inc;
  inc.n_vertices = g.n_vertices();
  inc.n_edges = g.n_edges();
  inc.edge_endpoints.reserve(inc.n_edges);
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    auto row = g.neighbors(u);
    for (auto it = std::upper_bound(row.begin(), row.end(), u);
         it != row.end(); ++it) {
      inc.edge_endpoints.emplace_back(u, *it);
    }
  }
  return inc;
}

CsrGraph permute_vertices(const CsrGraph& g, std::span<const Vertex> perm) {
  const std::uint64_t n = g.n_vertices();
  if (perm.size() != n) {
    throw InvalidArgument("permutation length differs from vertex count");
  }
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) {
      throw InvalidArgument("permutation is not a bijection");
    }
    seen[p] = true;
  }
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets[perm[v] + 1] = g.degree(v);
  for (Vertex r = 0; r < n; ++r) offsets[r + 1] += offsets[r];
  std::vector<Vertex> columns(offsets.back());
  for (Vertex v = 0; v < n; ++v) {
    auto out = columns.begin() + static_cast<std::ptrdiff_t>(offsets[perm[v]]);
    auto end = out;
    for (Vertex w : g.neighbors(v)) *end++ = perm[w];
    std::sort(out, end);
  }
  return detail::GraphAccess::Adopt(
      CsrPattern(std::move(offsets), std::move(columns)));
}

void export_edge_list(const CsrGraph& g, std::ostream& out) {
  out << "# n_vertices=" << g.n_vertices() << " n_edges=" << g.n_edges()
      << '\n';
  std::string buffer;
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    auto row = g.neighbors(u);
    for (auto it = std::upper_bound(row.begin(), row.end(), u);
         it != row.end(); ++it) {
      buffer += std::to_string(u);
      buffer += '\t';
      buffer += std::to_string(*it);
      buffer += '\n';
    }
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
  if (!out) throw IoError("failed to write edge list");
}

}  // namespace trigauge
