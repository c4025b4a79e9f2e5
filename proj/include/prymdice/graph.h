// Copyright 2026 The Authors.
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

// Multigraphs with oriented, labeled edges (dual graphs of nodal curves) and
// involutions acting on them.

#ifndef PRYMDICE_GRAPH_H_
#define PRYMDICE_GRAPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prymdice/exactmat.h"

namespace prymdice {

struct Edge {
  std::string label;
  std::size_t tail = 0;
  std::size_t head = 0;

  bool is_loop() const { return tail == head; }
  std::size_t other_end(std::size_t v) const { return v == tail ? head : tail; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Parallel edges and loops are allowed. Vertex names and edge labels are
// unique; indices are assigned in insertion order and never change.
class MultiGraph {
 public:
  std::size_t add_vertex(std::string name);
  std::size_t add_edge(std::string label, std::size_t tail, std::size_t head);
  std::size_t add_edge(std::string label, std::string_view tail,
                       std::string_view head);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view label) const;
  // Throwing lookups (std::invalid_argument naming the missing key).
  std::size_t vertex_index(std::string_view name) const;
  std::size_t edge_index(std::string_view label) const;

  // Loops count twice.
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> incident_edges(std::size_t v) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
};

// Thrown when maps handed to GraphInvolution are not an incidence-compatible
// involution. Carries the offending vertex or edge so parsers can point at the
// line that introduced it.
class InvolutionError : public std::invalid_argument {
 public:
  enum class Kind { kVertex, kEdge };
  InvolutionError(Kind kind, std::size_t index, const std::string& message)
      : std::invalid_argument(message), kind_(kind), index_(index) {}
  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

// An automorphism of order at most two. edge_sign(e) is +1 when the tail of
// e maps to the tail of its image and -1 when it maps to the head.
class GraphInvolution {
 public:
  static GraphInvolution identity(const MultiGraph& g);

  // Signs are inferred for non-loop edges. A loop's image is a loop, so its
  // sign cannot be read off the incidence; `loop_signs` supplies it (default
  // +1). Providing a sign for a non-loop edge that disagrees with the
  // incidence is an error.
  GraphInvolution(const MultiGraph& g, std::vector<std::size_t> vertex_map,
                  std::vector<std::size_t> edge_map,
                  const std::map<std::size_t, int>& explicit_signs = {});

  std::size_t vertex_image(std::size_t v) const { return vertex_map_[v]; }
  std::size_t edge_image(std::size_t e) const { return edge_map_[e]; }
  int edge_sign(std::size_t e) const { return edge_sign_[e]; }
  std::size_t vertex_count() const { return vertex_map_.size(); }
  std::size_t edge_count() const { return edge_map_.size(); }
  bool is_fixed_point_free() const;
  bool is_identity() const;

  friend bool operator==(const GraphInvolution&,
                         const GraphInvolution&) = default;

 private:
  GraphInvolution() = default;

  std::vector<std::size_t> vertex_map_;
  std::vector<std::size_t> edge_map_;
  std::vector<int> edge_sign_;
};

// One half-integer coefficient per edge, in the graph's edge order.
class CochainVector {
 public:
  CochainVector() = default;
  explicit CochainVector(std::size_t size) : coefficients_(size) {}
  CochainVector(std::initializer_list<HalfInt> values)
      : coefficients_(values) {}
  explicit CochainVector(std::vector<HalfInt> values)
      : coefficients_(std::move(values)) {}

  static CochainVector from_integers(const std::vector<Integer>& values);
  // Halves an integer vector: result[i] = twice[i] / 2.
  static CochainVector from_twice(const std::vector<Integer>& twice);

  std::size_t size() const { return coefficients_.size(); }
  HalfInt& operator[](std::size_t i) { return coefficients_[i]; }
  const HalfInt& operator[](std::size_t i) const { return coefficients_[i]; }
  const std::vector<HalfInt>& coefficients() const { return coefficients_; }

  bool is_integral() const;
  bool is_zero() const;
  // Throws std::domain_error if some coefficient is not an integer.
  std::vector<Integer> integer_coefficients() const;
  std::vector<Integer> twice_coefficients() const;
  std::string to_string(const MultiGraph& g) const;

  CochainVector operator-() const;
  friend CochainVector operator+(const CochainVector& a,
                                 const CochainVector& b);
  friend CochainVector operator-(const CochainVector& a,
                                 const CochainVector& b);
  friend bool operator==(const CochainVector&, const CochainVector&) = default;

 private:
  std::vector<HalfInt> coefficients_;
};

// Coefficient of edge_image(e) in the result is edge_sign(e) times the
// coefficient of e in v. Throws std::invalid_argument on a size mismatch.
CochainVector apply_involution(const GraphInvolution& iota,
                               const CochainVector& v);

// Connected components (edges undirected), each sorted, ordered by smallest
// vertex.
std::vector<std::vector<std::size_t>> components(const MultiGraph& g);

// Collapse vertex and edge orbits of iota. Orbit names join member names
// with '|', smallest index first.
MultiGraph quotient_graph(const MultiGraph& g, const GraphInvolution& iota);

struct GraphFile {
  MultiGraph graph;
  std::optional<GraphInvolution> involution;
};

// Line format:
//   vertex <name>
//   edge <label> <tail> <head>
//   iota_v <a> <b>           vertex swap (fixed vertex: a == b)
//   iota_e <e> <f> [+|-]     edge swap; the sign is only needed for loops
// Anything unmentioned by an iota line is fixed. `#` starts a comment.
GraphFile parse_graph(std::string_view text);
std::string serialize_graph(const MultiGraph& g,
                            const GraphInvolution* iota = nullptr);

}  // namespace prymdice

#endif  // PRYMDICE_GRAPH_H_
