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

// Loopless multigraphs up to isomorphism, by orderly generation.
//
// A graph on V vertices is coded by its multiplicity vector over vertex pairs
// (i, j), i < j, in colex order: (0,1), (0,2), (1,2), (0,3), ... The
// canonical code of an isomorphism class is its lexicographically largest
// code. Children are formed by adding one edge at or after the last nonzero
// position, and only canonical children are kept.

#ifndef PRYMDICE_MULTIGRAPH_ENUM_H_
#define PRYMDICE_MULTIGRAPH_ENUM_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "prymdice/graph.h"

namespace prymdice {

using MultigraphCode = std::vector<std::uint8_t>;

std::size_t pair_count(std::size_t vertices);
std::size_t pair_index(std::size_t i, std::size_t j);  // i < j

bool is_canonical_code(const MultigraphCode& code, std::size_t vertices);

// All isomorphism classes on exactly `vertices` vertices (isolated vertices
// allowed) with `edges` edges, as canonical codes in increasing order.
std::vector<MultigraphCode> enumerate_codes(std::size_t vertices,
                                            std::size_t edges);

bool code_is_connected(const MultigraphCode& code, std::size_t vertices);

// Vertices are named v0, v1, ...; edges e1, e2, ... in pair order.
MultiGraph graph_from_code(const MultigraphCode& code, std::size_t vertices);

// Caches connected classes per (vertices, edges). Not thread-safe.
class MultigraphCatalog {
 public:
  const std::vector<MultigraphCode>& connected(std::size_t vertices,
                                               std::size_t edges);

  // Every loopless multigraph with `edges` edges, no isolated vertices and
  // |V| - c == rank, built as a multiset of connected pieces with at least
  // two vertices each (rank 0 gives only the empty graph). `visit` returns
  // false to stop early. Returns the number of graphs visited.
  std::size_t for_each_graph(std::size_t edges, std::size_t rank,
                             const std::function<bool(const MultiGraph&)>& visit);

 private:
  // For each vertex count, codes of every edge count up to the largest one
  // requested so far.
  struct Level {
    std::size_t max_edges = 0;
    std::vector<std::vector<MultigraphCode>> connected_by_edges;
  };
  std::map<std::size_t, Level> levels_;
};

// Disjoint union; vertex and edge names are regenerated as v0.. and e1..
MultiGraph disjoint_union(const std::vector<const MultiGraph*>& parts);

}  // namespace prymdice

#endif  // PRYMDICE_MULTIGRAPH_ENUM_H_
