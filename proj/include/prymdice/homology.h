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

// First homology of a multigraph through fundamental cycles, and the dicing
// of H1 cut out by the edge coordinates.

#ifndef PRYMDICE_HOMOLOGY_H_
#define PRYMDICE_HOMOLOGY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "prymdice/exactmat.h"
#include "prymdice/graph.h"
#include "prymdice/system.h"

namespace prymdice {

std::size_t betti_number(const MultiGraph& g);

struct CycleBasis {
  std::vector<std::size_t> tree_edges;    // ascending edge indices
  std::vector<std::size_t> cotree_edges;  // one per basis cycle, ascending
  // Row i is the fundamental cycle of cotree_edges[i], with coefficient +1 on
  // that edge.
  IntMatrix coefficients;

  std::size_t size() const { return cotree_edges.size(); }
  CochainVector cycle(std::size_t i) const;
  std::vector<CochainVector> cycles() const;
};

// The default spanning forest is grown breadth-first from the lowest
// unvisited vertex, scanning incident edges in label order. A supplied tree
// must be a spanning forest (std::invalid_argument otherwise).
CycleBasis cycle_basis(const MultiGraph& g,
                       const std::optional<std::vector<std::size_t>>& tree =
                           std::nullopt);
std::vector<std::size_t> default_spanning_forest(const MultiGraph& g);

struct CographicDicing {
  CycleBasis basis;
  ColumnReduction reduction;  // maps edges to system columns
  UnimodularSystem system;
};

// Columns are the edge coordinates restricted to H1, written in the
// fundamental cycle basis. Bridges (zero columns) are dropped and columns
// equal up to sign are merged. Throws std::invalid_argument on a forest.
CographicDicing cographic_dicing_system(
    const MultiGraph& g,
    const std::optional<std::vector<std::size_t>>& tree = std::nullopt);

// Zero boundary test. Works on half-integer vectors too, although only
// integral cycles are meaningful here.
bool is_cycle(const MultiGraph& g, const CochainVector& v);

}  // namespace prymdice

#endif  // PRYMDICE_HOMOLOGY_H_
