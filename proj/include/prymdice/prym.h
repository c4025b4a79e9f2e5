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

// Degeneration data of a Prym variety attached to a graph double cover: the
// anti-invariant projection, its image lattice X-, the edge multipliers and
// the resulting dicing system.

#ifndef PRYMDICE_PRYM_H_
#define PRYMDICE_PRYM_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "prymdice/exactmat.h"
#include "prymdice/graph.h"
#include "prymdice/homology.h"
#include "prymdice/system.h"

namespace prymdice {

// A sublattice of (1/2 Z)^E given by a row basis.
struct HalfLattice {
  RationalMatrix basis;

  std::size_t rank() const { return basis.rows(); }
  // Twice the basis: a basis of 2L inside Z^E.
  IntMatrix doubled() const { return basis.doubled(); }
};

// (h - iota(h)) / 2. Throws std::invalid_argument unless h is integral.
CochainVector pi_minus(const GraphInvolution& iota, const CochainVector& h);

// Basis rows are the nonzero rows of the Hermite form of 2 pi-(h) over the
// fundamental cycles h, halved. Rank zero gives a 0 x |E| basis.
HalfLattice x_minus(const MultiGraph& g, const GraphInvolution& iota,
                    const std::optional<std::vector<std::size_t>>& tree =
                        std::nullopt);

// Lattice generated by arbitrary half-integer vectors, in the same canonical
// form as x_minus.
HalfLattice lattice_from_vectors(const std::vector<CochainVector>& vectors,
                                 std::size_t edges);

// m_j in {0, 1, 2}: 2 when edge coordinate j maps X- onto (1/2)Z, 1 when onto
// Z, 0 when it vanishes on X-.
std::vector<int> multipliers(const HalfLattice& x);

std::size_t torus_rank(const MultiGraph& g, const GraphInvolution& iota);

struct VologodskyWitness {
  std::vector<std::size_t> subgraph0;  // vertices, ascending
  std::vector<std::size_t> subgraph1;
  std::vector<std::size_t> connecting_edges;
};

struct VologodskyResult {
  bool passed = true;
  std::optional<VologodskyWitness> witness;
  std::size_t invariant_connected_sets = 0;
  std::size_t pairs_examined = 0;
};

// Searches all pairs of disjoint vertex sets that are unions of iota orbits
// and induce connected subgraphs, for a pair joined by four or more edges.
// The witness is the first such pair ordered by (bitmask of subgraph0,
// bitmask of subgraph1) with subgraph0 < subgraph1. Throws
// std::invalid_argument above 24 vertex orbits.
VologodskyResult vologodsky_check(const MultiGraph& g,
                                  const GraphInvolution& iota);

struct PrymDicing {
  HalfLattice lattice;
  std::vector<int> multipliers;
  // Column j is m_j z_j in coordinates of the lattice basis, one column per
  // edge, before any reduction.
  IntMatrix lattice_coordinates;
  ColumnReduction reduction;     // zero columns dropped, +- pairs merged
  std::optional<StandardForm> standard;
  // The reduced system, written over its greedy column basis when that basis
  // is unimodular (otherwise the reduced lattice coordinates).
  UnimodularSystem system;
  bool family_independent = true;
  std::optional<VologodskyWitness> witness;
};

// Throws std::invalid_argument when X- is zero. A failed Vologodsky check
// does not throw; it clears family_independent and keeps the witness.
PrymDicing prym_dicing_system(const MultiGraph& g, const GraphInvolution& iota,
                              const std::optional<std::vector<std::size_t>>&
                                  tree = std::nullopt);

}  // namespace prymdice

#endif  // PRYMDICE_PRYM_H_
