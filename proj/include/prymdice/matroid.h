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

// Small matroids (at most 20 elements) stored as explicit independence
// tables over bitmasks.

#ifndef PRYMDICE_MATROID_H_
#define PRYMDICE_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "prymdice/exactmat.h"
#include "prymdice/graph.h"

namespace prymdice {

using ElementSet = std::uint32_t;

inline constexpr std::size_t kMaxMatroidElements = 20;

class Matroid {
 public:
  // Column matroid of m. Throws std::invalid_argument above 20 columns.
  static Matroid from_matrix(const IntMatrix& m);
  // `bases` must be the complete, nonempty list of bases.
  static Matroid from_bases(std::size_t size, std::vector<ElementSet> bases);
  // Cycle matroid M(G): bases are spanning forests.
  static Matroid cycle_matroid(const MultiGraph& g);
  // Bond matroid M*(G): bases are complements of spanning forests.
  static Matroid bond_matroid(const MultiGraph& g);

  std::size_t size() const { return size_; }
  std::size_t rank() const { return rank_; }
  ElementSet ground_set() const { return (ElementSet{1} << size_) - 1; }

  const std::vector<ElementSet>& bases() const { return bases_; }
  bool is_basis(ElementSet s) const;
  bool is_independent(ElementSet s) const { return independent_[s]; }
  std::size_t rank_of(ElementSet s) const { return rank_table_[s]; }

  const std::vector<ElementSet>& circuits() const { return circuits_; }
  bool is_circuit(ElementSet s) const { return circuit_flag_[s]; }
  // Cocircuits, i.e. circuits of the dual, computed on first use.
  const std::vector<ElementSet>& cocircuits() const;

  Matroid dual() const;
  // Restriction to `elements`, relabeled 0..k-1 in increasing order.
  Matroid restrict(ElementSet elements) const;

  std::vector<std::size_t> loops() const;
  std::vector<std::size_t> coloops() const;
  // Connected components (each as an element set), ordered by smallest
  // element. Loops and coloops form singleton components.
  std::vector<ElementSet> components() const;

  // Per-element invariant: number of circuits and of cocircuits of each size
  // containing the element.
  std::vector<std::size_t> element_signature(std::size_t e) const;

 private:
  Matroid(std::size_t size, std::vector<ElementSet> bases);

  std::size_t size_ = 0;
  std::size_t rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<bool> independent_;
  std::vector<std::uint8_t> rank_table_;
  std::vector<ElementSet> circuits_;
  std::vector<bool> circuit_flag_;
  mutable std::optional<std::vector<ElementSet>> cocircuits_;
};

// Cheap invariants first (size, rank, basis count, circuit size profile,
// element signatures), then backtracking on circuit consistency. On success
// map[e] is the element of b matched with element e of a, and bases
// correspond exactly.
std::optional<std::vector<std::size_t>> find_isomorphism(const Matroid& a,
                                                         const Matroid& b);

// The invariant screen used by find_isomorphism, exposed so enumerations can
// count how often it alone settles a comparison.
bool invariants_match(const Matroid& a, const Matroid& b);

}  // namespace prymdice

#endif  // PRYMDICE_MATROID_H_
