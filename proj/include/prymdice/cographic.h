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

// Deciding whether a totally unimodular system is cographic, by exhaustive
// search over multigraphs.

#ifndef PRYMDICE_COGRAPHIC_H_
#define PRYMDICE_COGRAPHIC_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prymdice/graph.h"
#include "prymdice/system.h"

namespace prymdice {

// Vertex incidence matrix (-1 at the tail, +1 at the head, nothing for a
// loop) with the last vertex row removed. Columns follow edge order and
// repeats are kept. Its column matroid is the cycle matroid M(G). Throws
// std::invalid_argument unless g is connected with at least one edge and
// two vertices.
UnimodularSystem bond_system(const MultiGraph& g);

// Column bijection map with map[j] = column of b matched with column j of a,
// carrying independent sets to independent sets in both directions. Throws
// std::invalid_argument when the column counts differ.
std::optional<std::vector<std::size_t>> matroid_equivalent(const IntMatrix& a,
                                                           const IntMatrix& b);
std::optional<std::vector<std::size_t>> matroid_equivalent(
    const UnimodularSystem& a, const UnimodularSystem& b);

struct ComponentSearch {
  std::size_t elements = 0;
  std::size_t rank = 0;          // rank of the matroid component
  std::size_t vertex_rank = 0;   // |V| - c demanded of candidate graphs
  std::size_t graphs_enumerated = 0;
  std::size_t connected_graphs = 0;
  std::size_t rejected_bridge = 0;      // bond matroid would have a loop
  std::size_t rejected_invariants = 0;
  std::size_t isomorphism_searches = 0;
  bool realized = false;
};

struct CographicSearchReport {
  std::size_t columns = 0;
  std::size_t rank = 0;
  std::size_t zero_columns = 0;  // realized by bridges
  std::size_t coloops = 0;       // realized by loops
  std::vector<ComponentSearch> components;
  std::size_t graphs_enumerated = 0;
  std::size_t max_graphs = 0;
};

struct CographicCertificate {
  bool cographic = false;
  std::optional<MultiGraph> witness;
  // Column j of the input is matched with edge column_to_edge[j] of the
  // witness; the bond matroid of the witness then equals the input matroid.
  std::vector<std::size_t> column_to_edge;
  CographicSearchReport report;
};

class NotTotallyUnimodular : public std::invalid_argument {
 public:
  explicit NotTotallyUnimodular(TUCertificate certificate);
  const TUCertificate& certificate() const { return certificate_; }

 private:
  TUCertificate certificate_;
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  explicit SearchLimitExceeded(CographicSearchReport report);
  const CographicSearchReport& report() const { return report_; }

 private:
  CographicSearchReport report_;
};

inline constexpr std::size_t kDefaultMaxGraphs = 1'000'000;

// The column matroid is split into connected components. A zero column is
// realized by a bridge and a coloop by a loop; every other component with m
// elements and rank r is compared against all loopless multigraphs with m
// edges, no isolated vertices and |V| - c = m - r. Throws
// NotTotallyUnimodular or SearchLimitExceeded (more than max_graphs
// candidate graphs in total).
CographicCertificate is_cographic(const UnimodularSystem& s,
                                  std::size_t max_graphs = kDefaultMaxGraphs);

}  // namespace prymdice

#endif  // PRYMDICE_COGRAPHIC_H_
