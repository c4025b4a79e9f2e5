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

#include "prymdice/cographic.h"

#include <bit>
#include <string>

#include "prymdice/matroid.h"
#include "prymdice/multigraph_enum.h"

namespace prymdice {

NotTotallyUnimodular::NotTotallyUnimodular(TUCertificate certificate)
    : std::invalid_argument("system is not totally unimodular"),
      certificate_(std::move(certificate)) {}

SearchLimitExceeded::SearchLimitExceeded(CographicSearchReport report)
    : std::runtime_error("cographic search exceeded the cap of " +
                         std::to_string(report.max_graphs) + " graphs"),
      report_(std::move(report)) {}

UnimodularSystem bond_system(const MultiGraph& g) {
  if (g.vertex_count() < 2 || g.edge_count() == 0) {
    throw std::invalid_argument("bond_system needs at least two vertices and one edge");
  }
  if (components(g).size() != 1) {
    throw std::invalid_argument("bond_system needs a connected graph");
  }
  IntMatrix m(g.vertex_count() - 1, g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    if (edge.tail + 1 < g.vertex_count()) m(edge.tail, e) -= 1;
    if (edge.head + 1 < g.vertex_count()) m(edge.head, e) += 1;
  }
  return UnimodularSystem::with_repeats(std::move(m));
}

std::optional<std::vector<std::size_t>> matroid_equivalent(const IntMatrix& a,
                                                           const IntMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("matroid_equivalent: column counts differ");
  }
  return find_isomorphism(Matroid::from_matrix(a), Matroid::from_matrix(b));
}

std::optional<std::vector<std::size_t>> matroid_equivalent(
    const UnimodularSystem& a, const UnimodularSystem& b) {
  return matroid_equivalent(a.vectors(), b.vectors());
}

namespace {

bool has_bridge(const MultiGraph& g) {
  const std::size_t base = components(g).size();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    MultiGraph without;
    for (const std::string& name : g.vertex_names()) without.add_vertex(name);
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      if (f != e) without.add_edge(g.edge(f).label, g.edge(f).tail, g.edge(f).head);
    }
    if (components(without).size() > base) return true;
  }
  return false;
}

struct Piece {
  MultiGraph graph;
  std::vector<std::size_t> elements;        // input columns, ascending
  std::vector<std::size_t> element_to_edge; // parallel to `elements`
};

}  // namespace

CographicCertificate is_cographic(const UnimodularSystem& s,
                                  std::size_t max_graphs) {
  TUCertificate tu = is_totally_unimodular(s);
  if (!tu.totally_unimodular) throw NotTotallyUnimodular(std::move(tu));

  CographicCertificate cert;
  CographicSearchReport& report = cert.report;
  report.columns = s.size();
  report.max_graphs = max_graphs;
  const Matroid matroid = Matroid::from_matrix(s.vectors());
  report.rank = matroid.rank();

  MultigraphCatalog catalog;
  std::vector<Piece> pieces;
  for (ElementSet part : matroid.components()) {
    std::vector<std::size_t> elements;
    for (std::size_t e = 0; e < matroid.size(); ++e) {
      if (part >> e & 1) elements.push_back(e);
    }
    if (elements.size() == 1) {
      Piece piece;
      piece.elements = elements;
      piece.element_to_edge = {0};
      if (!matroid.is_independent(part)) {
        ++report.zero_columns;
        piece.graph.add_vertex("v0");
        piece.graph.add_vertex("v1");
        piece.graph.add_edge("e1", 0, 1);
        pieces.push_back(std::move(piece));
        continue;
      }
      if (matroid.rank_of(matroid.ground_set() & ~part) < matroid.rank()) {
        ++report.coloops;
        piece.graph.add_vertex("v0");
        piece.graph.add_edge("e1", 0, 0);
        pieces.push_back(std::move(piece));
        continue;
      }
    }

    const Matroid target = matroid.restrict(part);
    ComponentSearch search;
    search.elements = target.size();
    search.rank = target.rank();
    search.vertex_rank = target.size() - target.rank();
    std::optional<Piece> found;
    catalog.for_each_graph(
        search.elements, search.vertex_rank, [&](const MultiGraph& g) {
          ++search.graphs_enumerated;
          if (++report.graphs_enumerated > max_graphs) {
            report.components.push_back(search);
            throw SearchLimitExceeded(report);
          }
          if (components(g).size() == 1) ++search.connected_graphs;
          if (has_bridge(g)) {
            ++search.rejected_bridge;
            return true;
          }
          const Matroid candidate = Matroid::bond_matroid(g);
          if (!invariants_match(target, candidate)) {
            ++search.rejected_invariants;
            return true;
          }
          ++search.isomorphism_searches;
          auto map = find_isomorphism(target, candidate);
          if (!map) return true;
          found = Piece{g, elements, *map};
          return false;
        });
    search.realized = found.has_value();
    report.components.push_back(search);
    if (!found) return cert;  // one component without a graph decides it
    pieces.push_back(std::move(*found));
  }

  std::vector<const MultiGraph*> parts;
  for (const Piece& p : pieces) parts.push_back(&p.graph);
  MultiGraph witness = disjoint_union(parts);
  cert.column_to_edge.assign(s.size(), 0);
  std::size_t offset = 0;
  for (const Piece& p : pieces) {
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
      cert.column_to_edge[p.elements[i]] = offset + p.element_to_edge[i];
    }
    offset += p.graph.edge_count();
  }

  // Re-check the certificate as a whole: bases must correspond.
  const Matroid realized = Matroid::bond_matroid(witness);
  if (realized.bases().size() != matroid.bases().size()) {
    throw std::logic_error("cographic witness failed verification");
  }
  for (ElementSet basis : matroid.bases()) {
    ElementSet image = 0;
    for (; basis; basis &= basis - 1) {
      image |= ElementSet{1} << cert.column_to_edge[std::countr_zero(basis)];
    }
    if (!realized.is_basis(image)) {
      throw std::logic_error("cographic witness failed verification");
    }
  }
  cert.cographic = true;
  cert.witness = std::move(witness);
  return cert;
}

}  // namespace prymdice
