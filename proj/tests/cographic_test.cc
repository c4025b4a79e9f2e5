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

#include <numeric>

#include "doctest.h"
#include "prymdice/cographic.h"
#include "prymdice/matroid.h"
#include "test_oracles.h"

namespace prymdice {
namespace {

// Number of components after keeping only the edges in `keep`.
std::size_t component_count(const MultiGraph& g, ElementSet keep) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t count = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(keep >> e & 1)) continue;
    const std::size_t a = find(g.edge(e).tail), b = find(g.edge(e).head);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Checks the certificate from scratch: a column set is a basis of the input
// exactly when the matched edges form the complement of a spanning forest.
void check_witness(const IntMatrix& m, const CographicCertificate& cert) {
  REQUIRE(cert.cographic);
  REQUIRE(cert.witness.has_value());
  const MultiGraph& g = *cert.witness;
  REQUIRE(g.edge_count() == m.cols());
  REQUIRE(cert.column_to_edge.size() == m.cols());
  const std::size_t full = component_count(g, ~ElementSet{0});
  oracle::Dense all(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) all[r][c] = static_cast<long long>(m(r, c));
  }
  const std::size_t rank = oracle::rational_rank(all);
  const ElementSet ground = (ElementSet{1} << m.cols()) - 1;
  for (ElementSet s = 0; s <= ground; ++s) {
    if (static_cast<std::size_t>(__builtin_popcount(s)) != rank) continue;
    oracle::Dense sub(m.rows());
    ElementSet edges = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!(s >> c & 1)) continue;
      for (std::size_t r = 0; r < m.rows(); ++r) sub[r].push_back(all[r][c]);
      edges |= ElementSet{1} << cert.column_to_edge[c];
    }
    const bool basis = oracle::rational_rank(sub) == rank;
    // Complement is a spanning forest: it keeps the component count and has
    // |V| - c edges.
    const ElementSet rest = ground & ~edges;
    const bool forest =
        component_count(g, rest) == full &&
        static_cast<std::size_t>(__builtin_popcount(rest)) == g.vertex_count() - full;
    CHECK(basis == forest);
  }
}

MultiGraph complete_graph(int n) {
  MultiGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex("w" + std::to_string(v));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      g.add_edge("k" + std::to_string(a) + std::to_string(b), a, b);
    }
  }
  return g;
}

TEST_SUITE("cographic") {

TEST_CASE("bond_system is the reduced incidence matrix") {
  MultiGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("ab", "a", "b");
  g.add_edge("bc", "b", "c");
  g.add_edge("loop", "c", "c");
  g.add_edge("ab2", "a", "b");
  const UnimodularSystem s = bond_system(g);
  CHECK(s.vectors() == IntMatrix{{-1, 0, 0, -1}, {1, -1, 0, 1}});
  CHECK(is_totally_unimodular(s).totally_unimodular);
  MultiGraph split;
  split.add_vertex("a");
  split.add_vertex("b");
  CHECK_THROWS_AS(bond_system(split), std::invalid_argument);
}

TEST_CASE("M(K4) is cographic and M(K5) is not") {
  // K4 is planar; K5 is not.
  const UnimodularSystem k4 = bond_system(complete_graph(4));
  const CographicCertificate c4 = is_cographic(k4);
  check_witness(k4.vectors(), c4);
  CHECK(c4.witness->vertex_count() == 4);

  const UnimodularSystem k5 = bond_system(complete_graph(5));
  const CographicCertificate c5 = is_cographic(k5);
  CHECK_FALSE(c5.cographic);
  CHECK_FALSE(c5.witness.has_value());
  REQUIRE(c5.report.components.size() == 1);
  CHECK(c5.report.components[0].vertex_rank == 6);
  CHECK(c5.report.components[0].connected_graphs > 0);
}

TEST_CASE("the file copy of the K4 system") {
  const IntMatrix m = parse_int_matrix(oracle::read_data("k4_bond.mat"));
  check_witness(m, is_cographic(UnimodularSystem::with_repeats(m)));
}

TEST_CASE("coloops become loops and zero columns become bridges") {
  const CographicCertificate id = is_cographic(UnimodularSystem(IntMatrix::identity(3)));
  check_witness(IntMatrix::identity(3), id);
  CHECK(id.report.coloops == 3);
  std::size_t loops = 0;
  for (const Edge& e : id.witness->edges()) loops += e.is_loop();
  CHECK(loops == 3);

  const IntMatrix with_zero{{1, 0, 1}, {0, 0, 1}};
  const CographicCertificate z =
      is_cographic(UnimodularSystem::with_repeats(with_zero));
  check_witness(with_zero, z);
  CHECK(z.report.zero_columns == 1);
}

TEST_CASE("E5 is not cographic") {
  const CographicCertificate cert = is_cographic(e5());
  CHECK_FALSE(cert.cographic);
  REQUIRE(cert.report.components.size() == 1);
  const ComponentSearch& c = cert.report.components[0];
  CHECK(c.elements == 10);
  CHECK(c.vertex_rank == 5);
  CHECK(c.graphs_enumerated == 3761);
  CHECK(c.connected_graphs == 2445);
  CHECK(c.graphs_enumerated ==
        c.rejected_bridge + c.rejected_invariants + c.isomorphism_searches);
  CHECK_FALSE(c.realized);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(is_cographic(UnimodularSystem(IntMatrix{{1, 1}, {1, -1}})),
                  NotTotallyUnimodular);
  try {
    is_cographic(e5(), 10);
    FAIL("expected the search limit to trip");
  } catch (const SearchLimitExceeded& e) {
    CHECK(e.report().max_graphs == 10);
  }
}

TEST_CASE("matroid_equivalent") {
  const IntMatrix a = bond_system(complete_graph(4)).vectors();
  const IntMatrix b = a.select_columns(std::vector<std::size_t>{5, 4, 3, 2, 1, 0});
  const auto map = matroid_equivalent(a, b);
  REQUIRE(map.has_value());
  CHECK(map->size() == 6);
  CHECK_FALSE(matroid_equivalent(e5().vectors(), bond_system(complete_graph(5)).vectors())
                  .has_value());
  CHECK_THROWS_AS(matroid_equivalent(a, e5().vectors()), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace prymdice
