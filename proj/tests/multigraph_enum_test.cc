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

#include <set>

#include "doctest.h"
#include "prymdice/multigraph_enum.h"
#include "test_oracles.h"

namespace prymdice {
namespace {

oracle::EdgeList edge_list(const MultigraphCode& code, std::size_t vertices) {
  oracle::EdgeList edges;
  for (std::size_t j = 1; j < vertices; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (int k = 0; k < code[pair_index(i, j)]; ++k) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return edges;
}

TEST_SUITE("multigraph_enum") {

TEST_CASE("pair order is colex") {
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(1, 2) == 2);
  CHECK(pair_index(0, 3) == 3);
  CHECK(pair_count(5) == 10);
}

TEST_CASE("enumerated classes are distinct and complete") {
  for (std::size_t v = 1; v <= 5; ++v) {
    for (std::size_t e = 0; e <= 5; ++e) {
      CAPTURE(v);
      CAPTURE(e);
      const std::vector<MultigraphCode> codes = enumerate_codes(v, e);
      std::set<oracle::EdgeList> forms;
      std::size_t connected = 0;
      for (const MultigraphCode& code : codes) {
        CHECK(is_canonical_code(code, v));
        forms.insert(oracle::canonical_form(static_cast<int>(v), edge_list(code, v)));
        const bool conn = code_is_connected(code, v);
        CHECK(conn == oracle::connected(static_cast<int>(v), edge_list(code, v)));
        connected += conn;
      }
      CHECK(forms.size() == codes.size());
      CHECK(connected == oracle::count_connected_multigraphs(static_cast<int>(v),
                                                             static_cast<int>(e)));
    }
  }
}

TEST_CASE("connected loopless multigraphs by edge count") {
  // Known totals for 1..8 edges, summed over vertex counts.
  const std::size_t expected[] = {1, 2, 5, 12, 33, 103, 333, 1183};
  MultigraphCatalog catalog;
  for (std::size_t e = 1; e <= 8; ++e) {
    std::size_t total = 0;
    for (std::size_t v = 2; v <= e + 1; ++v) total += catalog.connected(v, e).size();
    CHECK(total == expected[e - 1]);
  }
}

TEST_CASE("catalog agrees with brute force on six vertices") {
  MultigraphCatalog catalog;
  CHECK(catalog.connected(6, 5).size() == oracle::count_connected_multigraphs(6, 5));
  CHECK(catalog.connected(6, 6).size() == oracle::count_connected_multigraphs(6, 6));
}

TEST_CASE("graphs of a given rank") {
  MultigraphCatalog catalog;
  // Rank 1 with two edges: a double edge only (two disjoint edges have rank 2).
  std::size_t seen = catalog.for_each_graph(2, 1, [](const MultiGraph& g) {
    CHECK(g.vertex_count() == 2);
    return true;
  });
  CHECK(seen == 1);
  // Rank 2 with two edges: a path or two disjoint edges.
  CHECK(catalog.for_each_graph(2, 2, [](const MultiGraph&) { return true; }) == 2);
  CHECK(catalog.for_each_graph(0, 0, [](const MultiGraph& g) {
    CHECK(g.edge_count() == 0);
    return true;
  }) == 1);
  // Early stop.
  CHECK(catalog.for_each_graph(4, 2, [](const MultiGraph&) { return false; }) == 1);
}

TEST_CASE("graphs with ten edges and rank five") {
  // Regression values; the brute-force comparisons above cover smaller sizes.
  MultigraphCatalog catalog;
  CHECK(catalog.connected(6, 10).size() == 2445);
  std::size_t total = catalog.for_each_graph(10, 5, [](const MultiGraph& g) {
    CHECK(g.edge_count() == 10);
    CHECK(g.vertex_count() - components(g).size() == 5);
    return true;
  });
  CHECK(total == 3761);
}

TEST_CASE("graph_from_code and disjoint_union") {
  const MultigraphCode triangle{1, 1, 1};
  const MultiGraph g = graph_from_code(triangle, 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0).label == "e1");
  CHECK(g.vertex_name(2) == "v2");
  const MultiGraph u = disjoint_union({&g, &g});
  CHECK(u.vertex_count() == 6);
  CHECK(u.edge_count() == 6);
  CHECK(components(u).size() == 2);
  CHECK(u.edge(3).tail == 3);
}

}  // TEST_SUITE

}  // namespace
}  // namespace prymdice
