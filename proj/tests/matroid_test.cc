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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "prymdice/matroid.h"
#include "prymdice/system.h"
#include "test_oracles.h"

namespace prymdice {
namespace {

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

// Bases of the column matroid from rational ranks of column subsets.
std::vector<ElementSet> oracle_bases(const IntMatrix& m) {
  oracle::Dense all(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) all[r][c] = static_cast<long long>(m(r, c));
  }
  const std::size_t rank = oracle::rational_rank(all);
  std::vector<ElementSet> bases;
  for (ElementSet s = 0; s < (ElementSet{1} << m.cols()); ++s) {
    if (static_cast<std::size_t>(__builtin_popcount(s)) != rank) continue;
    oracle::Dense sub(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (s >> c & 1) sub[r].push_back(all[r][c]);
      }
    }
    if (oracle::rational_rank(sub) == rank) bases.push_back(s);
  }
  return bases;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST_SUITE("matroid") {

TEST_CASE("column matroid bases match rational ranks") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(1 + trial % 4, 2 + trial % 7);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    }
    if (m.is_zero()) continue;
    const Matroid mat = Matroid::from_matrix(m);
    CHECK(sorted(mat.bases()) == oracle_bases(m));
  }
}

TEST_CASE("cycle matroid of K4") {
  const Matroid m = Matroid::cycle_matroid(complete_graph(4));
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  CHECK(m.bases().size() == 16);  // Cayley: 4^2 spanning trees
  // Four triangles and three 4-cycles.
  std::size_t triangles = 0, squares = 0;
  for (ElementSet c : m.circuits()) {
    triangles += __builtin_popcount(c) == 3;
    squares += __builtin_popcount(c) == 4;
  }
  CHECK(triangles == 4);
  CHECK(squares == 3);
  CHECK(m.circuits().size() == 7);
  CHECK(m.loops().empty());
  CHECK(m.coloops().empty());
  CHECK(m.components().size() == 1);
}

TEST_CASE("bond matroid is the dual of the cycle matroid") {
  const MultiGraph k5 = complete_graph(5);
  const Matroid cycle = Matroid::cycle_matroid(k5);
  const Matroid bond = Matroid::bond_matroid(k5);
  CHECK(bond.rank() == 6);
  CHECK(sorted(bond.bases()) == sorted(cycle.dual().bases()));
  CHECK(bond.bases().size() == 125);
  CHECK(sorted(cycle.cocircuits()) == sorted(bond.circuits()));
}

TEST_CASE("loops, coloops and components") {
  MultiGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("loop", "a", "a");
  g.add_edge("bridge", "a", "b");
  g.add_edge("p", "b", "c");
  g.add_edge("q", "c", "b");
  const Matroid m = Matroid::cycle_matroid(g);
  CHECK(m.loops() == std::vector<std::size_t>{0});
  CHECK(m.coloops() == std::vector<std::size_t>{1});
  CHECK(m.components() == std::vector<ElementSet>{0b0001, 0b0010, 0b1100});
  const Matroid restricted = m.restrict(0b1100);
  CHECK(restricted.size() == 2);
  CHECK(restricted.rank() == 1);
}

TEST_CASE("isomorphism under relabeling") {
  std::mt19937 rng(31);
  const IntMatrix a = e5().vectors();
  const Matroid ma = Matroid::from_matrix(a);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const IntMatrix b = a.select_columns(perm);
    const Matroid mb = Matroid::from_matrix(b);
    const auto map = find_isomorphism(ma, mb);
    REQUIRE(map.has_value());
    for (ElementSet s : ma.bases()) {
      ElementSet image = 0;
      for (std::size_t e = 0; e < 10; ++e) {
        if (s >> e & 1) image |= ElementSet{1} << (*map)[e];
      }
      CHECK(mb.is_basis(image));
    }
  }
}

TEST_CASE("non-isomorphic matroids with equal counts") {
  // M(K4) is self-dual, so it matches its bond matroid.
  const MultiGraph k4 = complete_graph(4);
  CHECK(find_isomorphism(Matroid::cycle_matroid(k4), Matroid::bond_matroid(k4)).has_value());
  // Ten elements each, but ranks 5 and 4.
  const Matroid r10 = Matroid::from_matrix(e5().vectors());
  CHECK_FALSE(invariants_match(r10, Matroid::cycle_matroid(complete_graph(5))));
  CHECK(r10.bases().size() == 162);
  // Rank 2 on four elements: u has the parallel pair {2, 3}, v has the loop 3.
  const Matroid u = Matroid::from_bases(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010});
  const Matroid v = Matroid::from_bases(4, {0b0011, 0b0101, 0b0110});
  CHECK_FALSE(find_isomorphism(u, v).has_value());
}

TEST_CASE("too many elements") {
  CHECK_THROWS_AS(Matroid::from_matrix(IntMatrix(1, 21)), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace prymdice
