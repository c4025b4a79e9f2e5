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

#include "doctest.h"
#include "prymdice/homology.h"
#include "prymdice/segre.h"
#include "test_oracles.h"

namespace prymdice {
namespace {

std::vector<Integer> boundary(const MultiGraph& g, const CochainVector& v) {
  std::vector<Integer> out(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out[g.edge(e).head] += v[e].twice();
    out[g.edge(e).tail] -= v[e].twice();
  }
  return out;
}

bool is_zero(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::vector<Integer> twice_pi_minus(const GraphInvolution& iota, const CochainVector& h) {
  std::vector<Integer> image(h.size());
  for (std::size_t e = 0; e < h.size(); ++e) {
    image[iota.edge_image(e)] = iota.edge_sign(e) * h[e].integer_value();
  }
  std::vector<Integer> out(h.size());
  for (std::size_t e = 0; e < h.size(); ++e) out[e] = h[e].integer_value() - image[e];
  return out;
}

TEST_SUITE("segre") {

TEST_CASE("transcribed cover") {
  const SegreFixture& f = segre_fixture();
  const MultiGraph& g = f.cover;
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 20);
  for (std::size_t v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
  CHECK(f.involution.is_fixed_point_free());
  CHECK(g.edge(g.edge_index("e1")) == Edge{"e1", g.vertex_index("b3"), g.vertex_index("a2")});
  CHECK(g.edge(g.edge_index("e7'")) == Edge{"e7'", g.vertex_index("a3"), g.vertex_index("b1")});
  CHECK(g.edge(g.edge_index("e9'")) == Edge{"e9'", g.vertex_index("b1"), g.vertex_index("a4")});
  CHECK(g.edge(g.edge_index("e8'")) == Edge{"e8'", g.vertex_index("a2"), g.vertex_index("b5")});
  CHECK(f.tree.size() == 9);
  // The quotient is K5.
  const MultiGraph q = quotient_graph(g, f.involution);
  CHECK(q.vertex_count() == 5);
  CHECK(q.edge_count() == 10);
  for (std::size_t v = 0; v < 5; ++v) CHECK(q.degree(v) == 4);
  // The data file carries the same graph.
  const GraphFile file = parse_graph(oracle::read_data("segre_cover.graph"));
  CHECK(file.graph == g);
  CHECK(*file.involution == f.involution);
  CHECK(parse_graph(segre_graph_text()).graph == g);
}

TEST_CASE("printed signs are not all consistent") {
  const SegreFixture& f = segre_fixture();
  std::size_t literal_cycles = 0;
  for (std::size_t i = 0; i < f.printed_h.size(); ++i) {
    literal_cycles += is_zero(boundary(f.cover, f.printed_vector(i)));
    CHECK(is_zero(boundary(f.cover, f.h_basis[i])));
    for (std::size_t e = 0; e < 20; ++e) {
      CHECK(f.printed_vector(i)[e].is_zero() == f.h_basis[i][e].is_zero());
    }
  }
  CHECK(literal_cycles < f.printed_h.size());
}

TEST_CASE("the h-vectors are the fundamental cycles of the tree") {
  const SegreFixture& f = segre_fixture();
  const TranscribedBasisReport r = validate_transcribed_basis(f);
  CHECK(r.ok());
  CHECK(r.h_rank == 11);
  CHECK(betti_number(f.cover) == 11);
  CHECK(r.h_are_fundamental_cycles);
  CHECK(std::all_of(r.h_is_cycle.begin(), r.h_is_cycle.end(), [](bool b) { return b; }));
  CHECK(r.l_rank == 5);
  CHECK(r.h1_in_l_lattice);
  CHECK(r.lattices_equal);
}

TEST_CASE("l-identities hold up to one common sign") {
  const SegreFixture& f = segre_fixture();
  const TranscribedBasisReport r = validate_transcribed_basis(f);
  REQUIRE(r.identities.size() == 5);
  for (const LIdentityCheck& id : r.identities) {
    CAPTURE(id.name);
    REQUIRE(id.sign.has_value());
    CHECK(*id.sign == -1);
    const auto p = twice_pi_minus(f.involution, f.h_basis[f.h_index(id.first)]);
    const auto q = twice_pi_minus(f.involution, f.h_basis[f.h_index(id.second)]);
    std::vector<Integer> sum(p.size());
    for (std::size_t e = 0; e < p.size(); ++e) sum[e] = p[e] + q[e];
    CHECK(is_zero(sum));
  }
  // pi-(h1) vanishes: h1 is invariant.
  CHECK(is_zero(twice_pi_minus(f.involution, f.h_basis[f.h_index("h1")])));
}

TEST_CASE("reversing e1'..e5' makes every l-identity exact") {
  const SegreFixture& f = segre_fixture();
  MultiGraph g;
  for (const std::string& v : f.cover.vertex_names()) g.add_vertex(v);
  for (const Edge& e : f.cover.edges()) {
    const bool flip = e.label.size() == 3 && e.label[2] == '\'' && e.label[1] >= '1' &&
                      e.label[1] <= '5';
    g.add_edge(e.label, flip ? e.head : e.tail, flip ? e.tail : e.head);
  }
  std::vector<std::size_t> vmap(10), emap(20);
  for (std::size_t v = 0; v < 10; ++v) vmap[v] = f.involution.vertex_image(v);
  for (std::size_t e = 0; e < 20; ++e) emap[e] = f.involution.edge_image(e);
  const GraphInvolution iota(g, vmap, emap);
  const CycleBasis basis = cycle_basis(g, f.tree);
  auto cycle_of = [&](const std::string& label) {
    const std::size_t e = g.edge_index(label);
    const auto it = std::find(basis.cotree_edges.begin(), basis.cotree_edges.end(), e);
    REQUIRE(it != basis.cotree_edges.end());
    return basis.cycle(static_cast<std::size_t>(it - basis.cotree_edges.begin()));
  };
  // Each identity pairs the fundamental cycles of e_i and e_i'.
  for (int i = 1; i <= 5; ++i) {
    const std::string e = "e" + std::to_string(i);
    CHECK(twice_pi_minus(iota, cycle_of(e)) == twice_pi_minus(iota, cycle_of(e + "'")));
  }
}

TEST_CASE("dicing matrix has the support of E5") {
  const SegreFixture& f = segre_fixture();
  const IntMatrix a = transcribed_dicing_matrix(f);
  IntMatrix support(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) support(r, c) = abs(a(r, c));
  }
  CHECK(support == e5().vectors());
  const auto t = systems_equivalent(a, e5().vectors());
  REQUIRE(t.has_value());
  CHECK(verify_transformation(a, e5().vectors(), *t));
}

TEST_CASE("the pipeline") {
  const SegreFixture& f = segre_fixture();
  const TheoremReport r = reproduce_theorem(f);
  CHECK(r.vologodsky.passed);
  CHECK(r.torus_rank == 5);
  CHECK(r.dicing.multipliers == std::vector<int>(20, 2));
  CHECK(r.dicing.system.dim() == 5);
  CHECK(r.dicing.system.size() == 10);
  CHECK(r.dicing.family_independent);
  REQUIRE(r.to_e5.has_value());
  CHECK(verify_transformation(r.dicing.system.vectors(), e5().vectors(), *r.to_e5));
  CHECK_FALSE(r.e5_cographic.cographic);
  CHECK(r.conclusion == kTheoremConclusion);
}

TEST_CASE("the search limit passes through") {
  CHECK_THROWS_AS(reproduce_theorem(segre_fixture(), 5), SearchLimitExceeded);
}

}  // TEST_SUITE

}  // namespace
}  // namespace prymdice
