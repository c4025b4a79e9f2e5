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

#include "prymdice/segre.h"

#include <algorithm>
#include <set>

#include "prymdice/homology.h"

namespace prymdice {
namespace {

// Unprimed edges as (tail, head). The primed partner swaps a and b at both
// ends, so e_i = (a_j, b_k) pairs with e_i' = (b_j, a_k).
constexpr std::array<std::array<const char*, 2>, 10> kEdges = {{
    {"b3", "a2"}, {"a4", "b2"}, {"a5", "b3"}, {"a5", "b4"}, {"a5", "b1"},
    {"a4", "b3"}, {"b3", "a1"}, {"b2", "a5"}, {"a1", "b4"}, {"b2", "a1"},
}};

constexpr std::array<const char*, 9> kTree = {
    "e6", "e7", "e8", "e9", "e10", "e10'", "e7'", "e9'", "e8'"};

std::string swap_side(const std::string& v) {
  return (v[0] == 'a' ? "b" : "a") + v.substr(1);
}

std::vector<PrintedVector> printed_h_vectors() {
  return {
      {"h1", {{1, "e6'"}, {1, "e7'"}, {-1, "e9'"}, {1, "e6"}, {1, "e7"}, {-1, "e9"}}},
      {"h2", {{1, "e1'"}, {1, "e7'"}, {1, "e9'"}, {1, "e6"}, {1, "e7"}, {1, "e10"}}},
      {"h3", {{1, "e1"}, {-1, "e10'"}, {-1, "e9'"}, {1, "e6"}}},
      {"h4", {{1, "e2"}, {1, "e6"}, {1, "e7"}, {1, "e10"}}},
      {"h5", {{1, "e2'"}, {-1, "e10'"}, {-1, "e9'"}, {1, "e6"}, {1, "e7"}, {-1, "e9"}}},
      {"h6", {{1, "e5'"}, {-1, "e8'"}, {-1, "e10'"}, {-1, "e9'"}, {1, "e6"}, {1, "e7"}}},
      {"h7", {{1, "e5"}, {-1, "e9'"}, {1, "e6"}, {1, "e7"}, {1, "e10"}, {1, "e8"}}},
      {"h8", {{1, "e4"}, {1, "e9"}, {1, "e10"}, {-1, "e8"}}},
      {"h9", {{1, "e3"}, {1, "e7"}, {1, "e10"}, {-1, "e8"}}},
      {"h8'", {{1, "e4'"}, {1, "e9'"}, {1, "e10'"}, {-1, "e8'"}}},
      {"h9'", {{1, "e3'"}, {1, "e7'"}, {1, "e10'"}, {-1, "e8'"}}},
  };
}

MultiGraph build_cover() {
  MultiGraph g;
  for (const char* side : {"a", "b"}) {
    for (int j = 1; j <= 5; ++j) g.add_vertex(side + std::to_string(j));
  }
  for (std::size_t i = 0; i < kEdges.size(); ++i) {
    g.add_edge("e" + std::to_string(i + 1), kEdges[i][0], kEdges[i][1]);
  }
  for (std::size_t i = 0; i < kEdges.size(); ++i) {
    g.add_edge("e" + std::to_string(i + 1) + "'", swap_side(kEdges[i][0]),
               swap_side(kEdges[i][1]));
  }
  return g;
}

GraphInvolution build_involution(const MultiGraph& g) {
  std::vector<std::size_t> vmap(10), emap(20);
  for (std::size_t v = 0; v < 10; ++v) vmap[v] = (v + 5) % 10;
  for (std::size_t e = 0; e < 20; ++e) emap[e] = (e + 10) % 20;
  return GraphInvolution(g, vmap, emap);
}

// Orients the simple cycle on the printed support so that the single
// non-tree edge of the support is traversed forwards.
CochainVector repair(const MultiGraph& g, const std::vector<bool>& in_tree,
                     const PrintedVector& printed) {
  std::vector<std::size_t> support;
  for (const PrintedTerm& t : printed.terms) support.push_back(g.edge_index(t.edge));
  std::vector<std::size_t> anchors;
  for (std::size_t e : support) {
    if (!in_tree[e]) anchors.push_back(e);
  }
  if (anchors.size() != 1) {
    throw std::logic_error(printed.name + ": support has " +
                           std::to_string(anchors.size()) + " non-tree edges");
  }
  CochainVector out(g.edge_count());
  std::set<std::size_t> unused(support.begin(), support.end());
  const std::size_t anchor = anchors.front();
  unused.erase(anchor);
  out[anchor] = 1;
  const std::size_t start = g.edge(anchor).tail;
  std::size_t at = g.edge(anchor).head;
  while (at != start) {
    std::optional<std::size_t> next;
    for (std::size_t e : unused) {
      if (g.edge(e).tail == at || g.edge(e).head == at) {
        if (next) {
          throw std::logic_error(printed.name + ": support is not a simple cycle");
        }
        next = e;
      }
    }
    if (!next) throw std::logic_error(printed.name + ": support is not closed");
    unused.erase(*next);
    const bool forward = g.edge(*next).tail == at;
    out[*next] = forward ? 1 : -1;
    at = g.edge(*next).other_end(at);
  }
  if (!unused.empty()) {
    throw std::logic_error(printed.name + ": support is not a single cycle");
  }
  return out;
}

SegreFixture build_fixture() {
  MultiGraph cover = build_cover();
  GraphInvolution iota = build_involution(cover);
  SegreFixture f{std::move(cover), std::move(iota), {}, printed_h_vectors(),
                 {}, {}, {}};
  const MultiGraph& g = f.cover;
  for (const char* label : kTree) f.tree.push_back(g.edge_index(label));
  std::sort(f.tree.begin(), f.tree.end());
  std::vector<bool> in_tree(g.edge_count(), false);
  for (std::size_t e : f.tree) in_tree[e] = true;
  for (const PrintedVector& p : f.printed_h) f.h_basis.push_back(repair(g, in_tree, p));

  f.l_identities = {{{"l1", "h2", "h3"},
                     {"l2", "h4", "h5"},
                     {"l3", "h9", "h9'"},
                     {"l4", "h8", "h8'"},
                     {"l5", "h6", "h7"}}};
  for (const LIdentity& id : f.l_identities) {
    f.l_basis.push_back(pi_minus(f.involution, f.h_basis[f.h_index(id.first)]));
  }

  // Transcription checks.
  if (!f.involution.is_fixed_point_free()) {
    throw std::logic_error("fixture involution has fixed points");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 4) {
      throw std::logic_error("vertex " + g.vertex_name(v) + " does not have degree 4");
    }
  }
  if (components(g).size() != 1) throw std::logic_error("fixture cover is disconnected");
  return f;
}

}  // namespace

std::size_t SegreFixture::h_index(const std::string& name) const {
  for (std::size_t i = 0; i < printed_h.size(); ++i) {
    if (printed_h[i].name == name) return i;
  }
  throw std::invalid_argument("no h-vector named " + name);
}

CochainVector SegreFixture::printed_vector(std::size_t i) const {
  CochainVector v(cover.edge_count());
  for (const PrintedTerm& t : printed_h.at(i).terms) {
    v[cover.edge_index(t.edge)] = t.sign;
  }
  return v;
}

const SegreFixture& segre_fixture() {
  static const SegreFixture fixture = build_fixture();
  return fixture;
}

std::string segre_graph_text() {
  const SegreFixture& f = segre_fixture();
  return serialize_graph(f.cover, &f.involution);
}

TranscribedBasisReport validate_transcribed_basis(const SegreFixture& f) {
  TranscribedBasisReport r;
  const MultiGraph& g = f.cover;
  const std::size_t edges = g.edge_count();

  IntMatrix h_rows(f.h_basis.size(), edges);
  for (std::size_t i = 0; i < f.h_basis.size(); ++i) {
    const std::string& name = f.printed_h[i].name;
    r.h_names.push_back(name);
    r.h_is_cycle.push_back(is_cycle(g, f.h_basis[i]));
    if (!r.h_is_cycle.back()) r.failures.push_back(name + " is not a cycle");
    const CochainVector printed = f.printed_vector(i);
    r.printed_is_cycle.push_back(is_cycle(g, printed));
    for (std::size_t e = 0; e < edges; ++e) {
      if (printed[e].is_zero() != f.h_basis[i][e].is_zero()) {
        r.failures.push_back(name + ": repaired support differs at " + g.edge(e).label);
      }
      if (printed[e] != f.h_basis[i][e]) ++r.printed_sign_mismatches;
      h_rows(i, e) = f.h_basis[i][e].integer_value();
    }
  }
  r.h_rank = rank(h_rows);
  if (r.h_rank != f.h_basis.size()) {
    r.failures.push_back("h-vectors have rank " + std::to_string(r.h_rank));
  }

  const CycleBasis fundamental = cycle_basis(g, f.tree);
  std::vector<std::vector<Integer>> a, b;
  for (std::size_t i = 0; i < fundamental.size(); ++i) a.push_back(fundamental.coefficients.row(i));
  for (std::size_t i = 0; i < h_rows.rows(); ++i) b.push_back(h_rows.row(i));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  r.h_are_fundamental_cycles = a == b;

  for (std::size_t k = 0; k < f.l_identities.size(); ++k) {
    const LIdentity& id = f.l_identities[k];
    const CochainVector p = pi_minus(f.involution, f.h_basis[f.h_index(id.first)]);
    const CochainVector q = pi_minus(f.involution, f.h_basis[f.h_index(id.second)]);
    LIdentityCheck check{id.name, id.first, id.second, std::nullopt};
    if (p == f.l_basis[k] && p == q) {
      check.sign = 1;
    } else if (p == f.l_basis[k] && p == -q) {
      check.sign = -1;
    } else {
      r.failures.push_back(id.name + ": pi-(" + id.first + ") and pi-(" +
                           id.second + ") differ beyond sign");
    }
    r.identities.push_back(check);
  }

  const HalfLattice l_lattice = lattice_from_vectors(f.l_basis, edges);
  r.l_rank = l_lattice.rank();
  if (r.l_rank != 5) r.failures.push_back("l-vectors have rank " + std::to_string(r.l_rank));
  const HalfLattice with_h1 = lattice_from_vectors(
      {f.l_basis[0], f.l_basis[1], f.l_basis[2], f.l_basis[3], f.l_basis[4],
       pi_minus(f.involution, f.h_basis[f.h_index("h1")])},
      edges);
  r.h1_in_l_lattice = with_h1.basis == l_lattice.basis;
  if (!r.h1_in_l_lattice) r.failures.push_back("pi-(h1) lies outside the l-lattice");

  r.l_lattice_hnf = l_lattice.doubled();
  r.x_minus_hnf = x_minus(g, f.involution, f.tree).doubled();
  r.lattices_equal = r.l_lattice_hnf == r.x_minus_hnf;
  if (!r.lattices_equal) r.failures.push_back("l-lattice differs from X-");
  return r;
}

IntMatrix transcribed_dicing_matrix(const SegreFixture& f) {
  const std::vector<int> m = multipliers(lattice_from_vectors(f.l_basis, f.cover.edge_count()));
  IntMatrix a(f.l_basis.size(), 10);
  for (std::size_t i = 0; i < f.l_basis.size(); ++i) {
    for (std::size_t j = 0; j < 10; ++j) {
      const std::size_t e = f.cover.edge_index("e" + std::to_string(j + 1));
      const Integer twice = m[e] * f.l_basis[i][e].twice();
      if (twice % 2 != 0) throw std::logic_error("non-integral dicing entry");
      a(i, j) = twice / 2;
    }
  }
  return a;
}

StageError::StageError(std::string stage, const std::string& message)
    : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const SearchLimitExceeded&) {
    throw;  // a resource limit, not a failure of the stage
  } catch (const std::exception& err) {
    throw StageError(name, err.what());
  }
}

}  // namespace

TheoremReport reproduce_theorem(const SegreFixture& f, std::size_t max_graphs) {
  VologodskyResult vologodsky =
      stage("vologodsky", [&] { return vologodsky_check(f.cover, f.involution); });
  const std::size_t rank = stage("x_minus", [&] {
    return x_minus(f.cover, f.involution, f.tree).rank();
  });
  PrymDicing dicing = stage("prym_dicing_system", [&] {
    return prym_dicing_system(f.cover, f.involution, f.tree);
  });
  std::optional<SystemTransformation> to_e5 = stage("systems_equivalent", [&] {
    return systems_equivalent(dicing.system, e5());
  });
  CographicCertificate cographic =
      stage("is_cographic", [&] { return is_cographic(e5(), max_graphs); });
  std::string conclusion = to_e5 && !cographic.cographic
                               ? kTheoremConclusion
                               : "theorem not reproduced";
  return TheoremReport{std::move(vologodsky), rank,
                       std::move(dicing),     std::move(to_e5),
                       std::move(cographic),  std::move(conclusion)};
}

}  // namespace prymdice
