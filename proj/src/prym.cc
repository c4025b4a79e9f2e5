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

#include "prymdice/prym.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace prymdice {

CochainVector pi_minus(const GraphInvolution& iota, const CochainVector& h) {
  if (!h.is_integral()) {
    throw std::invalid_argument("pi_minus expects an integral cycle");
  }
  const CochainVector diff = h - apply_involution(iota, h);
  CochainVector out(diff.size());
  for (std::size_t e = 0; e < diff.size(); ++e) {
    out[e] = HalfInt::from_twice(diff[e].integer_value());
  }
  return out;
}

namespace {

HalfLattice from_doubled_rows(const IntMatrix& doubled, std::size_t edges) {
  if (doubled.rows() == 0 || doubled.is_zero()) {
    return HalfLattice{RationalMatrix(IntMatrix(0, edges), 2)};
  }
  return HalfLattice{RationalMatrix(row_lattice_basis(doubled), 2)};
}

}  // namespace

HalfLattice lattice_from_vectors(const std::vector<CochainVector>& vectors,
                                 std::size_t edges) {
  IntMatrix doubled(vectors.size(), edges);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != edges) {
      throw std::invalid_argument("lattice_from_vectors: length mismatch");
    }
    for (std::size_t e = 0; e < edges; ++e) doubled(i, e) = vectors[i][e].twice();
  }
  return from_doubled_rows(doubled, edges);
}

HalfLattice x_minus(const MultiGraph& g, const GraphInvolution& iota,
                    const std::optional<std::vector<std::size_t>>& tree) {
  const CycleBasis basis = cycle_basis(g, tree);
  std::vector<CochainVector> images;
  for (const CochainVector& h : basis.cycles()) images.push_back(pi_minus(iota, h));
  return lattice_from_vectors(images, g.edge_count());
}

std::vector<int> multipliers(const HalfLattice& x) {
  const IntMatrix doubled = x.doubled();
  std::vector<int> out(x.basis.cols(), 0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    Integer g = 0;
    for (std::size_t i = 0; i < doubled.rows(); ++i) g = gcd(g, doubled(i, j));
    if (g == 0) {
      out[j] = 0;
    } else if (g == 1) {
      out[j] = 2;
    } else if (g == 2) {
      out[j] = 1;
    } else {
      throw std::logic_error("edge coordinate image is (" + to_string(g) +
                             "/2)Z, expected Z or (1/2)Z");
    }
  }
  return out;
}

std::size_t torus_rank(const MultiGraph& g, const GraphInvolution& iota) {
  return x_minus(g, iota).rank();
}

VologodskyResult vologodsky_check(const MultiGraph& g,
                                  const GraphInvolution& iota) {
  using Mask = std::uint64_t;
  if (g.vertex_count() > 64) {
    throw std::invalid_argument("vologodsky_check supports at most 64 vertices");
  }
  std::vector<Mask> orbits;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t w = iota.vertex_image(v);
    if (w >= v) orbits.push_back((Mask{1} << v) | (Mask{1} << w));
  }
  if (orbits.size() > 24) {
    throw std::invalid_argument("vologodsky_check supports at most 24 orbits");
  }
  std::vector<Mask> neighbours(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    neighbours[e.tail] |= Mask{1} << e.head;
    neighbours[e.head] |= Mask{1} << e.tail;
  }
  auto connected = [&](Mask set) {
    Mask reached = set & -set;
    for (Mask frontier = reached; frontier;) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        next |= neighbours[std::countr_zero(f)];
      }
      next &= set & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == set;
  };

  VologodskyResult result;
  std::vector<Mask> sets;
  for (std::uint32_t choice = 1; choice < (std::uint32_t{1} << orbits.size());
       ++choice) {
    Mask set = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (choice >> i & 1) set |= orbits[i];
    }
    if (connected(set)) sets.push_back(set);
  }
  std::sort(sets.begin(), sets.end());
  result.invariant_connected_sets = sets.size();

  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (sets[a] & sets[b]) continue;
      ++result.pairs_examined;
      std::vector<std::size_t> crossing;
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Mask t = Mask{1} << g.edge(e).tail;
        const Mask h = Mask{1} << g.edge(e).head;
        if (((sets[a] & t) && (sets[b] & h)) || ((sets[a] & h) && (sets[b] & t))) {
          crossing.push_back(e);
        }
      }
      if (crossing.size() < 4) continue;
      VologodskyWitness w;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (sets[a] >> v & 1) w.subgraph0.push_back(v);
        if (sets[b] >> v & 1) w.subgraph1.push_back(v);
      }
      w.connecting_edges = std::move(crossing);
      result.passed = false;
      result.witness = std::move(w);
      return result;
    }
  }
  return result;
}

PrymDicing prym_dicing_system(
    const MultiGraph& g, const GraphInvolution& iota,
    const std::optional<std::vector<std::size_t>>& tree) {
  const VologodskyResult check = vologodsky_check(g, iota);
  HalfLattice lattice = x_minus(g, iota, tree);
  if (lattice.rank() == 0) {
    throw std::invalid_argument(
        "anti-invariant lattice is zero; there is no dicing to compute");
  }
  std::vector<int> m = multipliers(lattice);
  const IntMatrix doubled = lattice.doubled();
  IntMatrix coords(doubled.rows(), doubled.cols());
  for (std::size_t i = 0; i < doubled.rows(); ++i) {
    for (std::size_t j = 0; j < doubled.cols(); ++j) {
      coords(i, j) = m[j] * doubled(i, j) / 2;
    }
  }
  ColumnReduction reduction = reduce_columns(coords);
  std::optional<StandardForm> standard = standard_form(reduction.matrix);
  UnimodularSystem system(standard ? standard->matrix : reduction.matrix);
  return PrymDicing{std::move(lattice), std::move(m),    std::move(coords),
                    std::move(reduction), std::move(standard), std::move(system),
                    check.passed, check.witness};
}

}  // namespace prymdice
