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

#include "prymdice/homology.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace prymdice {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::size_t betti_number(const MultiGraph& g) {
  return g.edge_count() + components(g).size() - g.vertex_count();
}

CochainVector CycleBasis::cycle(std::size_t i) const {
  return CochainVector::from_integers(coefficients.row(i));
}

std::vector<CochainVector> CycleBasis::cycles() const {
  std::vector<CochainVector> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(cycle(i));
  return out;
}

std::vector<std::size_t> default_spanning_forest(const MultiGraph& g) {
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    incident[v] = g.incident_edges(v);
    std::sort(incident[v].begin(), incident[v].end(),
              [&](std::size_t x, std::size_t y) {
                return g.edge(x).label < g.edge(y).label;
              });
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> tree;
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : incident[v]) {
        const std::size_t w = g.edge(e).other_end(v);
        if (seen[w]) continue;
        seen[w] = true;
        tree.push_back(e);
        queue.push(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

CycleBasis cycle_basis(const MultiGraph& g,
                       const std::optional<std::vector<std::size_t>>& tree) {
  CycleBasis out;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<bool> in_tree(m, false);
  if (tree) {
    UnionFind uf(n);
    for (std::size_t e : *tree) {
      if (e >= m) throw std::invalid_argument("tree edge index out of range");
      if (in_tree[e]) {
        throw std::invalid_argument("edge '" + g.edge(e).label +
                                    "' listed twice in the tree");
      }
      in_tree[e] = true;
      if (!uf.unite(g.edge(e).tail, g.edge(e).head)) {
        throw std::invalid_argument("tree edges contain a cycle through '" +
                                    g.edge(e).label + "'");
      }
    }
    if (tree->size() + components(g).size() != n) {
      throw std::invalid_argument("tree edges do not span every component");
    }
  } else {
    for (std::size_t e : default_spanning_forest(g)) in_tree[e] = true;
  }
  for (std::size_t e = 0; e < m; ++e) {
    (in_tree[e] ? out.tree_edges : out.cotree_edges).push_back(e);
  }

  // Root every tree component and record parent edges and depths.
  std::vector<std::vector<std::size_t>> tree_incident(n);
  for (std::size_t e : out.tree_edges) {
    tree_incident[g.edge(e).tail].push_back(e);
    tree_incident[g.edge(e).head].push_back(e);
  }
  std::vector<std::size_t> parent_edge(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : tree_incident[v]) {
        const std::size_t w = g.edge(e).other_end(v);
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        queue.push(w);
      }
    }
  }

  out.coefficients = IntMatrix(out.cotree_edges.size(), m);
  for (std::size_t i = 0; i < out.cotree_edges.size(); ++i) {
    const std::size_t f = out.cotree_edges[i];
    out.coefficients(i, f) = 1;
    // The cycle runs tail -> head along f and then back to the tail through
    // the tree. Walk both endpoints up to their common ancestor.
    std::size_t x = g.edge(f).head;  // walked forward, from head upward
    std::size_t y = g.edge(f).tail;  // walked backward, from tail upward
    while (x != y) {
      if (depth[x] >= depth[y]) {
        const std::size_t e = parent_edge[x];
        const std::size_t up = g.edge(e).other_end(x);
        out.coefficients(i, e) += g.edge(e).tail == x ? 1 : -1;
        x = up;
      } else {
        const std::size_t e = parent_edge[y];
        const std::size_t up = g.edge(e).other_end(y);
        // Traversed downward, from up to y.
        out.coefficients(i, e) += g.edge(e).tail == up ? 1 : -1;
        y = up;
      }
    }
  }
  return out;
}

CographicDicing cographic_dicing_system(
    const MultiGraph& g, const std::optional<std::vector<std::size_t>>& tree) {
  if (betti_number(g) == 0) {
    throw std::invalid_argument("graph is a forest: H1 is zero");
  }
  CycleBasis basis = cycle_basis(g, tree);
  ColumnReduction reduction = reduce_columns(basis.coefficients);
  UnimodularSystem system(reduction.matrix);
  return CographicDicing{std::move(basis), std::move(reduction),
                         std::move(system)};
}

bool is_cycle(const MultiGraph& g, const CochainVector& v) {
  if (v.size() != g.edge_count()) {
    throw std::invalid_argument("is_cycle: vector length does not match graph");
  }
  std::vector<Integer> boundary(g.vertex_count(), 0);
  for (std::size_t e = 0; e < v.size(); ++e) {
    boundary[g.edge(e).head] += v[e].twice();
    boundary[g.edge(e).tail] -= v[e].twice();
  }
  return std::all_of(boundary.begin(), boundary.end(),
                     [](const Integer& b) { return b == 0; });
}

}  // namespace prymdice
