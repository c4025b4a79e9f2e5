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

#include "prymdice/multigraph_enum.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prymdice {

std::size_t pair_count(std::size_t vertices) {
  return vertices * (vertices - (vertices > 0)) / 2;
}

std::size_t pair_index(std::size_t i, std::size_t j) {
  return j * (j - 1) / 2 + i;
}

namespace {

struct PairTable {
  explicit PairTable(std::size_t vertices) {
    for (std::size_t j = 1; j < vertices; ++j) {
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Decides whether some relabeling gives a lexicographically larger code.
// Labels are assigned in order 0, 1, ...; fixing label j settles exactly the
// block of pairs (0, j) .. (j - 1, j), which is contiguous in colex order.
class CanonicityTest {
 public:
  CanonicityTest(const std::vector<std::uint8_t>& adjacency, std::size_t n)
      : adj_(adjacency), n_(n), perm_(n), used_(n, false) {}

  bool larger_exists() { return search(0); }

 private:
  std::uint8_t at(std::size_t a, std::size_t b) const { return adj_[a * n_ + b]; }

  bool twins(std::size_t a, std::size_t b) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (k != a && k != b && at(a, k) != at(b, k)) return false;
    }
    return true;
  }

  bool search(std::size_t j) {
    if (j == n_) return false;
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c]) continue;
      bool shadowed = false;
      for (std::size_t d = 0; d < c && !shadowed; ++d) {
        shadowed = !used_[d] && twins(c, d);
      }
      if (shadowed) continue;
      int cmp = 0;
      for (std::size_t i = 0; i < j && cmp == 0; ++i) {
        const std::uint8_t mine = at(perm_[i], c);
        const std::uint8_t theirs = at(i, j);
        cmp = mine > theirs ? 1 : (mine < theirs ? -1 : 0);
      }
      if (cmp > 0) return true;
      if (cmp < 0) continue;
      perm_[j] = c;
      used_[c] = true;
      const bool found = search(j + 1);
      used_[c] = false;
      if (found) return true;
    }
    return false;
  }

  const std::vector<std::uint8_t>& adj_;
  std::size_t n_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
};

std::vector<std::uint8_t> adjacency_of(const MultigraphCode& code,
                                       std::size_t n) {
  std::vector<std::uint8_t> adj(n * n, 0);
  std::size_t p = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++p) {
      adj[i * n + j] = adj[j * n + i] = code[p];
    }
  }
  return adj;
}

class Generator {
 public:
  Generator(std::size_t n, std::size_t max_edges)
      : n_(n), max_edges_(max_edges), table_(n), adj_(n * n, 0),
        code_(pair_count(n), 0), by_edges_(max_edges + 1) {}

  std::vector<std::vector<MultigraphCode>> run() {
    grow(0, 0);
    for (auto& bucket : by_edges_) std::sort(bucket.begin(), bucket.end());
    return std::move(by_edges_);
  }

 private:
  void grow(std::size_t edges, std::size_t last) {
    by_edges_[edges].push_back(code_);
    if (edges == max_edges_) return;
    for (std::size_t p = last; p < code_.size(); ++p) {
      auto [i, j] = table_.pairs[p];
      ++code_[p];
      ++adj_[i * n_ + j];
      ++adj_[j * n_ + i];
      if (!CanonicityTest(adj_, n_).larger_exists()) grow(edges + 1, p);
      --code_[p];
      --adj_[i * n_ + j];
      --adj_[j * n_ + i];
    }
  }

  std::size_t n_;
  std::size_t max_edges_;
  PairTable table_;
  std::vector<std::uint8_t> adj_;
  MultigraphCode code_;
  std::vector<std::vector<MultigraphCode>> by_edges_;
};

}  // namespace

bool is_canonical_code(const MultigraphCode& code, std::size_t vertices) {
  if (code.size() != pair_count(vertices)) {
    throw std::invalid_argument("code length does not match vertex count");
  }
  return !CanonicityTest(adjacency_of(code, vertices), vertices).larger_exists();
}

std::vector<MultigraphCode> enumerate_codes(std::size_t vertices,
                                            std::size_t edges) {
  if (vertices < 2) {
    return edges == 0 ? std::vector<MultigraphCode>{MultigraphCode{}}
                      : std::vector<MultigraphCode>{};
  }
  return Generator(vertices, edges).run()[edges];
}

bool code_is_connected(const MultigraphCode& code, std::size_t vertices) {
  if (vertices <= 1) return true;
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t merges = 0;
  std::size_t p = 0;
  for (std::size_t j = 1; j < vertices; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++p) {
      if (code[p] == 0) continue;
      const std::size_t a = find(i);
      const std::size_t b = find(j);
      if (a != b) {
        parent[b] = a;
        ++merges;
      }
    }
  }
  return merges + 1 == vertices;
}

MultiGraph graph_from_code(const MultigraphCode& code, std::size_t vertices) {
  MultiGraph g;
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  std::size_t p = 0;
  std::size_t label = 1;
  for (std::size_t j = 1; j < vertices; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++p) {
      for (std::uint8_t k = 0; k < code[p]; ++k) {
        g.add_edge("e" + std::to_string(label++), i, j);
      }
    }
  }
  return g;
}

MultiGraph disjoint_union(const std::vector<const MultiGraph*>& parts) {
  MultiGraph g;
  std::size_t label = 1;
  for (const MultiGraph* part : parts) {
    const std::size_t offset = g.vertex_count();
    for (std::size_t v = 0; v < part->vertex_count(); ++v) {
      g.add_vertex("v" + std::to_string(offset + v));
    }
    for (const Edge& e : part->edges()) {
      g.add_edge("e" + std::to_string(label++), offset + e.tail, offset + e.head);
    }
  }
  return g;
}

const std::vector<MultigraphCode>& MultigraphCatalog::connected(
    std::size_t vertices, std::size_t edges) {
  Level& level = levels_[vertices];
  if (level.connected_by_edges.empty() || level.max_edges < edges) {
    std::vector<std::vector<MultigraphCode>> all =
        vertices < 2 ? std::vector<std::vector<MultigraphCode>>(edges + 1)
                     : Generator(vertices, edges).run();
    if (vertices < 2) all[0].push_back(MultigraphCode{});
    level.max_edges = edges;
    level.connected_by_edges.assign(edges + 1, {});
    for (std::size_t e = 0; e <= edges; ++e) {
      for (MultigraphCode& code : all[e]) {
        if (code_is_connected(code, vertices)) {
          level.connected_by_edges[e].push_back(std::move(code));
        }
      }
    }
  }
  return level.connected_by_edges[edges];
}

std::size_t MultigraphCatalog::for_each_graph(
    std::size_t edges, std::size_t rank,
    const std::function<bool(const MultiGraph&)>& visit) {
  if (rank == 0) {
    if (edges != 0) return 0;
    visit(MultiGraph());
    return 1;
  }
  if (edges < rank) return 0;

  // Piece types (vertices, edges, index) in lexicographic order; a multiset
  // of pieces is produced as a nondecreasing sequence of types.
  struct Piece {
    std::size_t vertices;
    std::size_t edges;
    std::size_t index;
  };
  std::vector<Piece> types;
  for (std::size_t v = 2; v <= rank + 1; ++v) {
    connected(v, edges - (rank - (v - 1)));  // generate once at full size
    for (std::size_t e = v - 1; e <= edges - (rank - (v - 1)); ++e) {
      const auto& codes = connected(v, e);
      for (std::size_t i = 0; i < codes.size(); ++i) {
        types.push_back(Piece{v, e, i});
      }
    }
  }
  std::vector<MultiGraph> built;
  built.reserve(types.size());
  for (const Piece& t : types) {
    built.push_back(graph_from_code(connected(t.vertices, t.edges)[t.index],
                                    t.vertices));
  }

  std::size_t visited = 0;
  bool stop = false;
  std::vector<const MultiGraph*> chosen;
  std::function<void(std::size_t, std::size_t, std::size_t)> place =
      [&](std::size_t first, std::size_t rank_left, std::size_t edges_left) {
        if (stop) return;
        if (rank_left == 0) {
          if (edges_left != 0) return;
          ++visited;
          if (!visit(disjoint_union(chosen))) stop = true;
          return;
        }
        for (std::size_t t = first; t < types.size() && !stop; ++t) {
          const Piece& p = types[t];
          if (p.vertices - 1 > rank_left || p.edges > edges_left) continue;
          const std::size_t rank_after = rank_left - (p.vertices - 1);
          if (edges_left - p.edges < rank_after) continue;
          chosen.push_back(&built[t]);
          place(t, rank_after, edges_left - p.edges);
          chosen.pop_back();
        }
      };
  place(0, rank, edges);
  return visited;
}

}  // namespace prymdice
