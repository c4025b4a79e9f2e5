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

#include "prymdice/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prymdice {
namespace {

std::size_t popcount(ElementSet s) { return std::popcount(s); }

ElementSet mask_of(const std::vector<std::size_t>& elements) {
  ElementSet s = 0;
  for (std::size_t e : elements) s |= ElementSet{1} << e;
  return s;
}

void check_size(std::size_t size) {
  if (size > kMaxMatroidElements) {
    throw std::invalid_argument("matroid has " + std::to_string(size) +
                                " elements; at most 20 are supported");
  }
}

// Edge subsets of size |V| - c that contain no cycle.
std::vector<ElementSet> spanning_forests(const MultiGraph& g) {
  check_size(g.edge_count());
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  const std::size_t k = n - components(g).size();
  std::vector<ElementSet> out;
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<std::size_t> parent(n);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  do {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (std::size_t e : subset) {
      const std::size_t a = find(g.edge(e).tail);
      const std::size_t b = find(g.edge(e).head);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[b] = a;
    }
    if (acyclic) out.push_back(mask_of(subset));
  } while (k > 0 && next_combination(subset, m));
  return out;
}

}  // namespace

Matroid::Matroid(std::size_t size, std::vector<ElementSet> bases)
    : size_(size), bases_(std::move(bases)) {
  check_size(size_);
  if (bases_.empty()) throw std::invalid_argument("matroid without bases");
  std::sort(bases_.begin(), bases_.end());
  rank_ = popcount(bases_.front());
  const std::size_t total = std::size_t{1} << size_;
  independent_.assign(total, false);
  for (ElementSet b : bases_) {
    if (popcount(b) != rank_ || b >= total) {
      throw std::invalid_argument("bases of unequal size or out of range");
    }
    independent_[b] = true;
  }
  // Every subset of an independent set is independent. Proper subsets have
  // smaller numeric value, so a single descending sweep suffices.
  for (std::size_t s = total; s-- > 0;) {
    if (!independent_[s]) continue;
    for (ElementSet rest = static_cast<ElementSet>(s); rest; rest &= rest - 1) {
      independent_[s & ~(rest & -rest)] = true;
    }
  }
  rank_table_.assign(total, 0);
  circuit_flag_.assign(total, false);
  for (std::size_t s = 1; s < total; ++s) {
    if (independent_[s]) {
      rank_table_[s] = static_cast<std::uint8_t>(popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    bool minimal = true;
    for (ElementSet rest = static_cast<ElementSet>(s); rest; rest &= rest - 1) {
      const std::size_t sub = s & ~(rest & -rest);
      best = std::max(best, rank_table_[sub]);
      if (!independent_[sub]) minimal = false;
    }
    rank_table_[s] = best;
    if (minimal) {
      circuit_flag_[s] = true;
      circuits_.push_back(static_cast<ElementSet>(s));
    }
  }
}

Matroid Matroid::from_bases(std::size_t size, std::vector<ElementSet> bases) {
  return Matroid(size, std::move(bases));
}

Matroid Matroid::from_matrix(const IntMatrix& m) {
  check_size(m.cols());
  if (m.rows() == 0 || m.is_zero()) return Matroid(m.cols(), {0});
  const IntMatrix rows = row_lattice_basis(m);
  const std::size_t r = rows.rows();
  std::vector<ElementSet> bases;
  std::vector<std::size_t> subset(r);
  std::iota(subset.begin(), subset.end(), 0);
  do {
    if (det(rows.select_columns(subset)) != 0) bases.push_back(mask_of(subset));
  } while (next_combination(subset, m.cols()));
  return Matroid(m.cols(), std::move(bases));
}

Matroid Matroid::cycle_matroid(const MultiGraph& g) {
  return Matroid(g.edge_count(), spanning_forests(g));
}

Matroid Matroid::bond_matroid(const MultiGraph& g) {
  std::vector<ElementSet> bases = spanning_forests(g);
  const ElementSet all = (ElementSet{1} << g.edge_count()) - 1;
  for (ElementSet& b : bases) b = all & ~b;
  return Matroid(g.edge_count(), std::move(bases));
}

bool Matroid::is_basis(ElementSet s) const {
  return independent_[s] && popcount(s) == rank_;
}

Matroid Matroid::dual() const {
  std::vector<ElementSet> bases = bases_;
  for (ElementSet& b : bases) b = ground_set() & ~b;
  return Matroid(size_, std::move(bases));
}

const std::vector<ElementSet>& Matroid::cocircuits() const {
  if (!cocircuits_) cocircuits_ = dual().circuits();
  return *cocircuits_;
}

Matroid Matroid::restrict(ElementSet elements) const {
  std::vector<std::size_t> members;
  for (std::size_t e = 0; e < size_; ++e) {
    if (elements >> e & 1) members.push_back(e);
  }
  const std::size_t r = rank_of(elements);
  std::vector<ElementSet> bases;
  for (ElementSet sub = elements;; sub = (sub - 1) & elements) {
    if (independent_[sub] && popcount(sub) == r) {
      ElementSet relabeled = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (sub >> members[i] & 1) relabeled |= ElementSet{1} << i;
      }
      bases.push_back(relabeled);
    }
    if (sub == 0) break;
  }
  return Matroid(members.size(), std::move(bases));
}

std::vector<std::size_t> Matroid::loops() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < size_; ++e) {
    if (!independent_[ElementSet{1} << e]) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> Matroid::coloops() const {
  ElementSet common = ground_set();
  for (ElementSet b : bases_) common &= b;
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < size_; ++e) {
    if (common >> e & 1) out.push_back(e);
  }
  return out;
}

std::vector<ElementSet> Matroid::components() const {
  std::vector<std::size_t> parent(size_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : circuits_) {
    const std::size_t first = std::countr_zero(c);
    for (std::size_t e = first + 1; e < size_; ++e) {
      if (c >> e & 1) parent[find(e)] = find(first);
    }
  }
  std::vector<ElementSet> out;
  std::vector<std::size_t> slot(size_, size_);
  for (std::size_t e = 0; e < size_; ++e) {
    const std::size_t root = find(e);
    if (slot[root] == size_) {
      slot[root] = out.size();
      out.push_back(0);
    }
    out[slot[root]] |= ElementSet{1} << e;
  }
  return out;
}

std::vector<std::size_t> Matroid::element_signature(std::size_t e) const {
  std::vector<std::size_t> sig(2 * (size_ + 1), 0);
  for (ElementSet c : circuits_) {
    if (c >> e & 1) ++sig[popcount(c)];
  }
  for (ElementSet c : cocircuits()) {
    if (c >> e & 1) ++sig[size_ + 1 + popcount(c)];
  }
  return sig;
}

bool invariants_match(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size() ||
      a.circuits().size() != b.circuits().size()) {
    return false;
  }
  auto histogram = [](const std::vector<ElementSet>& sets, std::size_t n) {
    std::vector<std::size_t> h(n + 1, 0);
    for (ElementSet s : sets) ++h[popcount(s)];
    return h;
  };
  if (histogram(a.circuits(), a.size()) != histogram(b.circuits(), b.size()) ||
      histogram(a.cocircuits(), a.size()) !=
          histogram(b.cocircuits(), b.size())) {
    return false;
  }
  std::vector<std::vector<std::size_t>> sa, sb;
  for (std::size_t e = 0; e < a.size(); ++e) {
    sa.push_back(a.element_signature(e));
    sb.push_back(b.element_signature(e));
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Matroid& a, const Matroid& b) : a_(a), b_(b) {
    const std::size_t m = a.size();
    a_circuits_at_.resize(m);
    b_circuits_at_.resize(m);
    for (ElementSet c : a.circuits()) {
      for (std::size_t e = 0; e < m; ++e) {
        if (c >> e & 1) a_circuits_at_[e].push_back(c);
      }
    }
    for (ElementSet c : b.circuits()) {
      for (std::size_t e = 0; e < m; ++e) {
        if (c >> e & 1) b_circuits_at_[e].push_back(c);
      }
    }
    for (std::size_t e = 0; e < m; ++e) {
      sig_a_.push_back(a.element_signature(e));
      sig_b_.push_back(b.element_signature(e));
    }
    map_.assign(m, m);
    inverse_.assign(m, m);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0, 0, 0)) return map_;
    return std::nullopt;
  }

 private:
  ElementSet image(ElementSet s) const {
    ElementSet out = 0;
    for (; s; s &= s - 1) out |= ElementSet{1} << map_[std::countr_zero(s)];
    return out;
  }
  ElementSet preimage(ElementSet s) const {
    ElementSet out = 0;
    for (; s; s &= s - 1) out |= ElementSet{1} << inverse_[std::countr_zero(s)];
    return out;
  }

  bool consistent(std::size_t e, ElementSet done_a, ElementSet done_b) const {
    for (ElementSet c : a_circuits_at_[e]) {
      if ((c & ~done_a) == 0 && !b_.is_circuit(image(c))) return false;
    }
    for (ElementSet c : b_circuits_at_[map_[e]]) {
      if ((c & ~done_b) == 0 && !a_.is_circuit(preimage(c))) return false;
    }
    return true;
  }

  bool extend(std::size_t e, ElementSet done_a, ElementSet done_b) {
    const std::size_t m = a_.size();
    if (e == m) {
      for (ElementSet basis : a_.bases()) {
        if (!b_.is_basis(image(basis))) return false;
      }
      return true;
    }
    for (std::size_t f = 0; f < m; ++f) {
      if (inverse_[f] != m || sig_a_[e] != sig_b_[f]) continue;
      map_[e] = f;
      inverse_[f] = e;
      const ElementSet na = done_a | ElementSet{1} << e;
      const ElementSet nb = done_b | ElementSet{1} << f;
      if (consistent(e, na, nb) && extend(e + 1, na, nb)) return true;
      map_[e] = m;
      inverse_[f] = m;
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  std::vector<std::vector<ElementSet>> a_circuits_at_;
  std::vector<std::vector<ElementSet>> b_circuits_at_;
  std::vector<std::vector<std::size_t>> sig_a_;
  std::vector<std::vector<std::size_t>> sig_b_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> inverse_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Matroid& a,
                                                         const Matroid& b) {
  if (!invariants_match(a, b)) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

}  // namespace prymdice
