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

// Reference implementations used only by tests. They deliberately share no
// code with the library: plain vectors, Laplace expansion, rational Gaussian
// elimination and brute-force search.

#ifndef PRYMDICE_TESTS_TEST_ORACLES_H_
#define PRYMDICE_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<long long>>;

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(PRYMDICE_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Laplace expansion along the first row.
inline Big laplace_det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Big total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const Big term = Big(m[0][c]) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Big(-term);
  }
  return total;
}

inline std::size_t rational_rank(const Dense& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Total unimodularity straight from the definition: every square submatrix,
// row and column subsets drawn as bitmasks.
inline bool all_minors_tu(const Dense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::uint32_t rmask = 1; rmask < (1u << rows); ++rmask) {
    for (std::uint32_t cmask = 1; cmask < (1u << cols); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      Dense sub;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!(rmask >> r & 1)) continue;
        std::vector<long long> row;
        for (std::size_t c = 0; c < cols; ++c) {
          if (cmask >> c & 1) row.push_back(m[r][c]);
        }
        sub.push_back(row);
      }
      const Big d = laplace_det(sub);
      if (d > 1 || d < -1) return false;
    }
  }
  return true;
}

// Loopless multigraph as a sorted list of vertex pairs.
using EdgeList = std::vector<std::pair<int, int>>;

inline bool connected(int vertices, const EdgeList& edges) {
  std::vector<int> comp(vertices);
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges) {
      const int m = std::min(comp[a], comp[b]);
      if (comp[a] != m || comp[b] != m) {
        comp[a] = comp[b] = m;
        changed = true;
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// Smallest relabeled edge list over all vertex permutations.
inline EdgeList canonical_form(int vertices, const EdgeList& edges) {
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [a, b] : edges) {
      int x = perm[a], y = perm[b];
      if (x > y) std::swap(x, y);
      mapped.emplace_back(x, y);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = mapped;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Number of isomorphism classes of connected loopless multigraphs with the
// given numbers of vertices and edges, by canonicalizing every multiset of
// vertex pairs.
inline std::size_t count_connected_multigraphs(int vertices, int edges) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < vertices; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  if (vertices == 1) return edges == 0 ? 1 : 0;
  std::set<EdgeList> classes;
  std::vector<std::size_t> pick(edges, 0);
  while (true) {
    EdgeList e;
    for (std::size_t p : pick) e.push_back(pairs[p]);
    if (connected(vertices, e)) classes.insert(canonical_form(vertices, e));
    int k = edges - 1;
    while (k >= 0 && pick[k] == pairs.size() - 1) --k;
    if (k < 0) break;
    ++pick[k];
    for (int t = k + 1; t < edges; ++t) pick[t] = pick[k];
  }
  return classes.size();
}

}  // namespace oracle

#endif  // PRYMDICE_TESTS_TEST_ORACLES_H_
