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

#include "prymdice/system.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prymdice {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Flips v so its first nonzero entry is positive; returns the factor used
// (0 for the zero vector).
int normalize_sign(std::vector<Integer>& v) {
  for (const Integer& x : v) {
    if (x == 0) continue;
    if (x > 0) return 1;
    for (Integer& y : v) y = -y;
    return -1;
  }
  return 0;
}

// Bareiss on a small matrix whose entries and proper minors are already known
// to lie in {-1, 0, 1}, so every intermediate value fits easily in 64 bits.
long long small_det(std::vector<long long> a, std::size_t k) {
  long long prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p * k + p] == 0) {
      std::size_t swap = p + 1;
      while (swap < k && a[swap * k + p] == 0) ++swap;
      if (swap == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(a[p * k + c], a[swap * k + c]);
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < k; ++r) {
      for (std::size_t c = p + 1; c < k; ++c) {
        a[r * k + c] =
            (a[r * k + c] * a[p * k + p] - a[r * k + p] * a[p * k + c]) / prev;
      }
    }
    prev = a[p * k + p];
  }
  return sign * a[(k - 1) * k + (k - 1)];
}

}  // namespace

// ---------------------------------------------------------- UnimodularSystem

UnimodularSystem::UnimodularSystem(IntMatrix vectors)
    : UnimodularSystem(std::move(vectors), false) {}

UnimodularSystem UnimodularSystem::with_repeats(IntMatrix vectors) {
  return UnimodularSystem(std::move(vectors), true);
}

UnimodularSystem::UnimodularSystem(IntMatrix vectors, bool allow_repeats)
    : vectors_(std::move(vectors)), allows_repeats_(allow_repeats) {
  if (vectors_.rows() == 0 || vectors_.cols() == 0) {
    throw std::invalid_argument("unimodular system must be nonempty");
  }
  if (rank(vectors_) != vectors_.rows()) {
    throw std::invalid_argument("system vectors do not span: rank " +
                                std::to_string(rank(vectors_)) + " < " +
                                std::to_string(vectors_.rows()));
  }
  if (allow_repeats) return;
  std::map<std::vector<Integer>, std::size_t> seen;
  for (std::size_t c = 0; c < vectors_.cols(); ++c) {
    std::vector<Integer> col = vectors_.column(c);
    if (normalize_sign(col) == 0) {
      throw std::invalid_argument("system has a zero column at index " +
                                  std::to_string(c));
    }
    auto [it, inserted] = seen.emplace(std::move(col), c);
    if (!inserted) {
      throw std::invalid_argument(
          "columns " + std::to_string(it->second) + " and " +
          std::to_string(c) + " are equal up to sign");
    }
  }
}

UnimodularSystem e5() {
  return UnimodularSystem(IntMatrix{{1, 0, 0, 0, 0, 1, 0, 0, 1, 1},
                                    {0, 1, 0, 0, 0, 1, 1, 0, 0, 1},
                                    {0, 0, 1, 0, 0, 0, 1, 1, 0, 1},
                                    {0, 0, 0, 1, 0, 0, 0, 1, 1, 1},
                                    {0, 0, 0, 0, 1, 1, 1, 1, 1, 1}});
}

// -------------------------------------------------------------------- TU

TUCertificate is_totally_unimodular(const IntMatrix& m) {
  TUCertificate cert;
  const std::size_t n = m.rows();
  const std::size_t k_max = std::min(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      ++cert.minors_checked;
      if (abs(m(r, c)) > 1) {
        cert.totally_unimodular = false;
        cert.violation = ViolatingMinor{{r}, {c}, m(r, c)};
        return cert;
      }
    }
  }
  std::vector<long long> small(m.rows() * m.cols());
  for (std::size_t i = 0; i < small.size(); ++i) {
    small[i] = static_cast<long long>(m.entries()[i]);
  }
  for (std::size_t k = 2; k <= k_max; ++k) {
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<long long> buf(k * k);
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            buf[i * k + j] = small[rows[i] * m.cols() + cols[j]];
          }
        }
        ++cert.minors_checked;
        const long long d = small_det(buf, k);
        if (d > 1 || d < -1) {
          cert.totally_unimodular = false;
          cert.violation = ViolatingMinor{rows, cols, Integer(d)};
          return cert;
        }
      } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, n));
  }
  return cert;
}

TUCertificate is_totally_unimodular(const UnimodularSystem& s) {
  return is_totally_unimodular(s.vectors());
}

bool dicing_is_lattice(const UnimodularSystem& s) {
  return is_totally_unimodular(s).totally_unimodular;
}

// ------------------------------------------------------------ column tools

std::vector<std::size_t> greedy_column_basis(const IntMatrix& m) {
  std::vector<std::size_t> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    basis.push_back(c);
    if (rank(m.select_columns(basis)) < basis.size()) basis.pop_back();
  }
  return basis;
}

ColumnReduction reduce_columns(const IntMatrix& m) {
  ColumnReduction out;
  out.representative.assign(m.cols(), kNone);
  out.sign.assign(m.cols(), 0);
  std::map<std::vector<Integer>, std::size_t> index;
  std::vector<std::vector<Integer>> kept_columns;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Integer> col = m.column(c);
    const int s = normalize_sign(col);
    if (s == 0) {
      out.dropped_zero.push_back(c);
      continue;
    }
    auto it = index.find(col);
    if (it == index.end()) {
      it = index.emplace(col, out.kept.size()).first;
      out.kept.push_back(c);
      out.multiplicity.push_back(0);
      kept_columns.push_back(std::move(col));
    }
    out.representative[c] = it->second;
    out.sign[c] = s;
    ++out.multiplicity[it->second];
  }
  out.matrix = IntMatrix(m.rows(), kept_columns.size());
  for (std::size_t j = 0; j < kept_columns.size(); ++j) {
    for (std::size_t r = 0; r < m.rows(); ++r) out.matrix(r, j) = kept_columns[j][r];
  }
  return out;
}

std::optional<StandardForm> standard_form(const IntMatrix& m) {
  StandardForm out;
  out.basis = greedy_column_basis(m);
  if (out.basis.size() != m.rows()) return std::nullopt;
  const IntMatrix b = m.select_columns(out.basis);
  const Integer d = det(b);
  if (abs(d) != 1) return std::nullopt;
  out.matrix = (adjugate(b) * m).scaled(d);
  return out;
}

// ------------------------------------------------------------ equivalence

bool verify_transformation(const IntMatrix& a, const IntMatrix& b,
                           const SystemTransformation& t) {
  const std::size_t n = a.rows();
  if (b.rows() != n || a.cols() != b.cols() || t.u.rows() != n ||
      t.u.cols() != n || t.column_target.size() != a.cols() ||
      t.column_sign.size() != a.cols()) {
    return false;
  }
  if (abs(det(t.u)) != 1) return false;
  std::vector<bool> hit(b.cols(), false);
  const IntMatrix ua = t.u * a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const std::size_t k = t.column_target[j];
    const int s = t.column_sign[j];
    if (k >= b.cols() || hit[k] || (s != 1 && s != -1)) return false;
    hit[k] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (ua(r, j) != s * b(r, k)) return false;
    }
  }
  return true;
}

SystemTransformation inverse(const SystemTransformation& t) {
  SystemTransformation inv;
  inv.u = adjugate(t.u).scaled(det(t.u));
  inv.column_target.assign(t.column_target.size(), 0);
  inv.column_sign.assign(t.column_sign.size(), 1);
  for (std::size_t j = 0; j < t.column_target.size(); ++j) {
    inv.column_target[t.column_target[j]] = j;
    inv.column_sign[t.column_target[j]] = t.column_sign[j];
  }
  return inv;
}

SystemTransformation compose(const SystemTransformation& first,
                             const SystemTransformation& second) {
  SystemTransformation out;
  out.u = second.u * first.u;
  for (std::size_t j = 0; j < first.column_target.size(); ++j) {
    const std::size_t mid = first.column_target[j];
    out.column_target.push_back(second.column_target[mid]);
    out.column_sign.push_back(first.column_sign[j] * second.column_sign[mid]);
  }
  return out;
}

namespace {

using ColumnSet = std::vector<std::vector<Integer>>;

// Sorted multiset of the first `depth` entries of each column, each taken up
// to sign.
ColumnSet prefix_profile(const std::vector<std::vector<Integer>>& rows,
                         std::size_t depth, std::size_t cols) {
  ColumnSet out(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    out[c].reserve(depth);
    for (std::size_t r = 0; r < depth; ++r) out[c].push_back(rows[r][c]);
    normalize_sign(out[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class EquivalenceSearch {
 public:
  EquivalenceSearch(const IntMatrix& a, const IntMatrix& b) : a_(a), b_(b) {}

  std::optional<SystemTransformation> run() {
    const std::size_t n = a_.rows();
    const std::size_t m = a_.cols();
    if (m != b_.cols()) return std::nullopt;
    if (rank(a_) != n || rank(b_) != n) return std::nullopt;
    const std::vector<std::size_t> alpha = greedy_column_basis(a_);
    const IntMatrix a_alpha = a_.select_columns(alpha);
    const Integer d = det(a_alpha);
    const Integer abs_d = abs(d);
    adj_a_ = adjugate(a_alpha).scaled(sign_of(d));  // |d| * A_alpha^-1
    abs_d_ = abs_d;
    const IntMatrix na = adj_a_ * a_;
    na_rows_.clear();
    for (std::size_t r = 0; r < n; ++r) na_rows_.push_back(na.row(r));

    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    do {
      const IntMatrix b_s = b_.select_columns(s);
      const Integer ds = det(b_s);
      if (abs(ds) != abs_d) continue;
      b_s_ = b_s;
      const IntMatrix nb = adjugate(b_s).scaled(sign_of(ds)) * b_;
      nb_rows_.clear();
      for (std::size_t r = 0; r < n; ++r) nb_rows_.push_back(nb.row(r));
      nb_profiles_.assign(n + 1, {});
      for (std::size_t depth = 1; depth <= n; ++depth) {
        nb_profiles_[depth] = prefix_profile(nb_rows_, depth, m);
      }
      rho_.assign(n, 0);
      row_sign_.assign(n, 1);
      used_.assign(n, false);
      permuted_.assign(n, {});
      if (auto t = assign_row(0)) return t;
    } while (next_combination(s, m));
    return std::nullopt;
  }

 private:
  std::optional<SystemTransformation> assign_row(std::size_t k) {
    const std::size_t n = a_.rows();
    const std::size_t m = a_.cols();
    if (k == n) return finish();
    for (std::size_t src = 0; src < n; ++src) {
      if (used_[src]) continue;
      for (int sgn : {1, -1}) {
        permuted_[k] = na_rows_[src];
        if (sgn < 0) {
          for (Integer& x : permuted_[k]) x = -x;
        }
        if (prefix_profile(permuted_, k + 1, m) != nb_profiles_[k + 1]) continue;
        used_[src] = true;
        rho_[k] = src;
        row_sign_[k] = sgn;
        if (auto t = assign_row(k + 1)) return t;
        used_[src] = false;
      }
    }
    return std::nullopt;
  }

  std::optional<SystemTransformation> finish() {
    const std::size_t n = a_.rows();
    IntMatrix q(n, n);
    for (std::size_t k = 0; k < n; ++k) q(k, rho_[k]) = row_sign_[k];
    IntMatrix w = b_s_ * q * adj_a_;
    IntMatrix u(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (w(r, c) % abs_d_ != 0) return std::nullopt;
        u(r, c) = w(r, c) / abs_d_;
      }
    }
    if (abs(det(u)) != 1) return std::nullopt;

    SystemTransformation t;
    t.u = u;
    const IntMatrix ua = u * a_;
    std::vector<bool> taken(b_.cols(), false);
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      const std::vector<Integer> col = ua.column(j);
      std::size_t found = kNone;
      int found_sign = 0;
      for (int sgn : {1, -1}) {
        for (std::size_t k = 0; k < b_.cols() && found == kNone; ++k) {
          if (taken[k]) continue;
          bool match = true;
          for (std::size_t r = 0; r < n && match; ++r) {
            match = col[r] == sgn * b_(r, k);
          }
          if (match) {
            found = k;
            found_sign = sgn;
          }
        }
        if (found != kNone) break;
      }
      if (found == kNone) return std::nullopt;
      taken[found] = true;
      t.column_target.push_back(found);
      t.column_sign.push_back(found_sign);
    }
    if (!verify_transformation(a_, b_, t)) return std::nullopt;
    return t;
  }

  const IntMatrix& a_;
  const IntMatrix& b_;
  IntMatrix adj_a_;
  Integer abs_d_;
  IntMatrix b_s_;
  std::vector<std::vector<Integer>> na_rows_;
  std::vector<std::vector<Integer>> nb_rows_;
  std::vector<ColumnSet> nb_profiles_;
  std::vector<std::vector<Integer>> permuted_;
  std::vector<std::size_t> rho_;
  std::vector<int> row_sign_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<SystemTransformation> systems_equivalent(const IntMatrix& a,
                                                       const IntMatrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("systems_equivalent: dimension mismatch (" +
                                std::to_string(a.rows()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  return EquivalenceSearch(a, b).run();
}

std::optional<SystemTransformation> systems_equivalent(
    const UnimodularSystem& a, const UnimodularSystem& b) {
  return systems_equivalent(a.vectors(), b.vectors());
}

}  // namespace prymdice
