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

// Unimodular systems: spanning sets of integer vectors, stored as the columns
// of an n x m matrix, together with total unimodularity and the lattice
// equivalence used to compare them.

#ifndef PRYMDICE_SYSTEM_H_
#define PRYMDICE_SYSTEM_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "prymdice/exactmat.h"

namespace prymdice {

class UnimodularSystem {
 public:
  // Requires rank == rows >= 1, no zero column and no two columns that are
  // equal or opposite. Throws std::invalid_argument otherwise.
  explicit UnimodularSystem(IntMatrix vectors);

  // Same rank requirement, but zero and repeated columns are allowed. Bond
  // systems of graphs with parallel edges need this.
  static UnimodularSystem with_repeats(IntMatrix vectors);

  std::size_t dim() const { return vectors_.rows(); }
  std::size_t size() const { return vectors_.cols(); }
  const IntMatrix& vectors() const { return vectors_; }
  bool allows_repeats() const { return allows_repeats_; }

  friend bool operator==(const UnimodularSystem& a,
                         const UnimodularSystem& b) {
    return a.vectors_ == b.vectors_;
  }

 private:
  UnimodularSystem(IntMatrix vectors, bool allow_repeats);

  IntMatrix vectors_;
  bool allows_repeats_ = false;
};

// The 5 x 10 system [I5 | A] representing the regular matroid R10.
UnimodularSystem e5();

struct ViolatingMinor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Integer determinant;
};

struct TUCertificate {
  bool totally_unimodular = true;
  std::optional<ViolatingMinor> violation;
  std::size_t minors_checked = 0;
};

// Exhaustive: all k x k minors for k = 1, 2, ..., in SquareSubmatrices order.
// The first violation found is returned.
TUCertificate is_totally_unimodular(const IntMatrix& m);
TUCertificate is_totally_unimodular(const UnimodularSystem& s);

// Whether the hyperplane arrangement of S dices space into a lattice. This is
// decided by total unimodularity of the given representation.
bool dicing_is_lattice(const UnimodularSystem& s);

// Lexicographically first column basis, chosen greedily.
std::vector<std::size_t> greedy_column_basis(const IntMatrix& m);

// Result of dropping zero columns and merging columns that agree up to sign.
struct ColumnReduction {
  IntMatrix matrix;                   // kept columns, first nonzero entry > 0
  std::vector<std::size_t> kept;      // original index of each kept column
  std::vector<std::size_t> dropped_zero;
  // For every original column: index into `kept` (or npos when zero) and the
  // sign relating it to the kept representative.
  std::vector<std::size_t> representative;
  std::vector<int> sign;
  std::vector<std::size_t> multiplicity;  // per kept column
};

ColumnReduction reduce_columns(const IntMatrix& m);

// Coordinates of all columns with respect to the greedy column basis B of m,
// i.e. B^-1 m. Present only when |det B| == 1.
struct StandardForm {
  std::vector<std::size_t> basis;
  IntMatrix matrix;
};
std::optional<StandardForm> standard_form(const IntMatrix& m);

// U in GL_n(Z) together with a signed column bijection such that
// U * A.column(j) == column_sign[j] * B.column(column_target[j]).
struct SystemTransformation {
  IntMatrix u;
  std::vector<std::size_t> column_target;
  std::vector<int> column_sign;
};

bool verify_transformation(const IntMatrix& a, const IntMatrix& b,
                           const SystemTransformation& t);
SystemTransformation inverse(const SystemTransformation& t);
// First apply `first` (A -> B), then `second` (B -> C).
SystemTransformation compose(const SystemTransformation& first,
                             const SystemTransformation& second);

// Searches for a transformation carrying A to B. Throws
// std::invalid_argument when the dimensions differ. The returned
// transformation has been checked with verify_transformation.
std::optional<SystemTransformation> systems_equivalent(const IntMatrix& a,
                                                       const IntMatrix& b);
std::optional<SystemTransformation> systems_equivalent(
    const UnimodularSystem& a, const UnimodularSystem& b);

}  // namespace prymdice

#endif  // PRYMDICE_SYSTEM_H_
