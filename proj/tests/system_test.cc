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
#include "prymdice/system.h"
#include "test_oracles.h"

namespace prymdice {
namespace {

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = static_cast<long long>(m(r, c));
  }
  return d;
}

// U * A with columns permuted and negated: column j of A lands at target[j].
IntMatrix scramble(const IntMatrix& a, const IntMatrix& u,
                   const std::vector<std::size_t>& target,
                   const std::vector<int>& sign) {
  const IntMatrix ua = u * a;
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, target[j]) = sign[j] * ua(r, j);
  }
  return out;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int step = 0; step < 12; ++step) {
    const std::size_t a = row(rng), b = row(rng);
    if (a != b) u.add_row_multiple(a, b, factor(rng));
  }
  return u;
}

TEST_SUITE("system") {

TEST_CASE("constructor contract") {
  CHECK_THROWS_AS(UnimodularSystem(IntMatrix{{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularSystem(IntMatrix{{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularSystem(IntMatrix{{1, 0, -1}, {0, 1, 0}}), std::invalid_argument);
  CHECK_NOTHROW(UnimodularSystem::with_repeats(IntMatrix{{1, 0, -1}, {0, 1, 0}}));
  CHECK_THROWS_AS(UnimodularSystem::with_repeats(IntMatrix{{1, 1}, {1, 1}}),
                  std::invalid_argument);
  const UnimodularSystem s(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.size() == 3);
}

TEST_CASE("E5 is totally unimodular") {
  const TUCertificate cert = is_totally_unimodular(e5());
  CHECK(cert.totally_unimodular);
  CHECK_FALSE(cert.violation.has_value());
  // Every minor of every size: sum over k of C(5,k) C(10,k).
  std::size_t all = 0;
  for (std::size_t k = 1; k <= 5; ++k) all += binomial(5, k) * binomial(10, k);
  CHECK(cert.minors_checked == all);
  CHECK(oracle::all_minors_tu(dense(e5().vectors())));
  CHECK(dicing_is_lattice(e5()));
}

TEST_CASE("violations are reported with their determinant") {
  const TUCertificate cert = is_totally_unimodular(IntMatrix{{1, 1}, {1, -1}});
  CHECK_FALSE(cert.totally_unimodular);
  REQUIRE(cert.violation.has_value());
  CHECK(cert.violation->determinant == -2);
  CHECK(cert.violation->rows == std::vector<std::size_t>{0, 1});
  const TUCertificate entry = is_totally_unimodular(IntMatrix{{1, 0}, {0, 3}});
  CHECK(entry.violation->determinant == 3);
  CHECK(entry.violation->rows == std::vector<std::size_t>{1});
}

TEST_CASE("TU checker agrees with the all-minors oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> dim_r(1, 4), dim_c(1, 5), entry(-1, 1);
    IntMatrix m(dim_r(rng), dim_c(rng));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    }
    const TUCertificate cert = is_totally_unimodular(m);
    CHECK(cert.totally_unimodular == oracle::all_minors_tu(dense(m)));
    if (cert.violation) {
      const Minor minor{cert.violation->rows, cert.violation->cols,
                        m.submatrix(cert.violation->rows, cert.violation->cols)};
      CHECK(oracle::laplace_det(dense(minor.matrix)) == cert.violation->determinant);
    }
  }
}

TEST_CASE("column reduction") {
  const IntMatrix m{{1, 0, -1, 0, 2}, {1, 0, -1, 1, 2}};
  const ColumnReduction r = reduce_columns(m);
  CHECK(r.kept == std::vector<std::size_t>{0, 3, 4});
  CHECK(r.dropped_zero == std::vector<std::size_t>{1});
  CHECK(r.representative[2] == 0);
  CHECK(r.sign[2] == -1);
  CHECK(r.multiplicity == std::vector<std::size_t>{2, 1, 1});
  const IntMatrix neg{{-1, 0}, {1, 1}};
  CHECK(reduce_columns(neg).matrix == IntMatrix{{1, 0}, {-1, 1}});
}

TEST_CASE("standard form") {
  const auto sf = standard_form(e5().vectors());
  REQUIRE(sf.has_value());
  CHECK(sf->basis == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(sf->matrix == e5().vectors());
  CHECK_FALSE(standard_form(IntMatrix{{1, 1}, {1, -1}}).has_value());
  const IntMatrix u{{1, 1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 2, 0},
                    {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}};
  const auto moved = standard_form(u * e5().vectors());
  REQUIRE(moved.has_value());
  CHECK(moved->matrix == e5().vectors());
}

TEST_CASE("transformations compose and invert") {
  std::mt19937 rng(17);
  const IntMatrix a = e5().vectors();
  std::vector<std::size_t> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sign(10, 1);
  sign[3] = -1;
  const IntMatrix u = random_unimodular(rng, 5);
  const IntMatrix b = scramble(a, u, perm, sign);
  const SystemTransformation t{u, perm, sign};
  CHECK(verify_transformation(a, b, t));
  CHECK(verify_transformation(b, a, inverse(t)));
  const SystemTransformation round = compose(t, inverse(t));
  CHECK(round.u == IntMatrix::identity(5));
  CHECK(verify_transformation(a, a, round));
  SystemTransformation broken = t;
  broken.column_sign[0] = -broken.column_sign[0];
  CHECK_FALSE(verify_transformation(a, b, broken));
}

TEST_CASE("equivalence finds scrambled copies") {
  std::mt19937 rng(4242);
  const IntMatrix a = e5().vectors();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> sign(10);
    for (int& s : sign) s = (rng() & 1) ? 1 : -1;
    const IntMatrix b = scramble(a, random_unimodular(rng, 5), perm, sign);
    const auto t = systems_equivalent(a, b);
    REQUIRE(t.has_value());
    CHECK(verify_transformation(a, b, *t));
  }
}

TEST_CASE("equivalence rejects different systems") {
  // Same shape as E5, different column matroid.
  const IntMatrix other{{1, 0, 0, 0, 0, 1, 0, 0, 0, 1},
                        {0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
                        {0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
                        {0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
                        {0, 0, 0, 0, 1, 0, 0, 0, 1, 1}};
  CHECK_FALSE(systems_equivalent(e5().vectors(), other).has_value());
  CHECK_THROWS_AS(systems_equivalent(e5().vectors(), IntMatrix::identity(4)),
                  std::invalid_argument);
  // Not even in the same lattice: a column scaled by 2 cannot be reached.
  IntMatrix doubled = e5().vectors();
  for (std::size_t r = 0; r < 5; ++r) doubled(r, 9) *= 2;
  CHECK_FALSE(systems_equivalent(e5().vectors(), doubled).has_value());
}

TEST_CASE("greedy column basis") {
  CHECK(greedy_column_basis(IntMatrix{{0, 1, 1}, {0, 1, 2}}) ==
        std::vector<std::size_t>{1, 2});
  CHECK(greedy_column_basis(e5().vectors()) == std::vector<std::size_t>{0, 1, 2, 3, 4});
}

}  // TEST_SUITE

}  // namespace
}  // namespace prymdice
