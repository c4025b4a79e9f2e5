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

// The double cover of the pentagon of lines coming from the Segre cubic
// threefold, with its transcribed cycle data, and the pipeline that turns it
// into a dicing system and compares that system with E5.

#ifndef PRYMDICE_SEGRE_H_
#define PRYMDICE_SEGRE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prymdice/cographic.h"
#include "prymdice/graph.h"
#include "prymdice/prym.h"
#include "prymdice/system.h"

namespace prymdice {

struct PrintedTerm {
  int sign;
  std::string edge;
};

// A cycle exactly as transcribed: named edges with signs.
struct PrintedVector {
  std::string name;
  std::vector<PrintedTerm> terms;
};

// l_i = pi-(first) and, by the second expression, also pi-(second).
struct LIdentity {
  std::string name;
  std::string first;
  std::string second;
};

struct SegreFixture {
  MultiGraph cover;  // vertices a1..a5, b1..b5; edges e1..e10, e1'..e10'
  GraphInvolution involution;
  std::vector<std::size_t> tree;
  std::vector<PrintedVector> printed_h;
  // The cycle on each printed support whose coefficient on its single
  // non-tree edge is +1. Same order as printed_h.
  std::vector<CochainVector> h_basis;
  std::array<LIdentity, 5> l_identities;
  std::vector<CochainVector> l_basis;  // pi-(first) of each identity

  std::size_t h_index(const std::string& name) const;
  // The printed signs taken literally (these need not form a cycle).
  CochainVector printed_vector(std::size_t i) const;
};

// Built once; construction validates every transcribed datum and throws
// std::logic_error on any inconsistency.
const SegreFixture& segre_fixture();

// Graph file text of the fixture cover and involution.
std::string segre_graph_text();

struct LIdentityCheck {
  std::string name;
  std::string first;
  std::string second;
  // pi-(first) == sign * pi-(second) for this sign, if either sign works.
  std::optional<int> sign;
};

struct TranscribedBasisReport {
  std::vector<std::string> h_names;
  std::vector<bool> h_is_cycle;            // repaired vectors
  std::vector<bool> printed_is_cycle;      // literal printed signs
  std::size_t printed_sign_mismatches = 0; // coefficients the repair flipped
  bool h_are_fundamental_cycles = false;   // of the transcribed tree
  std::size_t h_rank = 0;
  std::vector<LIdentityCheck> identities;
  std::size_t l_rank = 0;
  bool h1_in_l_lattice = false;
  IntMatrix l_lattice_hnf;      // doubled basis
  IntMatrix x_minus_hnf;        // doubled basis, from the tree cycle basis
  bool lattices_equal = false;
  std::vector<std::string> failures;  // empty when everything checks

  bool ok() const { return failures.empty(); }
};

TranscribedBasisReport validate_transcribed_basis(const SegreFixture& f);

// (a_ij): row i is m_j times the coefficient of l_i on e_j, j = 1..10.
IntMatrix transcribed_dicing_matrix(const SegreFixture& f);

// Raised when a pipeline stage fails; carries the stage name.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct TheoremReport {
  VologodskyResult vologodsky;
  std::size_t torus_rank = 0;
  PrymDicing dicing;
  std::optional<SystemTransformation> to_e5;
  CographicCertificate e5_cographic;
  std::string conclusion;
};

inline constexpr const char* kTheoremConclusion = "non-cographic dicing obtained";

// Failures inside a stage are rethrown as StageError, except that
// SearchLimitExceeded from the cographic search passes through unchanged.
TheoremReport reproduce_theorem(const SegreFixture& f,
                                std::size_t max_graphs = kDefaultMaxGraphs);

}  // namespace prymdice

#endif  // PRYMDICE_SEGRE_H_
