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

// JSON views of results and the plain-text report format derived from them.

#ifndef PRYMDICE_REPORT_H_
#define PRYMDICE_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "prymdice/cographic.h"
#include "prymdice/exactmat.h"
#include "prymdice/graph.h"
#include "prymdice/homology.h"
#include "prymdice/prym.h"
#include "prymdice/segre.h"
#include "prymdice/system.h"

namespace prymdice {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& value);
Json matrix_json(const IntMatrix& m);
Json labels_json(const MultiGraph& g, const std::vector<std::size_t>& edges);
Json vertex_names_json(const MultiGraph& g,
                       const std::vector<std::size_t>& vertices);

Json tu_certificate_json(const TUCertificate& cert);
Json transformation_json(const SystemTransformation& t);
Json search_report_json(const CographicSearchReport& report);
Json cographic_certificate_json(const CographicCertificate& cert);
Json vologodsky_json(const MultiGraph& g, const VologodskyResult& result);
Json transcribed_basis_json(const TranscribedBasisReport& report);

// Text form of a {stage, inputs, result, certificate} document: one line
// `<json pointer> = <compact json>` per leaf, where arrays without objects
// count as leaves, followed by the verdict string in /result/verdict.
std::string render_text(const Json& doc);
// Inverse of render_text (the trailing verdict line is skipped).
Json parse_text(std::string_view text);

}  // namespace prymdice

#endif  // PRYMDICE_REPORT_H_
