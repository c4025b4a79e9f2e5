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

#include "prymdice/report.h"

#include <limits>
#include <sstream>

namespace prymdice {

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(value);
  }
  return to_string(value);
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json labels_json(const MultiGraph& g, const std::vector<std::size_t>& edges) {
  Json out = Json::array();
  for (std::size_t e : edges) out.push_back(g.edge(e).label);
  return out;
}

Json vertex_names_json(const MultiGraph& g,
                       const std::vector<std::size_t>& vertices) {
  Json out = Json::array();
  for (std::size_t v : vertices) out.push_back(g.vertex_name(v));
  return out;
}

Json tu_certificate_json(const TUCertificate& cert) {
  Json j;
  j["totally_unimodular"] = cert.totally_unimodular;
  j["minors_checked"] = cert.minors_checked;
  if (cert.violation) {
    j["violating_minor"] = {{"rows", cert.violation->rows},
                            {"cols", cert.violation->cols},
                            {"determinant", integer_json(cert.violation->determinant)}};
  } else {
    j["violating_minor"] = nullptr;
  }
  return j;
}

Json transformation_json(const SystemTransformation& t) {
  return {{"u", matrix_json(t.u)},
          {"column_target", t.column_target},
          {"column_sign", t.column_sign}};
}

Json search_report_json(const CographicSearchReport& report) {
  Json components = Json::array();
  for (const ComponentSearch& c : report.components) {
    components.push_back({{"elements", c.elements},
                          {"rank", c.rank},
                          {"vertex_rank", c.vertex_rank},
                          {"graphs_enumerated", c.graphs_enumerated},
                          {"connected_graphs", c.connected_graphs},
                          {"rejected_bridge", c.rejected_bridge},
                          {"rejected_invariants", c.rejected_invariants},
                          {"isomorphism_searches", c.isomorphism_searches},
                          {"realized", c.realized}});
  }
  return {{"columns", report.columns},
          {"rank", report.rank},
          {"zero_columns", report.zero_columns},
          {"coloops", report.coloops},
          {"graphs_enumerated", report.graphs_enumerated},
          {"max_graphs", report.max_graphs},
          {"components", std::move(components)}};
}

Json cographic_certificate_json(const CographicCertificate& cert) {
  Json j;
  j["cographic"] = cert.cographic;
  j["witness"] = cert.witness ? Json(serialize_graph(*cert.witness)) : Json(nullptr);
  j["column_to_edge"] = cert.column_to_edge;
  j["search"] = search_report_json(cert.report);
  return j;
}

Json vologodsky_json(const MultiGraph& g, const VologodskyResult& result) {
  Json j;
  j["passed"] = result.passed;
  j["invariant_connected_sets"] = result.invariant_connected_sets;
  j["pairs_examined"] = result.pairs_examined;
  if (result.witness) {
    j["witness"] = {
        {"subgraph0", vertex_names_json(g, result.witness->subgraph0)},
        {"subgraph1", vertex_names_json(g, result.witness->subgraph1)},
        {"connecting_edges", labels_json(g, result.witness->connecting_edges)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json transcribed_basis_json(const TranscribedBasisReport& report) {
  Json identities = Json::array();
  for (const LIdentityCheck& id : report.identities) {
    identities.push_back({{"name", id.name},
                          {"first", id.first},
                          {"second", id.second},
                          {"sign", id.sign ? Json(*id.sign) : Json(nullptr)}});
  }
  std::size_t printed_cycles = 0;
  for (bool b : report.printed_is_cycle) printed_cycles += b;
  return {{"h_names", report.h_names},
          {"h_is_cycle", report.h_is_cycle},
          {"h_rank", report.h_rank},
          {"h_are_fundamental_cycles", report.h_are_fundamental_cycles},
          {"printed_signs_that_are_cycles", printed_cycles},
          {"printed_sign_mismatches", report.printed_sign_mismatches},
          {"l_identities", std::move(identities)},
          {"l_rank", report.l_rank},
          {"h1_in_l_lattice", report.h1_in_l_lattice},
          {"lattices_equal", report.lattices_equal},
          {"failures", report.failures}};
}

namespace {

bool contains_object(const Json& j) {
  if (j.is_object()) return true;
  if (!j.is_array()) return false;
  for (const Json& x : j) {
    if (contains_object(x)) return true;
  }
  return false;
}

void emit(const Json& j, const std::string& pointer, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = it.key();
      std::string escaped;
      for (char c : key) {
        if (c == '~') escaped += "~0";
        else if (c == '/') escaped += "~1";
        else escaped += c;
      }
      emit(it.value(), pointer + "/" + escaped, out);
    }
    return;
  }
  if (j.is_array() && contains_object(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      emit(j[i], pointer + "/" + std::to_string(i), out);
    }
    return;
  }
  out << pointer << " = " << j.dump() << '\n';
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  emit(doc, "", out);
  const Json::json_pointer verdict("/result/verdict");
  if (doc.contains(verdict)) out << doc.at(verdict).get<std::string>() << '\n';
  return out.str();
}

Json parse_text(std::string_view text) {
  Json doc = Json::object();
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] != '/') continue;
    const std::size_t split = line.find(" = ");
    if (split == std::string::npos) {
      throw ParseError(0, "report line without ' = ': " + line);
    }
    Json::json_pointer pointer(line.substr(0, split));
    Json value = Json::parse(line.substr(split + 3));
    // Arrays of objects were expanded element by element.
    doc[pointer] = std::move(value);
  }
  return doc;
}

}  // namespace prymdice
