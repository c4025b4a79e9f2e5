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

#include "prymdice/cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prymdice/cographic.h"
#include "prymdice/homology.h"
#include "prymdice/prym.h"
#include "prymdice/report.h"
#include "prymdice/segre.h"
#include "prymdice/system.h"

namespace prymdice {
namespace {

// Input problems that are not tied to a line of a file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool verbose = false;
  std::string output;
  std::string tree;
  std::size_t max_graphs = kDefaultMaxGraphs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Wraps parse errors with the file name.
template <typename T, typename Fn>
T parse_file(const std::string& path, Fn&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

GraphFile load_graph(const std::string& path) {
  return parse_file<GraphFile>(path, [](const std::string& t) { return parse_graph(t); });
}

IntMatrix load_matrix(const std::string& path) {
  return parse_file<IntMatrix>(path,
                               [](const std::string& t) { return parse_int_matrix(t); });
}

std::optional<std::vector<std::size_t>> tree_option(const MultiGraph& g,
                                                    const std::string& labels) {
  if (labels.empty()) return std::nullopt;
  std::vector<std::size_t> edges;
  std::stringstream in(labels);
  for (std::string label; std::getline(in, label, ',');) {
    if (label.empty()) continue;
    auto e = g.find_edge(label);
    if (!e) throw InputError("--tree names unknown edge '" + label + "'");
    edges.push_back(*e);
  }
  return edges;
}

Json document(const char* stage, Json inputs) {
  Json doc;
  doc["stage"] = stage;
  doc["inputs"] = std::move(inputs);
  doc["result"] = Json::object();
  doc["certificate"] = Json::object();
  return doc;
}

// ------------------------------------------------------------- subcommands

Json cmd_cycles(const std::string& path, const Options& opt) {
  const GraphFile file = load_graph(path);
  const MultiGraph& g = file.graph;
  const auto tree = tree_option(g, opt.tree);
  CycleBasis basis;
  try {
    basis = cycle_basis(g, tree);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json doc = document("cycles", {{"graph", path}, {"tree", opt.tree}});
  Json& r = doc["result"];
  r["vertices"] = g.vertex_count();
  r["edges"] = g.edge_count();
  r["components"] = components(g).size();
  r["betti_number"] = basis.size();
  r["tree"] = labels_json(g, basis.tree_edges);
  Json cycles = Json::array();
  bool all_cycles = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const CochainVector c = basis.cycle(i);
    all_cycles = all_cycles && is_cycle(g, c);
    cycles.push_back({{"edge", g.edge(basis.cotree_edges[i]).label},
                      {"cycle", c.to_string(g)}});
  }
  r["cycles"] = std::move(cycles);
  if (opt.verbose) r["coefficients"] = matrix_json(basis.coefficients);
  r["verdict"] = "betti number " + std::to_string(basis.size());
  doc["certificate"]["all_boundaries_zero"] = all_cycles;
  return doc;
}

Json cmd_jacobian(const std::string& path, const Options& opt) {
  const GraphFile file = load_graph(path);
  const MultiGraph& g = file.graph;
  const auto tree = tree_option(g, opt.tree);
  std::optional<CographicDicing> dicing;
  try {
    dicing.emplace(cographic_dicing_system(g, tree));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json doc = document("jacobian-dice", {{"graph", path}, {"tree", opt.tree}});
  Json& r = doc["result"];
  const UnimodularSystem& s = dicing->system;
  r["rank"] = s.dim();
  r["columns"] = s.size();
  r["system"] = matrix_json(s.vectors());
  r["column_edges"] = labels_json(g, dicing->reduction.kept);
  r["multiplicity"] = dicing->reduction.multiplicity;
  r["dropped_bridges"] = labels_json(g, dicing->reduction.dropped_zero);
  const TUCertificate tu = is_totally_unimodular(s);
  r["verdict"] = "cographic dicing system " + std::to_string(s.dim()) + " x " +
                 std::to_string(s.size()) + (tu.totally_unimodular ? ", TU" : ", not TU");
  doc["certificate"] = tu_certificate_json(tu);
  return doc;
}

const GraphInvolution& require_involution(const GraphFile& file,
                                          const std::string& path) {
  if (!file.involution) {
    throw InputError(path + ": no involution (iota_v / iota_e lines) given");
  }
  return *file.involution;
}

Json cmd_prym(const std::string& path, const Options& opt) {
  const GraphFile file = load_graph(path);
  const MultiGraph& g = file.graph;
  const GraphInvolution& iota = require_involution(file, path);
  const auto tree = tree_option(g, opt.tree);
  std::optional<PrymDicing> dicing;
  try {
    dicing.emplace(prym_dicing_system(g, iota, tree));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json doc = document("prym-dice", {{"graph", path}, {"tree", opt.tree}});
  Json& r = doc["result"];
  r["torus_rank"] = dicing->lattice.rank();
  r["lattice_basis_doubled"] = matrix_json(dicing->lattice.doubled());
  Json mult = Json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) mult[g.edge(e).label] = dicing->multipliers[e];
  r["multipliers"] = std::move(mult);
  r["column_edges"] = labels_json(g, dicing->reduction.kept);
  r["dropped_zero"] = labels_json(g, dicing->reduction.dropped_zero);
  if (opt.verbose) r["lattice_coordinates"] = matrix_json(dicing->lattice_coordinates);
  r["standard_basis"] =
      dicing->standard ? Json(dicing->standard->basis) : Json(nullptr);
  r["system"] = matrix_json(dicing->system.vectors());
  r["family_independent"] = dicing->family_independent;
  const TUCertificate tu = is_totally_unimodular(dicing->system);
  std::string verdict = "prym dicing system " + std::to_string(dicing->system.dim()) +
                        " x " + std::to_string(dicing->system.size()) +
                        (tu.totally_unimodular ? ", TU" : ", not TU");
  if (!dicing->family_independent) verdict += "; WARNING: depends on the family";
  r["verdict"] = verdict;
  doc["certificate"]["tu"] = tu_certificate_json(tu);
  doc["certificate"]["vologodsky"] = vologodsky_json(g, vologodsky_check(g, iota));
  return doc;
}

Json cmd_vologodsky(const std::string& path, const Options&) {
  const GraphFile file = load_graph(path);
  const GraphInvolution& iota = require_involution(file, path);
  const VologodskyResult res = vologodsky_check(file.graph, iota);
  Json doc = document("vologodsky", {{"graph", path}});
  doc["result"]["passed"] = res.passed;
  doc["result"]["verdict"] = res.passed ? "pass" : "fail";
  doc["certificate"] = vologodsky_json(file.graph, res);
  return doc;
}

Json cmd_check_tu(const std::string& path, const Options&) {
  const IntMatrix m = load_matrix(path);
  const TUCertificate tu = is_totally_unimodular(m);
  Json doc = document("check-tu", {{"matrix", path}});
  doc["result"]["totally_unimodular"] = tu.totally_unimodular;
  doc["result"]["verdict"] =
      tu.totally_unimodular
          ? std::string("TU")
          : "not TU, minor det = " + to_string(tu.violation->determinant);
  doc["certificate"] = tu_certificate_json(tu);
  return doc;
}

UnimodularSystem as_system(const IntMatrix& m, const std::string& path) {
  try {
    return UnimodularSystem::with_repeats(m);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json cmd_check_cographic(const std::string& path, const Options& opt) {
  const UnimodularSystem s = as_system(load_matrix(path), path);
  const CographicCertificate cert = is_cographic(s, opt.max_graphs);
  Json doc = document("check-cographic", {{"matrix", path}, {"max_graphs", opt.max_graphs}});
  doc["result"]["cographic"] = cert.cographic;
  doc["result"]["graphs_enumerated"] = cert.report.graphs_enumerated;
  doc["result"]["verdict"] = cert.cographic ? "cographic" : "not cographic";
  doc["certificate"] = cographic_certificate_json(cert);
  return doc;
}

Json cmd_equiv(const std::string& path_a, const std::string& path_b, const Options&) {
  const IntMatrix a = load_matrix(path_a);
  const IntMatrix b = load_matrix(path_b);
  if (a.rows() != b.rows()) {
    throw InputError("dimension mismatch: " + std::to_string(a.rows()) + " vs " +
                     std::to_string(b.rows()) + " rows");
  }
  const auto t = systems_equivalent(a, b);
  Json doc = document("equiv", {{"a", path_a}, {"b", path_b}});
  doc["result"]["equivalent"] = t.has_value();
  doc["result"]["verdict"] = t ? "equivalent" : "not equivalent";
  if (t) {
    doc["certificate"] = transformation_json(*t);
    doc["certificate"]["verified"] = verify_transformation(a, b, *t);
  }
  return doc;
}

Json cmd_segre(const Options& opt) {
  const SegreFixture& f = segre_fixture();
  const TranscribedBasisReport basis = validate_transcribed_basis(f);
  const TheoremReport thm = reproduce_theorem(f, opt.max_graphs);
  const IntMatrix transcribed = transcribed_dicing_matrix(f);
  const auto transcribed_to_system = systems_equivalent(transcribed, thm.dicing.system.vectors());

  Json doc = document("segre", {{"fixture", "built-in"}, {"max_graphs", opt.max_graphs}});
  Json& r = doc["result"];
  r["vertices"] = f.cover.vertex_count();
  r["edges"] = f.cover.edge_count();
  r["vologodsky"] = thm.vologodsky.passed ? "pass" : "fail";
  r["family_independent"] = thm.dicing.family_independent;
  r["torus_rank"] = thm.torus_rank;
  r["transcribed_basis_ok"] = basis.ok();
  if (opt.verbose) r["transcribed_basis"] = transcribed_basis_json(basis);
  r["system"] = matrix_json(thm.dicing.system.vectors());
  r["column_edges"] = labels_json(f.cover, thm.dicing.reduction.kept);
  r["transcribed_matrix"] = matrix_json(transcribed);
  r["transcribed_matrix_matches_system"] = transcribed_to_system.has_value();
  r["equivalent_to_e5"] = thm.to_e5.has_value();
  r["e5_cographic"] = thm.e5_cographic.cographic;
  r["e5_graphs_enumerated"] = thm.e5_cographic.report.graphs_enumerated;
  r["conclusion"] = thm.conclusion;
  const bool reproduced = thm.conclusion == kTheoremConclusion;
  r["verdict"] = reproduced ? "system ≡ E5; E5 not cographic"
                            : std::string("not reproduced: ") +
                                  (thm.to_e5 ? "system ≡ E5" : "system ≢ E5") +
                                  (thm.e5_cographic.cographic ? "; E5 cographic"
                                                              : "; E5 not cographic");
  Json& c = doc["certificate"];
  if (thm.to_e5) {
    c["to_e5"] = transformation_json(*thm.to_e5);
    c["to_e5_verified"] =
        verify_transformation(thm.dicing.system.vectors(), e5().vectors(), *thm.to_e5);
  } else {
    c["to_e5"] = nullptr;
  }
  c["vologodsky"] = vologodsky_json(f.cover, thm.vologodsky);
  c["e5_search"] = search_report_json(thm.e5_cographic.report);
  return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle lattices, Prym dicings and unimodular systems of graphs"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "print the JSON document");
  app.add_flag("-v,--verbose", opt.verbose, "include intermediate data");
  app.add_option("-o,--output", opt.output, "write the report to a file");
  app.add_option("--tree", opt.tree, "comma separated spanning forest edge labels");
  app.add_option("--max-graphs", opt.max_graphs, "cap on graphs tried by the cographic search");

  std::string graph_path, matrix_path, matrix_b;
  auto* cycles = app.add_subcommand("cycles", "fundamental cycle basis");
  cycles->add_option("graph", graph_path)->required();
  auto* jacobian = app.add_subcommand("jacobian-dice", "cographic dicing system");
  jacobian->add_option("graph", graph_path)->required();
  auto* prym = app.add_subcommand("prym-dice", "X-, multipliers and dicing system");
  prym->add_option("graph", graph_path)->required();
  auto* volog = app.add_subcommand("vologodsky", "family independence check");
  volog->add_option("graph", graph_path)->required();
  auto* tu = app.add_subcommand("check-tu", "total unimodularity");
  tu->add_option("matrix", matrix_path)->required();
  auto* cog = app.add_subcommand("check-cographic", "cographic recognition");
  cog->add_option("matrix", matrix_path)->required();
  auto* equiv = app.add_subcommand("equiv", "lattice equivalence of two systems");
  equiv->add_option("a", matrix_path)->required();
  equiv->add_option("b", matrix_b)->required();
  auto* segre = app.add_subcommand("segre", "Segre cover pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  Json doc;
  try {
    if (cycles->parsed()) doc = cmd_cycles(graph_path, opt);
    else if (jacobian->parsed()) doc = cmd_jacobian(graph_path, opt);
    else if (prym->parsed()) doc = cmd_prym(graph_path, opt);
    else if (volog->parsed()) doc = cmd_vologodsky(graph_path, opt);
    else if (tu->parsed()) doc = cmd_check_tu(matrix_path, opt);
    else if (cog->parsed()) doc = cmd_check_cographic(matrix_path, opt);
    else if (equiv->parsed()) doc = cmd_equiv(matrix_path, matrix_b, opt);
    else if (segre->parsed()) doc = cmd_segre(opt);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SearchLimitExceeded& e) {
    err << "error: " << e.what() << "; "
        << e.report().graphs_enumerated - 1 << " graphs examined\n";
    return kSearchLimitExceeded;
  } catch (const NotTotallyUnimodular& e) {
    err << "error: input is not totally unimodular (minor det = "
        << to_string(e.certificate().violation->determinant) << ")\n";
    return kNotTotallyUnimodular;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }

  const std::string text = opt.json ? doc.dump(2) + "\n" : render_text(doc);
  if (opt.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kInputError;
    }
  }
  return kOk;
}

}  // namespace prymdice
