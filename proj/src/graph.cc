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

#include "prymdice/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace prymdice {

// --------------------------------------------------------------- MultiGraph

std::size_t MultiGraph::add_vertex(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty vertex name");
  if (vertex_index_.contains(name)) {
    throw std::invalid_argument("duplicate vertex '" + name + "'");
  }
  vertices_.push_back(name);
  vertex_index_.emplace(std::move(name), vertices_.size() - 1);
  return vertices_.size() - 1;
}

std::size_t MultiGraph::add_edge(std::string label, std::size_t tail,
                                 std::size_t head) {
  if (label.empty()) throw std::invalid_argument("empty edge label");
  if (tail >= vertices_.size() || head >= vertices_.size()) {
    throw std::invalid_argument("edge '" + label +
                                "' references a missing vertex");
  }
  if (edge_index_.contains(label)) {
    throw std::invalid_argument("duplicate edge label '" + label + "'");
  }
  edges_.push_back(Edge{label, tail, head});
  edge_index_.emplace(std::move(label), edges_.size() - 1);
  return edges_.size() - 1;
}

std::size_t MultiGraph::add_edge(std::string label, std::string_view tail,
                                 std::string_view head) {
  auto t = find_vertex(tail);
  auto h = find_vertex(head);
  if (!t || !h) {
    throw std::invalid_argument("edge '" + label + "' references unknown vertex '" +
                                std::string(!t ? tail : head) + "'");
  }
  return add_edge(std::move(label), *t, *h);
}

std::optional<std::size_t> MultiGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MultiGraph::find_edge(std::string_view label) const {
  auto it = edge_index_.find(label);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MultiGraph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::size_t MultiGraph::edge_index(std::string_view label) const {
  if (auto e = find_edge(label)) return *e;
  throw std::invalid_argument("unknown edge '" + std::string(label) + "'");
}

std::size_t MultiGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

std::vector<std::size_t> MultiGraph::incident_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tail == v || edges_[e].head == v) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------- GraphInvolution

GraphInvolution GraphInvolution::identity(const MultiGraph& g) {
  GraphInvolution iota;
  iota.vertex_map_.resize(g.vertex_count());
  std::iota(iota.vertex_map_.begin(), iota.vertex_map_.end(), 0);
  iota.edge_map_.resize(g.edge_count());
  std::iota(iota.edge_map_.begin(), iota.edge_map_.end(), 0);
  iota.edge_sign_.assign(g.edge_count(), 1);
  return iota;
}

GraphInvolution::GraphInvolution(const MultiGraph& g,
                                 std::vector<std::size_t> vertex_map,
                                 std::vector<std::size_t> edge_map,
                                 const std::map<std::size_t, int>& explicit_signs)
    : vertex_map_(std::move(vertex_map)), edge_map_(std::move(edge_map)) {
  using Kind = InvolutionError::Kind;
  if (vertex_map_.size() != g.vertex_count() ||
      edge_map_.size() != g.edge_count()) {
    throw std::invalid_argument("involution maps do not match graph size");
  }
  for (std::size_t v = 0; v < vertex_map_.size(); ++v) {
    if (vertex_map_[v] >= vertex_map_.size() ||
        vertex_map_[vertex_map_[v]] != v) {
      throw InvolutionError(Kind::kVertex, v,
                            "vertex map is not an involution at '" +
                                g.vertex_name(v) + "'");
    }
  }
  edge_sign_.assign(edge_map_.size(), 1);
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    const std::size_t f = edge_map_[e];
    if (f >= edge_map_.size() || edge_map_[f] != e) {
      throw InvolutionError(Kind::kEdge, e,
                            "edge map is not an involution at '" +
                                g.edge(e).label + "'");
    }
    const Edge& src = g.edge(e);
    const Edge& dst = g.edge(f);
    const std::size_t t = vertex_map_[src.tail];
    const std::size_t h = vertex_map_[src.head];
    const bool keeps = (t == dst.tail && h == dst.head);
    const bool flips = (t == dst.head && h == dst.tail);
    if (!keeps && !flips) {
      throw InvolutionError(Kind::kEdge, e,
                            "edge '" + src.label + "' maps to '" + dst.label +
                                "' but their endpoints do not correspond");
    }
    auto given = explicit_signs.find(e);
    if (src.is_loop()) {
      edge_sign_[e] = given == explicit_signs.end() ? 1 : given->second;
    } else {
      edge_sign_[e] = keeps ? 1 : -1;
      if (given != explicit_signs.end() && given->second != edge_sign_[e]) {
        throw InvolutionError(Kind::kEdge, e,
                              "sign given for '" + src.label +
                                  "' contradicts the incidence");
      }
    }
    if (edge_sign_[e] != 1 && edge_sign_[e] != -1) {
      throw InvolutionError(Kind::kEdge, e, "edge sign must be +1 or -1");
    }
  }
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    if (edge_sign_[edge_map_[e]] != edge_sign_[e]) {
      throw InvolutionError(Kind::kEdge, e,
                            "loop '" + g.edge(e).label +
                                "' and its image carry different signs");
    }
  }
}

bool GraphInvolution::is_fixed_point_free() const {
  for (std::size_t v = 0; v < vertex_map_.size(); ++v) {
    if (vertex_map_[v] == v) return false;
  }
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    if (edge_map_[e] == e) return false;
  }
  return true;
}

bool GraphInvolution::is_identity() const {
  for (std::size_t v = 0; v < vertex_map_.size(); ++v) {
    if (vertex_map_[v] != v) return false;
  }
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    if (edge_map_[e] != e || edge_sign_[e] != 1) return false;
  }
  return true;
}

// ------------------------------------------------------------ CochainVector

CochainVector CochainVector::from_integers(const std::vector<Integer>& values) {
  CochainVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = HalfInt(values[i]);
  return v;
}

CochainVector CochainVector::from_twice(const std::vector<Integer>& twice) {
  CochainVector v(twice.size());
  for (std::size_t i = 0; i < twice.size(); ++i) {
    v[i] = HalfInt::from_twice(twice[i]);
  }
  return v;
}

bool CochainVector::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const HalfInt& c) { return c.is_integer(); });
}

bool CochainVector::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const HalfInt& c) { return c.is_zero(); });
}

std::vector<Integer> CochainVector::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(size());
  for (const HalfInt& c : coefficients_) out.push_back(c.integer_value());
  return out;
}

std::vector<Integer> CochainVector::twice_coefficients() const {
  std::vector<Integer> out;
  out.reserve(size());
  for (const HalfInt& c : coefficients_) out.push_back(c.twice());
  return out;
}

std::string CochainVector::to_string(const MultiGraph& g) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    const HalfInt& c = coefficients_[i];
    if (c.is_zero()) continue;
    const bool negative = c.twice() < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    const HalfInt magnitude = negative ? -c : c;
    if (magnitude != HalfInt(1)) out << magnitude.to_string() << '*';
    out << g.edge(i).label;
    first = false;
  }
  return first ? "0" : out.str();
}

CochainVector CochainVector::operator-() const {
  CochainVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = -coefficients_[i];
  return out;
}

CochainVector operator+(const CochainVector& a, const CochainVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("CochainVector: size mismatch");
  }
  CochainVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CochainVector operator-(const CochainVector& a, const CochainVector& b) {
  return a + (-b);
}

CochainVector apply_involution(const GraphInvolution& iota,
                               const CochainVector& v) {
  if (v.size() != iota.edge_count()) {
    throw std::invalid_argument("apply_involution: vector has " +
                                std::to_string(v.size()) +
                                " coefficients, graph has " +
                                std::to_string(iota.edge_count()) + " edges");
  }
  CochainVector out(v.size());
  for (std::size_t e = 0; e < v.size(); ++e) {
    out[iota.edge_image(e)] = Integer(iota.edge_sign(e)) * v[e];
  }
  return out;
}

// ----------------------------------------------------------------- topology

std::vector<std::vector<std::size_t>> components(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const Edge& e : g.edges()) {
    adjacency[e.tail].push_back(e.head);
    adjacency[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (std::size_t w : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

MultiGraph quotient_graph(const MultiGraph& g, const GraphInvolution& iota) {
  MultiGraph q;
  std::vector<std::size_t> vertex_orbit(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t w = iota.vertex_image(v);
    if (w < v) {
      vertex_orbit[v] = vertex_orbit[w];
      continue;
    }
    std::string name = g.vertex_name(v);
    if (w != v) name += "|" + g.vertex_name(w);
    vertex_orbit[v] = q.add_vertex(std::move(name));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t f = iota.edge_image(e);
    if (f < e) continue;
    std::string label = g.edge(e).label;
    if (f != e) label += "|" + g.edge(f).label;
    q.add_edge(std::move(label), vertex_orbit[g.edge(e).tail],
               vertex_orbit[g.edge(e).head]);
  }
  return q;
}

// ----------------------------------------------------------------- file io

namespace {

struct PendingSwap {
  std::string a;
  std::string b;
  std::optional<int> sign;
  std::size_t line;
};

}  // namespace

GraphFile parse_graph(std::string_view text) {
  GraphFile out;
  std::vector<PendingSwap> vertex_swaps;
  std::vector<PendingSwap> edge_swaps;
  std::size_t number = 0;
  std::size_t pos = 0;
  bool seen_edge = false;
  bool seen_iota = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream in(raw);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    try {
      if (kind == "vertex") {
        if (tok.size() != 2) throw ParseError(number, "usage: vertex <name>");
        if (seen_edge || seen_iota) {
          throw ParseError(number, "vertex lines must precede edge lines");
        }
        out.graph.add_vertex(tok[1]);
      } else if (kind == "edge") {
        if (tok.size() != 4) {
          throw ParseError(number, "usage: edge <label> <tail> <head>");
        }
        if (seen_iota) {
          throw ParseError(number, "edge lines must precede the involution");
        }
        seen_edge = true;
        out.graph.add_edge(tok[1], tok[2], tok[3]);
      } else if (kind == "iota_v") {
        if (tok.size() != 3) throw ParseError(number, "usage: iota_v <a> <b>");
        seen_iota = true;
        vertex_swaps.push_back({tok[1], tok[2], std::nullopt, number});
      } else if (kind == "iota_e") {
        if (tok.size() != 3 && tok.size() != 4) {
          throw ParseError(number, "usage: iota_e <e> <f> [+|-]");
        }
        std::optional<int> sign;
        if (tok.size() == 4) {
          if (tok[3] != "+" && tok[3] != "-") {
            throw ParseError(number, "edge sign must be '+' or '-'");
          }
          sign = tok[3] == "+" ? 1 : -1;
        }
        seen_iota = true;
        edge_swaps.push_back({tok[1], tok[2], sign, number});
      } else {
        throw ParseError(number, "unknown directive '" + kind + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& err) {
      throw ParseError(number, err.what());
    }
  }
  if (!seen_iota) return out;

  const MultiGraph& g = out.graph;
  std::vector<std::size_t> vmap(g.vertex_count());
  std::iota(vmap.begin(), vmap.end(), 0);
  std::vector<std::size_t> emap(g.edge_count());
  std::iota(emap.begin(), emap.end(), 0);
  std::vector<std::size_t> vertex_line(g.vertex_count(), 0);
  std::vector<std::size_t> edge_line(g.edge_count(), 0);
  std::map<std::size_t, int> signs;

  for (const PendingSwap& s : vertex_swaps) {
    auto a = g.find_vertex(s.a);
    auto b = g.find_vertex(s.b);
    if (!a || !b) {
      throw ParseError(s.line, "unknown vertex '" + (!a ? s.a : s.b) + "'");
    }
    for (std::size_t v : {*a, *b}) {
      if (vertex_line[v] != 0) {
        throw ParseError(s.line, "vertex '" + g.vertex_name(v) +
                                     "' already mapped on line " +
                                     std::to_string(vertex_line[v]) +
                                     " (map is not an involution)");
      }
    }
    vmap[*a] = *b;
    vmap[*b] = *a;
    vertex_line[*a] = vertex_line[*b] = s.line;
  }
  for (const PendingSwap& s : edge_swaps) {
    auto e = g.find_edge(s.a);
    auto f = g.find_edge(s.b);
    if (!e || !f) {
      throw ParseError(s.line, "unknown edge '" + (!e ? s.a : s.b) + "'");
    }
    for (std::size_t x : {*e, *f}) {
      if (edge_line[x] != 0) {
        throw ParseError(s.line, "edge '" + g.edge(x).label +
                                     "' already mapped on line " +
                                     std::to_string(edge_line[x]) +
                                     " (map is not an involution)");
      }
    }
    emap[*e] = *f;
    emap[*f] = *e;
    edge_line[*e] = edge_line[*f] = s.line;
    if (s.sign) {
      signs[*e] = *s.sign;
      signs[*f] = *s.sign;
    }
  }
  try {
    out.involution.emplace(GraphInvolution(g, vmap, emap, signs));
  } catch (const InvolutionError& err) {
    std::size_t line = err.kind() == InvolutionError::Kind::kVertex
                           ? vertex_line[err.index()]
                           : edge_line[err.index()];
    throw ParseError(line, err.what());
  }
  return out;
}

std::string serialize_graph(const MultiGraph& g, const GraphInvolution* iota) {
  std::ostringstream out;
  for (const std::string& name : g.vertex_names()) out << "vertex " << name << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.label << ' ' << g.vertex_name(e.tail) << ' '
        << g.vertex_name(e.head) << '\n';
  }
  if (iota == nullptr) return out.str();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t w = iota->vertex_image(v);
    if (w >= v) {
      out << "iota_v " << g.vertex_name(v) << ' ' << g.vertex_name(w) << '\n';
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t f = iota->edge_image(e);
    if (f < e) continue;
    out << "iota_e " << g.edge(e).label << ' ' << g.edge(f).label;
    if (g.edge(e).is_loop() && iota->edge_sign(e) < 0) out << " -";
    out << '\n';
  }
  return out.str();
}

}  // namespace prymdice
