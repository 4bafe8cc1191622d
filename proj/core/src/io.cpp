// Copyright 2026 The alexdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alexdual/io.hpp"

#include <algorithm>

#include "alexdual/errors.hpp"

namespace alexdual::io {
namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "/" + key, "missing field");
  return *it;
}

long long integer(const Json& j, const std::string& path, long long lo,
                  long long hi) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi) {
    throw ParseError(path, "value " + std::to_string(v) + " outside [" +
                               std::to_string(lo) + "," + std::to_string(hi) +
                               "]");
  }
  return v;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Mask vertexList(const Json& j, int n, const std::string& path) {
  Mask m = 0;
  std::size_t k = 0;
  for (const Json& v : array(j, path)) {
    const std::string at = path + "/" + std::to_string(k++);
    const int x = static_cast<int>(integer(v, at, 1, std::max(n, 1)));
    if (x > n) throw ParseError(at, "vertex outside the ambient set");
    if (m & bits::vertexBit(x)) {
      throw ParseError(at, "duplicate vertex " + std::to_string(x));
    }
    m |= bits::vertexBit(x);
  }
  return m;
}

Json maskJson(Mask m) { return bits::members(m); }

std::string edgeKey(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + "-" + std::to_string(j + 1);
}

}  // namespace

Json parseText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("byte " + std::to_string(e.byte), what);
  }
}

SimplicialComplex complexFromJson(const Json& j,
                                  const ComplexParseOptions& options) {
  const int n = static_cast<int>(
      integer(field(j, "ambient", ""), "/ambient", 0, kMaxVertices));
  const Json& facets = array(field(j, "facets", ""), "/facets");
  std::vector<Mask> masks;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    masks.push_back(vertexList(facets[k], n, "/facets/" + std::to_string(k)));
  }
  if (options.minimalize) {
    return SimplicialComplex::minimalized(n, std::move(masks));
  }
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if (a != b && (masks[a] & ~masks[b]) == 0 &&
          (masks[a] != masks[b] || a > b)) {
        throw ParseError("/facets/" + std::to_string(a),
                         "face " + maskToString(masks[a]) + " lies in facet " +
                             maskToString(masks[b]) + " (use --minimalize)");
      }
    }
  }
  return SimplicialComplex::fromMasks(n, std::move(masks));
}

Json toJson(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (Mask f : complex.facetMasks()) facets.push_back(maskJson(f));
  return {{"ambient", complex.ambient()}, {"facets", facets}};
}

Monomial monomialFromJson(const Json& j, int num_vars,
                          const std::string& path) {
  if (j.is_string()) {
    try {
      return parseMonomial(j.get<std::string>(), num_vars);
    } catch (const DomainError& e) {
      throw ParseError(path, e.what());
    }
  }
  const Json& exps = array(j, path);
  if (static_cast<int>(exps.size()) != num_vars) {
    throw ParseError(path, "expected " + std::to_string(num_vars) +
                               " exponents, got " + std::to_string(exps.size()));
  }
  std::vector<int> e;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    e.push_back(static_cast<int>(
        integer(exps[k], path + "/" + std::to_string(k), 0, 1 << 20)));
  }
  return Monomial(std::move(e));
}

MonomialIdeal idealFromJson(const Json& j) {
  const int n = static_cast<int>(
      integer(field(j, "vars", ""), "/vars", 0, kMaxVertices));
  const Json& gens = array(field(j, "generators", ""), "/generators");
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string path = "/generators/" + std::to_string(k);
    out.push_back(monomialFromJson(gens[k], n, path));
    if (out.back().isOne()) {
      throw ParseError(path, "the unit ideal is not supported");
    }
  }
  if (out.empty()) return MonomialIdeal::zero(n);
  return MonomialIdeal::generatedBy(n, std::move(out));
}

Json toJson(const Monomial& m, bool pretty) {
  if (pretty) return toString(m);
  return m.exponents();
}

Json toJson(const MonomialIdeal& ideal, bool pretty) {
  Json gens = Json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(toJson(g, pretty));
  return {{"vars", ideal.numVars()}, {"generators", gens}};
}

Graph graphFromJson(const Json& j) {
  const int n =
      static_cast<int>(integer(field(j, "n", ""), "/n", 0, kMaxVertices));
  const Json& edges = array(field(j, "edges", ""), "/edges");
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "/edges/" + std::to_string(k);
    const Json& e = array(edges[k], path);
    if (e.size() != 2) throw ParseError(path, "an edge has two endpoints");
    const int u = static_cast<int>(integer(e[0], path + "/0", 1, std::max(n, 1)));
    const int v = static_cast<int>(integer(e[1], path + "/1", 1, std::max(n, 1)));
    if (u > n || v > n) throw ParseError(path, "endpoint outside [1,n]");
    if (u == v) throw ParseError(path, "loops are not allowed");
    if (std::find_if(out.begin(), out.end(), [&](auto p) {
          return (p.first == u && p.second == v) ||
                 (p.first == v && p.second == u);
        }) != out.end()) {
      throw ParseError(path, "repeated edge");
    }
    out.emplace_back(u, v);
  }
  return Graph(n, out);
}

Json toJson(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.numVertices()}, {"edges", edges}};
}

Graph parseGraph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("byte 0", "empty graph6 string");
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] < 63 || text[k] > 126) {
      throw ParseError("byte " + std::to_string(k), "invalid graph6 character");
    }
  }
  if (text[0] == 126) {
    throw ParseError("byte 0", "graphs above 62 vertices are not supported");
  }
  const int n = text[0] - 63;
  const std::size_t needed = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() != needed + 1) {
    throw ParseError("byte " + std::to_string(std::min(text.size(), needed + 1)),
                     "expected " + std::to_string(needed + 1) + " bytes");
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  // Upper triangle, column by column.
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int chunk = text[1 + bit / 6] - 63;
      if (chunk >> (5 - bit % 6) & 1) edges.emplace_back(u + 1, v + 1);
    }
  }
  return Graph(n, edges);
}

std::string toGraph6(const Graph& g) {
  const int n = g.numVertices();
  if (n > 62) throw DomainError("graph6 output limited to 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  int filled = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u) {
      chunk = chunk << 1 | (g.hasEdge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + chunk);
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (chunk << (6 - filled)));
  return out;
}

Json toJson(const BettiTable& table, const MonomialIdeal& ideal) {
  Json entries = Json::array();
  for (const BettiEntry& e : table.entries()) {
    entries.push_back({{"i", e.homological_degree},
                       {"multidegree", e.multidegree},
                       {"rank", e.rank}});
  }
  Json out = {{"vars", table.numVars()}, {"entries", entries}};
  if (table.empty()) {
    out["projdim"] = nullptr;
    out["reg"] = nullptr;
    out["linear"] = nullptr;
  } else {
    const ResolutionSummary s = summarize(table, ideal);
    out["projdim"] = s.projdim;
    out["reg"] = s.reg;
    out["linear"] = s.linear_resolution;
  }
  return out;
}

Json toJson(const RelationTree& tree, bool pretty) {
  Json edges = Json::array();
  Json labels = Json::object();
  for (const RelationEdge& e : tree.edges) {
    edges.push_back({e.i + 1, e.j + 1});
    labels[edgeKey(e.i, e.j)] = {{"u_ij", toJson(e.u_ij, pretty)},
                                 {"u_ji", toJson(e.u_ji, pretty)}};
  }
  Json out = {{"t", tree.num_generators}, {"edges", edges}, {"labels", labels}};
  if (!tree.edges.empty()) out["vars"] = tree.edges.front().u_ij.numVars();
  return out;
}

RelationTree relationTreeFromJson(const Json& j) {
  const auto t = static_cast<std::size_t>(
      integer(field(j, "t", ""), "/t", 1, 64));
  const Json& edges = array(field(j, "edges", ""), "/edges");
  const Json& labels = field(j, "labels", "");
  RelationTree tree{t, {}};
  int n = -1;
  if (j.contains("vars")) {
    n = static_cast<int>(integer(j["vars"], "/vars", 0, kMaxVertices));
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "/edges/" + std::to_string(k);
    const Json& e = array(edges[k], path);
    if (e.size() != 2) throw ParseError(path, "an edge has two endpoints");
    auto a = static_cast<std::size_t>(integer(e[0], path + "/0", 1, t)) - 1;
    auto b = static_cast<std::size_t>(integer(e[1], path + "/1", 1, t)) - 1;
    if (a > b) std::swap(a, b);
    const std::string key = edgeKey(a, b);
    const Json& label = field(labels, key.c_str(), "/labels");
    const Json& uij = field(label, "u_ij", "/labels/" + key);
    if (n < 0) {
      n = uij.is_array() ? static_cast<int>(uij.size()) : kMaxVertices;
    }
    tree.edges.push_back(
        {a, b, monomialFromJson(uij, n, "/labels/" + key + "/u_ij"),
         monomialFromJson(field(label, "u_ji", "/labels/" + key), n,
                          "/labels/" + key + "/u_ji")});
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const RelationEdge& x, const RelationEdge& y) {
              return std::pair{x.i, x.j} < std::pair{y.i, y.j};
            });
  try {
    requireSpanningTree(t, tree.edgePairs());
  } catch (const DomainError& e) {
    throw ParseError("/edges", e.what());
  }
  return tree;
}

Json toJson(const MonomialMatrix& m, bool pretty) {
  Json rows = Json::array();
  for (const MatrixRow& r : m.rows) {
    Json entries = Json::array();
    for (std::size_t c = 0; c < m.num_cols; ++c) {
      if (c == r.i || c == r.j) {
        const SignedMonomial& s = c == r.i ? r.at_i : r.at_j;
        if (pretty) {
          entries.push_back((s.sign < 0 ? "-" : "") + toString(s.value));
        } else {
          entries.push_back({{"sign", s.sign}, {"monomial", s.value.exponents()}});
        }
      } else {
        entries.push_back(pretty ? Json("0") : Json(nullptr));
      }
    }
    rows.push_back({{"label", {r.i + 1, r.j + 1}}, {"entries", entries}});
  }
  return {{"cols", m.num_cols}, {"rows", rows}};
}

}  // namespace alexdual::io
