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

#include "alexdual/graph.hpp"

#include <algorithm>
#include <deque>

#include "alexdual/errors.hpp"
#include "alexdual/quasitree.hpp"

namespace alexdual {
namespace {

void requireVertex(int n, int v) {
  if (v < 1 || v > n) {
    throw DomainError("vertex " + std::to_string(v) + " outside [1," +
                      std::to_string(n) + "]");
  }
}

// Shortest a-b path avoiding `blocked`, as a vertex list; empty if none.
std::vector<int> shortestPath(const Graph& g, int a, int b, Mask blocked) {
  const int n = g.numVertices();
  std::vector<int> prev(n + 1, 0);
  std::deque<int> queue{a};
  Mask seen = bits::vertexBit(a) | blocked;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == b) break;
    for (int w : bits::members(g.neighbors(v) & ~seen)) {
      seen |= bits::vertexBit(w);
      prev[w] = v;
      queue.push_back(w);
    }
  }
  if (prev[b] == 0) return {};
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// v, a, b with a, b non-adjacent neighbours of v: a shortest a-b path that
// avoids the rest of N[v] closes a chordless cycle through v.
std::vector<int> cycleThrough(const Graph& g, int v, int a, int b) {
  const Mask blocked = (g.neighbors(v) | bits::vertexBit(v)) &
                       ~(bits::vertexBit(a) | bits::vertexBit(b));
  std::vector<int> path = shortestPath(g, a, b, blocked);
  if (path.empty()) return {};
  path.insert(path.begin(), v);
  return path;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("graph size " + std::to_string(n) + " outside [0,64]");
  }
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    requireVertex(n, u);
    requireVertex(n, v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (adj_[u - 1] & bits::vertexBit(v)) {
      throw DomainError("repeated edge {" + std::to_string(u) + "," +
                        std::to_string(v) + "}");
    }
    adj_[u - 1] |= bits::vertexBit(v);
    adj_[v - 1] |= bits::vertexBit(u);
  }
}

Graph Graph::fromAdjacency(std::vector<Mask> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > kMaxVertices) throw DomainError("graph limited to 64 vertices");
  for (int v = 1; v <= n; ++v) {
    const Mask nb = adjacency[v - 1];
    if ((nb & ~bits::lowMask(n)) != 0 || (nb & bits::vertexBit(v)) != 0) {
      throw DomainError("adjacency row " + std::to_string(v) + " is invalid");
    }
    for (int w : bits::members(nb)) {
      if (!(adjacency[w - 1] & bits::vertexBit(v))) {
        throw DomainError("adjacency is not symmetric");
      }
    }
  }
  Graph g;
  g.adj_ = std::move(adjacency);
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= numVertices(); ++u) {
    for (int v : bits::members(adj_[u - 1] & ~bits::lowMask(u))) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::numEdges() const noexcept {
  std::size_t twice = 0;
  for (Mask nb : adj_) twice += std::popcount(nb);
  return twice / 2;
}

bool Graph::hasEdge(int u, int v) const {
  requireVertex(numVertices(), u);
  requireVertex(numVertices(), v);
  return (adj_[u - 1] & bits::vertexBit(v)) != 0;
}

bool Graph::isClique(Mask s) const noexcept {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((s & ~bits::vertexBit(v + 1) & ~adj_[v]) != 0) return false;
  }
  return true;
}

ChordalityResult isChordal(const Graph& g) {
  const int n = g.numVertices();
  // Maximum-cardinality search.
  std::vector<int> weight(n + 1, 0);
  std::vector<int> order;
  Mask visited = 0;
  for (int step = 0; step < n; ++step) {
    int best = 0;
    for (int v = 1; v <= n; ++v) {
      if (!(visited & bits::vertexBit(v)) && (best == 0 || weight[v] > weight[best])) {
        best = v;
      }
    }
    order.push_back(best);
    visited |= bits::vertexBit(best);
    for (int w : bits::members(g.neighbors(best) & ~visited)) ++weight[w];
  }

  ChordalityResult result;
  Mask earlier = 0;
  for (int v : order) {
    const Mask back = g.neighbors(v) & earlier;
    if (!g.isClique(back)) {
      for (int a : bits::members(back)) {
        for (int b : bits::members(back & ~g.neighbors(a) & ~bits::lowMask(a))) {
          result.cycle = cycleThrough(g, v, a, b);
          if (!result.cycle.empty()) return result;
        }
      }
      break;
    }
    earlier |= bits::vertexBit(v);
  }
  if (earlier == bits::lowMask(n)) {
    result.chordal = true;
    result.order = std::move(order);
    return result;
  }
  // Fallback: any vertex with two non-adjacent neighbours that close a cycle.
  for (int v = 1; v <= n; ++v) {
    const Mask nb = g.neighbors(v);
    for (int a : bits::members(nb)) {
      for (int b : bits::members(nb & ~g.neighbors(a) & ~bits::lowMask(a))) {
        result.cycle = cycleThrough(g, v, a, b);
        if (!result.cycle.empty()) return result;
      }
    }
  }
  throw std::logic_error("chordality search found neither order nor cycle");
}

bool isCliqueOrder(const Graph& g, const std::vector<int>& order) {
  const int n = g.numVertices();
  if (static_cast<int>(order.size()) != n) return false;
  Mask earlier = 0;
  for (int v : order) {
    if (v < 1 || v > n || (earlier & bits::vertexBit(v))) return false;
    const Mask back = g.neighbors(v) & earlier;
    for (int a : bits::members(back)) {
      for (int b : bits::members(back)) {
        if (a != b && !g.hasEdge(a, b)) return false;
      }
    }
    earlier |= bits::vertexBit(v);
  }
  return true;
}

bool isChordlessCycle(const Graph& g, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  Mask seen = 0;
  for (int v : cycle) {
    if (v < 1 || v > g.numVertices() || (seen & bits::vertexBit(v))) {
      return false;
    }
    seen |= bits::vertexBit(v);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.hasEdge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

Graph complementGraph(const Graph& g) {
  const int n = g.numVertices();
  std::vector<Mask> adj(n);
  for (int v = 1; v <= n; ++v) {
    adj[v - 1] = bits::lowMask(n) & ~g.neighbors(v) & ~bits::vertexBit(v);
  }
  return Graph::fromAdjacency(std::move(adj));
}

MonomialIdeal edgeIdeal(const Graph& g) {
  const int n = g.numVertices();
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    gens.push_back(Monomial::fromMask(n, bits::vertexBit(u) | bits::vertexBit(v)));
  }
  if (gens.empty()) return MonomialIdeal::zero(n);
  return MonomialIdeal::generatedBy(n, std::move(gens));
}

SimplicialComplex cliqueComplex(const Graph& g) {
  const int n = g.numVertices();
  if (n > 24) {
    throw ResourceError("clique complex limited to 24 vertices, got " +
                        std::to_string(n));
  }
  std::vector<Mask> cliques;
  // Bron-Kerbosch with pivoting.
  auto expand = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (p == 0 && x == 0) {
      cliques.push_back(r);
      return;
    }
    int pivot = 0;
    int best = -1;
    for (int u : bits::members(p | x)) {
      const int c = std::popcount(p & g.neighbors(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (int v : bits::members(p & ~g.neighbors(pivot))) {
      const Mask bit = bits::vertexBit(v);
      self(self, r | bit, p & g.neighbors(v), x & g.neighbors(v));
      p &= ~bit;
      x |= bit;
    }
  };
  expand(expand, 0, bits::lowMask(n), 0);
  return SimplicialComplex::fromMasks(n, std::move(cliques));
}

OneSkeleton oneSkeletonGraph(const SimplicialComplex& complex) {
  const int n = complex.ambient();
  std::vector<Mask> adj(n, 0);
  for (Mask f : complex.facetMasks()) {
    for (int v : bits::members(f)) adj[v - 1] |= f & ~bits::vertexBit(v);
  }
  OneSkeleton out{Graph::fromAdjacency(std::move(adj)), {}};
  out.missing_vertices =
      bits::members(bits::lowMask(n) & ~complex.vertexMask());
  return out;
}

HigherDiracReport higherDiracCheck(const SimplicialComplex& complex) {
  const DimensionInfo info = dimensionInfo(complex);
  if (!info.is_pure) throw DomainError("higher Dirac check needs a pure complex");
  HigherDiracReport report;
  report.ell = info.dim;
  const Mask used = complex.vertexMask();
  const Graph gamma = oneSkeletonGraph(complex).graph;
  // Unused ambient vertices would appear as isolated points; drop them.
  const SimplicialComplex flag = cliqueComplex(gamma);
  std::vector<Mask> facets;
  for (Mask f : flag.facetMasks()) {
    if ((f & used) != 0) facets.push_back(f);
  }
  const SimplicialComplex sigma =
      SimplicialComplex::fromMasks(complex.ambient(), std::move(facets));
  const bool skeleton_matches = skeleton(sigma, report.ell) == complex;
  report.side_a = skeleton_matches && isQuasiTree(sigma);
  report.chordal = isChordal(gamma).chordal;
  report.side_b = report.chordal && skeleton_matches;
  return report;
}

std::string toString(const Graph& g) {
  std::string out = "G(" + std::to_string(g.numVertices()) + "; ";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out + ")";
}

}  // namespace alexdual
