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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/ideal.hpp"
#include "alexdual/vertex_set.hpp"

namespace alexdual {

// Simple graph on [n], n <= 64. Vertices are 1-based.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph fromAdjacency(std::vector<Mask> adjacency);

  int numVertices() const noexcept { return static_cast<int>(adj_.size()); }
  std::vector<std::pair<int, int>> edges() const;  // sorted, i < j
  std::size_t numEdges() const noexcept;
  bool hasEdge(int u, int v) const;
  // Neighbours of v as a vertex mask (bit v-1 is vertex v).
  Mask neighbors(int v) const { return adj_.at(v - 1); }
  const std::vector<Mask>& adjacency() const noexcept { return adj_; }
  bool isClique(Mask s) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Mask> adj_;
};

struct ChordalityResult {
  bool chordal = false;
  // When chordal: an ordering in which the earlier neighbours of every
  // vertex form a clique (the reverse of a perfect elimination ordering).
  std::vector<int> order;
  // When not chordal: a chordless cycle of length >= 4.
  std::vector<int> cycle;
};

ChordalityResult isChordal(const Graph& g);
bool isCliqueOrder(const Graph& g, const std::vector<int>& order);
bool isChordlessCycle(const Graph& g, const std::vector<int>& cycle);

Graph complementGraph(const Graph& g);
// Zero ideal for an edgeless graph.
MonomialIdeal edgeIdeal(const Graph& g);
// Facets are the maximal cliques. n <= 24.
SimplicialComplex cliqueComplex(const Graph& g);

struct OneSkeleton {
  Graph graph;
  // Vertices of [n] lying in no face; the graph-on-[n] reading needs none.
  std::vector<int> missing_vertices;
};

OneSkeleton oneSkeletonGraph(const SimplicialComplex& complex);

struct HigherDiracReport {
  int ell = 0;
  // Some quasi-tree has Delta as its ell-skeleton; the only candidate is
  // the clique complex of the 1-skeleton.
  bool side_a = false;
  // The 1-skeleton is chordal and Delta is the ell-skeleton of its clique
  // complex.
  bool side_b = false;
  bool chordal = false;
  bool holds() const { return side_a == side_b; }
};

HigherDiracReport higherDiracCheck(const SimplicialComplex& complex);

std::string toString(const Graph& g);

}  // namespace alexdual
