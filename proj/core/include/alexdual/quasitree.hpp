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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/ideal.hpp"
#include "alexdual/monomial.hpp"

namespace alexdual {

// Facet indices are 0-based throughout this header.

struct LeafReport {
  bool is_leaf = false;
  std::vector<std::size_t> branches;
  VertexSet free_vertices;
};

LeafReport leafReport(const SimplicialComplex& complex, std::size_t f);

// Facets F_1..F_m with each F_i a leaf of <F_1..F_i>, or nullopt if the
// complex is not a quasi-tree. Built by repeatedly removing the leaf of
// highest index, so the returned order prefers low indices early.
std::optional<std::vector<std::size_t>> leafOrder(
    const SimplicialComplex& complex);
bool isLeafOrder(const SimplicialComplex& complex,
                 std::span<const std::size_t> order);
bool isQuasiTree(const SimplicialComplex& complex);

struct SignedMonomial {
  int sign = 1;
  Monomial value;
  friend bool operator==(const SignedMonomial&,
                         const SignedMonomial&) = default;
};

// Row (i, j), i < j, holds +x_{F_i \ F_j} at column i and -x_{F_j \ F_i}
// at column j; every other entry is zero.
struct MatrixRow {
  std::size_t i = 0;
  std::size_t j = 0;
  SignedMonomial at_i;
  SignedMonomial at_j;
};

struct MonomialMatrix {
  std::size_t num_cols = 0;
  std::vector<MatrixRow> rows;
};

MonomialMatrix buildMDelta(const SimplicialComplex& complex);

// The Taylor relation u_ji e_i - u_ij e_j with u_ij = u_i / gcd(u_i, u_j).
struct TaylorRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial u_ij;
  Monomial u_ji;
  friend bool operator==(const TaylorRelation&,
                         const TaylorRelation&) = default;
};

std::vector<TaylorRelation> taylorRelations(const MonomialIdeal& ideal);
// Same, for generators in the given order.
std::vector<TaylorRelation> taylorRelations(std::span<const Monomial> gens);

using RelationEdge = TaylorRelation;

struct RelationTree {
  std::size_t num_generators = 0;
  std::vector<RelationEdge> edges;  // sorted by (i, j)

  std::vector<std::pair<std::size_t, std::size_t>> edgePairs() const;
  friend bool operator==(const RelationTree&, const RelationTree&) = default;
};

// Throws DomainError unless `edges` is a spanning tree on t vertices.
void requireSpanningTree(std::size_t t,
                         std::span<const std::pair<std::size_t, std::size_t>> edges);

// Labels each edge from the facets: u_ij = x_{F_j \ F_i}.
RelationTree labelFromComplex(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges);
// Labels each edge from generators: u_ij = u_i / gcd(u_i, u_j).
RelationTree labelFromGenerators(
    std::span<const Monomial> gens,
    std::span<const std::pair<std::size_t, std::size_t>> edges);

// det M#(j) for every column j, where M# holds the rows of M_Delta picked
// by the tree edges (in edge order) and M#(j) drops column j.
std::vector<SignedMonomial> minorDeterminants(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges);
// Same via Leibniz expansion; t <= 8. Throws std::logic_error if a
// determinant is not a single signed monomial. nullopt entries are zero.
std::vector<std::optional<SignedMonomial>> minorDeterminantsByExpansion(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges);

// |det M#(j)| = x_V / x_{F_j} for all j, V the vertex set of the complex.
bool verifyMinorCertificate(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges);
bool verifyMinorCertificate(const SimplicialComplex& complex,
                            const RelationTree& tree);

// Trees reachable by removing a leaf F_i and joining it to one of its
// branches F_j, over all choices. Sorted by edge list, at most `limit`.
std::vector<RelationTree> relationTrees(const SimplicialComplex& complex,
                                        std::size_t limit = 1000);

// u_i is the product of u_kj over the edges k -> j of the tree oriented
// away from i.
std::vector<Monomial> reconstructGenerators(const RelationTree& tree);

// All labelled spanning trees of K_t (t^(t-2) of them), for small t.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> spanningTrees(
    std::size_t t);

}  // namespace alexdual
