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

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/graph.hpp"
#include "alexdual/ideal.hpp"

namespace alexdual::families {

using Rng = std::mt19937_64;

// A downset of the Boolean lattice on [n], n <= 6: bit s is set iff the
// subset with mask s is a face. 0 is the void complex, 1 is {emptyset}.
using FaceSet = std::uint64_t;

inline constexpr int kMaxDownsetVertices = 6;

// Visits every downset of B_n (Dedekind number many).
void forEachDownset(int n, const std::function<void(FaceSet)>& fn);
std::vector<FaceSet> downsets(int n);

SimplicialComplex complexFromFaceSet(int n, FaceSet faces);
FaceSet faceSetOf(const SimplicialComplex& complex);

// Image of a downset under a vertex permutation (perm[v] is the 0-based
// image of 0-based vertex v).
FaceSet permuteFaceSet(int n, FaceSet faces, const std::vector<int>& perm);
// True iff `faces` is numerically smallest in its orbit under S_n.
bool isCanonicalFaceSet(int n, FaceSet faces);
// Size of the stabilizer of `faces` in S_n.
std::size_t stabilizerSize(int n, FaceSet faces);

// One downset per isomorphism class, ascending.
std::vector<FaceSet> downsetClassRepresentatives(int n);

// Antichains of nonempty sets of size <= max_size on [n] with between
// min_facets and max_facets members whose union is all of [n].
std::vector<SimplicialComplex> smallComplexes(int n, int max_size,
                                              std::size_t min_facets,
                                              std::size_t max_facets);

// All graphs on [n] (n <= 7), as adjacency masks; 2^C(n,2) of them.
void forEachGraph(int n, const std::function<void(const Graph&)>& fn);

// All chordal graphs on [n] (n <= 7), built by attaching a new vertex to a
// clique, one vertex at a time.
void forEachChordalGraph(int n, const std::function<void(const Graph&)>& fn);

std::vector<int> randomPermutation(Rng& rng, int n);
SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::vector<int>& perm);

// Random subsets of [n] (each vertex kept with probability p), minimalized.
SimplicialComplex randomComplex(Rng& rng, int n, std::size_t max_facets,
                                double p = 0.5);
// `t` distinct random d-subsets of [n]; if `grow`, each new facet shares
// d-1 vertices with an earlier one where possible.
SimplicialComplex randomPureComplex(Rng& rng, int n, int d, std::size_t t,
                                    bool grow);
// Random quasi-tree on at most n vertices with at most `max_facets`
// facets: each new facet is S + fresh vertices with S a proper subset of
// an existing facet. Vertices are then shuffled within [n].
SimplicialComplex randomQuasiTree(Rng& rng, int n, std::size_t max_facets,
                                  int max_facet_size = 4);
Graph randomGraph(Rng& rng, int n, double p);
// Built by adding simplicial vertices, then relabelled.
Graph randomChordalGraph(Rng& rng, int n);
// Clique complex of a random graph.
SimplicialComplex randomFlagComplex(Rng& rng, int n, double p);

// Ideal generated in one degree with linear quotients in generation order,
// hence with a linear resolution.
MonomialIdeal randomLinearQuotientIdeal(Rng& rng, int n, int degree,
                                        std::size_t max_gens, int max_exp);
// Random monomials with exponents <= max_exp, minimalized; never zero.
MonomialIdeal randomIdeal(Rng& rng, int n, std::size_t gens, int max_exp,
                          int max_degree);

}  // namespace alexdual::families
