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

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/monomial.hpp"

namespace alexdual {

// A monomial ideal held by its unique minimal generating set G(I), sorted
// by degree then lexicographically. The zero ideal has no generators; the
// unit ideal is not representable.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(int num_vars);
  // Minimalizes an arbitrary generating list (may be empty -> zero ideal).
  static MonomialIdeal generatedBy(int num_vars, std::vector<Monomial> gens);

  int numVars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool isZero() const noexcept { return gens_.empty(); }
  bool isSquarefree() const noexcept;
  // Degree shared by all generators, if any.
  std::optional<int> commonDegree() const noexcept;
  int minDegree() const;
  int maxDegree() const;
  bool contains(const Monomial& m) const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

// Drops every monomial divisible by another. The list must be non-empty
// and live in one ring.
MonomialIdeal minimalize(std::span<const Monomial> monomials);

MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex);
MonomialIdeal facetIdeal(const SimplicialComplex& complex);

enum class ComplexMode { kStanleyReisner, kFacet };

// kStanleyReisner: the complex whose faces are the sets F with x_F not in I.
// kFacet: facets are the supports of G(I).
SimplicialComplex complexFromIdeal(const MonomialIdeal& ideal,
                                   ComplexMode mode);

struct LinearQuotientOptions {
  std::chrono::milliseconds timeout{30'000};
  std::size_t max_states = std::size_t{1} << 22;
};

// An ordering of G(I) whose successive colon ideals are generated by
// variables, or nullopt when none exists. Throws ResourceError when the
// search budget runs out before an answer is known.
std::optional<std::vector<Monomial>> linearQuotientsOrder(
    const MonomialIdeal& ideal, const LinearQuotientOptions& options = {});

// Independent check: `order` is a permutation of G(I) and each colon
// (f_1, ..., f_{i-1}) : f_i, computed from its generators f_j / gcd(f_j, f_i),
// is generated by variables.
bool isLinearQuotientsOrder(const MonomialIdeal& ideal,
                            std::span<const Monomial> order);

MonomialIdeal power(const MonomialIdeal& ideal, int k);

struct GradedComponentOptions {
  // j may exceed the smallest generator degree by at most this much.
  int max_degree_above_min = 8;
};

// The ideal generated by the degree-j part of L.
MonomialIdeal gradedComponentIdeal(const MonomialIdeal& ideal, int j,
                                   const GradedComponentOptions& options = {});

// I^{<=a}: generators x^b of G(I) with b <= a componentwise.
MonomialIdeal restrictIdeal(const MonomialIdeal& ideal,
                            std::span<const int> bound);

// All squarefree monomials of degree ell + 1 in n variables divisible by a
// generator of the quadratic squarefree ideal `one_skeleton`.
MonomialIdeal skeletonIdealFromOneSkeleton(const MonomialIdeal& one_skeleton,
                                           int ell, int n);

std::string toString(const MonomialIdeal& ideal);

}  // namespace alexdual
