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

#include "alexdual/vertex_set.hpp"

namespace alexdual {

// A simplicial complex on a fixed ground set [n], stored by its facets.
//
// The ambient size is explicit: singletons are not required to be faces,
// so Alexander duals and facet complements are always taken relative to
// the stored n. Facets form an antichain kept in canonical order
// (cardinality, then lexicographic). A complex with no facets is the void
// complex; a complex whose only facet is the empty set is {emptyset}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Validating constructor. Rejects out-of-range vertices, repeated facets
  // and comparable facet pairs.
  SimplicialComplex(int ambient, std::vector<VertexSet> facets);

  static SimplicialComplex fromMasks(int ambient, std::vector<Mask> facets);
  // Drops duplicate and non-maximal faces instead of rejecting them.
  static SimplicialComplex minimalized(int ambient, std::vector<Mask> faces);
  static SimplicialComplex simplex(int ambient);
  static SimplicialComplex voidComplex(int ambient);

  int ambient() const noexcept { return ambient_; }
  std::size_t numFacets() const noexcept { return facets_.size(); }
  std::span<const Mask> facetMasks() const noexcept { return facets_; }
  VertexSet facet(std::size_t i) const { return {ambient_, facets_.at(i)}; }
  std::vector<VertexSet> facets() const;
  bool isVoid() const noexcept { return facets_.empty(); }

  bool isFace(Mask s) const noexcept;
  // Every face, canonically sorted. Throws ResourceError past `max_faces`.
  std::vector<Mask> faces(std::size_t max_faces = std::size_t{1} << 24) const;
  // Union of all facets.
  Mask vertexMask() const noexcept;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  struct Trusted {};
  SimplicialComplex(Trusted, int ambient, std::vector<Mask> facets)
      : ambient_(ambient), facets_(std::move(facets)) {}

  int ambient_ = 0;
  std::vector<Mask> facets_;
};

struct DimensionInfo {
  int dim = -1;
  bool is_pure = true;
};

struct NonfaceReport {
  std::vector<VertexSet> nonfaces;
  bool is_flag = false;
};

// Facets are the (i+1)-element faces. Requires i <= dim.
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);

DimensionInfo dimensionInfo(const SimplicialComplex& complex);

// For pure complex of facet size d: the complex whose facets are the
// d-subsets of [n] that are not faces. May be void.
SimplicialComplex pureComplement(const SimplicialComplex& complex);

// Faces are the complements of nonfaces. std::nullopt is the void dual of
// the full simplex.
std::optional<SimplicialComplex> alexanderDual(
    const SimplicialComplex& complex);

// Facets are the complements of the facets.
SimplicialComplex complementComplex(const SimplicialComplex& complex);

NonfaceReport minimalNonfaces(const SimplicialComplex& complex);
// Same search, bare masks in canonical order.
std::vector<Mask> minimalNonfaceMasks(const SimplicialComplex& complex);

bool containsFace(const SimplicialComplex& complex, const VertexSet& face);

// Shared invariant check: facets in range, canonical order, antichain.
bool satisfiesInvariants(const SimplicialComplex& complex);

// ⟨F_k : k in keep⟩, indices into facetMasks().
SimplicialComplex subcomplex(const SimplicialComplex& complex,
                             std::span<const std::size_t> keep);

std::string toString(const SimplicialComplex& complex);

}  // namespace alexdual
