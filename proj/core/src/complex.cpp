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

#include "alexdual/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "alexdual/errors.hpp"

namespace alexdual {

namespace {

// Dense face table pays off once the ground set is small enough to
// enumerate its power set outright.
constexpr int kDenseFaceTableMaxVertices = 12;

void sortCanonical(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), bits::canonicalLess);
}

bool isAntichain(std::span<const Mask> sorted) {
  // Sorted by size, so only a later facet can contain an earlier one.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if ((sorted[i] & ~sorted[j]) == 0) return false;
    }
  }
  return true;
}

class FaceOracle {
 public:
  explicit FaceOracle(const SimplicialComplex& complex)
      : facets_(complex.facetMasks()) {
    const int n = complex.ambient();
    if (n <= kDenseFaceTableMaxVertices) {
      table_.assign(std::size_t{1} << n, 0);
      for (Mask f : facets_) table_[f] = 1;
      for (int v = 0; v < n; ++v) {
        const Mask bit = Mask{1} << v;
        for (Mask s = 0; s < table_.size(); ++s) {
          if ((s & bit) != 0 && table_[s] != 0) table_[s ^ bit] = 1;
        }
      }
    }
  }

  bool operator()(Mask s) const {
    if (!table_.empty()) return table_[s] != 0;
    return std::any_of(facets_.begin(), facets_.end(),
                       [s](Mask f) { return (s & ~f) == 0; });
  }

 private:
  std::span<const Mask> facets_;
  std::vector<std::uint8_t> table_;
};

// Calls fn(mask) for every k-subset of `universe`.
template <typename Fn>
void forEachSubsetOfSize(Mask universe, int k, Fn&& fn) {
  const std::vector<int> pool = bits::members(universe);
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= bits::vertexBit(pool[i]);
    fn(s);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ambient, std::vector<VertexSet> facets)
    : ambient_(ambient) {
  if (ambient < 0 || ambient > kMaxVertices) {
    throw DomainError("ambient size " + std::to_string(ambient) +
                      " outside [0, 64]");
  }
  facets_.reserve(facets.size());
  for (const VertexSet& f : facets) {
    if ((f.bits() & ~bits::lowMask(ambient)) != 0) {
      throw DomainError("facet " + toString(f) + " not contained in [" +
                        std::to_string(ambient) + "]");
    }
    facets_.push_back(f.bits());
  }
  sortCanonical(facets_);
  if (std::adjacent_find(facets_.begin(), facets_.end()) != facets_.end()) {
    throw DomainError("repeated facet");
  }
  if (!isAntichain(facets_)) {
    throw DomainError("facets are not an antichain (one contains another)");
  }
}

SimplicialComplex SimplicialComplex::fromMasks(int ambient,
                                               std::vector<Mask> facets) {
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (Mask m : facets) sets.emplace_back(ambient, m);
  return SimplicialComplex(ambient, std::move(sets));
}

SimplicialComplex SimplicialComplex::minimalized(int ambient,
                                                 std::vector<Mask> faces) {
  if (ambient < 0 || ambient > kMaxVertices) {
    throw DomainError("ambient size " + std::to_string(ambient) +
                      " outside [0, 64]");
  }
  for (Mask f : faces) {
    if ((f & ~bits::lowMask(ambient)) != 0) {
      throw DomainError("face " + maskToString(f) + " not contained in [" +
                        std::to_string(ambient) + "]");
    }
  }
  // Largest first so every kept face is checked against all its supersets.
  std::sort(faces.begin(), faces.end(),
            [](Mask a, Mask b) { return bits::canonicalLess(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Mask> kept;
  for (Mask f : faces) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [f](Mask g) {
      return (f & ~g) == 0;
    });
    if (!dominated) kept.push_back(f);
  }
  sortCanonical(kept);
  return SimplicialComplex(Trusted{}, ambient, std::move(kept));
}

SimplicialComplex SimplicialComplex::simplex(int ambient) {
  return fromMasks(ambient, {bits::lowMask(ambient)});
}

SimplicialComplex SimplicialComplex::voidComplex(int ambient) {
  return fromMasks(ambient, {});
}

std::vector<VertexSet> SimplicialComplex::facets() const {
  std::vector<VertexSet> out;
  out.reserve(facets_.size());
  for (Mask f : facets_) out.emplace_back(ambient_, f);
  return out;
}

bool SimplicialComplex::isFace(Mask s) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(),
                     [s](Mask f) { return (s & ~f) == 0; });
}

Mask SimplicialComplex::vertexMask() const noexcept {
  Mask m = 0;
  for (Mask f : facets_) m |= f;
  return m;
}

std::vector<Mask> SimplicialComplex::faces(std::size_t max_faces) const {
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  for (Mask f : facets_) {
    // Enumerate submasks of f, largest first.
    Mask s = f;
    while (true) {
      if (seen.insert(s).second) {
        out.push_back(s);
        if (out.size() > max_faces) {
          throw ResourceError("face count exceeds cap of " +
                              std::to_string(max_faces));
        }
      }
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  sortCanonical(out);
  return out;
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
  const DimensionInfo info = dimensionInfo(complex);
  if (i < 0 || i > info.dim) {
    throw DomainError("skeleton dimension " + std::to_string(i) +
                      " exceeds dim " + std::to_string(info.dim));
  }
  std::vector<Mask> out;
  for (Mask f : complex.facetMasks()) {
    forEachSubsetOfSize(f, i + 1, [&out](Mask s) { out.push_back(s); });
  }
  sortCanonical(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SimplicialComplex::minimalized(complex.ambient(), std::move(out));
}

DimensionInfo dimensionInfo(const SimplicialComplex& complex) {
  if (complex.isVoid()) throw DomainError("complex has no facets");
  const auto facets = complex.facetMasks();
  // Canonical order puts the largest facets last.
  const int largest = bits::popcount(facets.back());
  const int smallest = bits::popcount(facets.front());
  return {largest - 1, largest == smallest};
}

SimplicialComplex pureComplement(const SimplicialComplex& complex) {
  const DimensionInfo info = dimensionInfo(complex);
  if (!info.is_pure) throw DomainError("pure complement needs a pure complex");
  const int n = complex.ambient();
  const int d = info.dim + 1;
  if (binomial(n, d) > static_cast<double>(std::size_t{1} << 24)) {
    throw ResourceError("too many " + std::to_string(d) + "-subsets of [" +
                        std::to_string(n) + "]");
  }
  const std::unordered_set<Mask> facets(complex.facetMasks().begin(),
                                        complex.facetMasks().end());
  std::vector<Mask> out;
  forEachSubsetOfSize(bits::lowMask(n), d, [&](Mask s) {
    if (!facets.contains(s)) out.push_back(s);
  });
  return SimplicialComplex::minimalized(n, std::move(out));
}

std::vector<Mask> minimalNonfaceMasks(const SimplicialComplex& complex) {
  const int n = complex.ambient();
  const FaceOracle is_face(complex);
  std::vector<Mask> nonfaces;
  if (!is_face(0)) return {Mask{0}};
  // Level k holds the k-element faces; each set is generated once, from
  // itself minus its largest vertex.
  std::vector<Mask> level{0};
  while (!level.empty()) {
    std::vector<Mask> next;
    for (Mask f : level) {
      const int start = f == 0 ? 1 : bits::highestVertex(f) + 1;
      for (int v = start; v <= n; ++v) {
        const Mask s = f | bits::vertexBit(v);
        if (is_face(s)) {
          next.push_back(s);
          continue;
        }
        bool minimal = true;
        for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
          const Mask drop = rest & (~rest + 1);
          if (!is_face(s ^ drop)) minimal = false;
        }
        if (minimal) nonfaces.push_back(s);
      }
    }
    level = std::move(next);
  }
  sortCanonical(nonfaces);
  return nonfaces;
}

NonfaceReport minimalNonfaces(const SimplicialComplex& complex) {
  NonfaceReport report;
  const std::vector<Mask> masks = minimalNonfaceMasks(complex);
  report.is_flag = std::all_of(masks.begin(), masks.end(),
                               [](Mask m) { return bits::popcount(m) == 2; });
  for (Mask m : masks) report.nonfaces.emplace_back(complex.ambient(), m);
  return report;
}

std::optional<SimplicialComplex> alexanderDual(
    const SimplicialComplex& complex) {
  if (complex.isVoid()) throw DomainError("complex has no facets");
  const int n = complex.ambient();
  const Mask all = bits::lowMask(n);
  std::vector<Mask> facets = minimalNonfaceMasks(complex);
  if (facets.empty()) return std::nullopt;
  for (Mask& f : facets) f = all & ~f;
  return SimplicialComplex::minimalized(n, std::move(facets));
}

SimplicialComplex complementComplex(const SimplicialComplex& complex) {
  if (complex.isVoid()) throw DomainError("complex has no facets");
  const int n = complex.ambient();
  const Mask all = bits::lowMask(n);
  std::vector<Mask> out;
  out.reserve(complex.numFacets());
  for (Mask f : complex.facetMasks()) {
    if (f == all) {
      throw DomainError("facet equals [" + std::to_string(n) +
                        "]; its complement is empty");
    }
    out.push_back(all & ~f);
  }
  return SimplicialComplex::minimalized(n, std::move(out));
}

bool containsFace(const SimplicialComplex& complex, const VertexSet& face) {
  if ((face.bits() & ~bits::lowMask(complex.ambient())) != 0) {
    throw DomainError("face " + toString(face) + " not contained in [" +
                      std::to_string(complex.ambient()) + "]");
  }
  return complex.isFace(face.bits());
}

bool satisfiesInvariants(const SimplicialComplex& complex) {
  const auto facets = complex.facetMasks();
  const Mask all = bits::lowMask(complex.ambient());
  for (Mask f : facets) {
    if ((f & ~all) != 0) return false;
  }
  for (std::size_t i = 1; i < facets.size(); ++i) {
    if (!bits::canonicalLess(facets[i - 1], facets[i])) return false;
  }
  return isAntichain(facets);
}

SimplicialComplex subcomplex(const SimplicialComplex& complex,
                             std::span<const std::size_t> keep) {
  std::vector<Mask> out;
  out.reserve(keep.size());
  for (std::size_t k : keep) {
    if (k >= complex.numFacets()) {
      throw DomainError("facet index " + std::to_string(k) + " out of range");
    }
    out.push_back(complex.facetMasks()[k]);
  }
  return SimplicialComplex::minimalized(complex.ambient(), std::move(out));
}

std::string toString(const SimplicialComplex& complex) {
  std::string out = "<";
  bool first = true;
  for (Mask f : complex.facetMasks()) {
    if (!first) out += ",";
    out += maskToString(f);
    first = false;
  }
  return out + "> on [" + std::to_string(complex.ambient()) + "]";
}

}  // namespace alexdual
