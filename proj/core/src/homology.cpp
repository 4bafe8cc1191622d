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

#include "alexdual/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "alexdual/errors.hpp"
#include "alexdual/linalg.hpp"
#include "order_search.hpp"

namespace alexdual {

bool HomologyProfile::isAcyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](long r) { return r == 0; });
}

HomologyProfile reducedHomologyOfFaces(std::span<const Mask> faces,
                                       const FieldChoice& field) {
  if (faces.empty()) return {};
  int top = 0;
  for (Mask f : faces) top = std::max(top, bits::popcount(f));
  // by_size[k] holds the k-element faces, sorted.
  std::vector<std::vector<Mask>> by_size(top + 1);
  for (Mask f : faces) by_size[bits::popcount(f)].push_back(f);
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  if (by_size[0].size() != 1) {
    throw DomainError("face list is not closed under subsets");
  }

  // rank_of[k]: rank of the boundary map from k-faces to (k-1)-faces.
  std::vector<std::size_t> rank_of(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& lower = by_size[k - 1];
    std::vector<SparseRow> rows;
    rows.reserve(by_size[k].size());
    for (Mask f : by_size[k]) {
      SparseRow row;
      int position = 0;
      for (Mask rest = f; rest != 0; rest &= rest - 1, ++position) {
        const Mask facet = f & ~(rest & (~rest + 1));
        const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        if (it == lower.end() || *it != facet) {
          throw DomainError("face list is not closed under subsets");
        }
        row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()),
                         position % 2 == 0 ? 1 : -1);
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    rank_of[k] = exactRank(std::move(rows), field);
  }

  HomologyProfile profile;
  profile.ranks.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    profile.ranks[k] = static_cast<long>(by_size[k].size()) -
                       static_cast<long>(rank_of[k]) -
                       static_cast<long>(rank_of[k + 1]);
  }
  return profile;
}

HomologyProfile reducedHomology(const SimplicialComplex& complex,
                                const FieldChoice& field,
                                const HomologyLimits& limits) {
  if (complex.ambient() > limits.max_vertices) {
    throw ResourceError("homology limited to " +
                        std::to_string(limits.max_vertices) + " vertices, got " +
                        std::to_string(complex.ambient()));
  }
  if (complex.isVoid()) return {};
  const std::vector<Mask> faces = complex.faces();
  return reducedHomologyOfFaces(faces, field);
}

int BettiEntry::totalDegree() const {
  return std::accumulate(multidegree.begin(), multidegree.end(), 0);
}

BettiTable::BettiTable(int num_vars, std::vector<BettiEntry> entries)
    : num_vars_(num_vars), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const BettiEntry& e) { return e.rank == 0; });
  std::sort(entries_.begin(), entries_.end(),
            [](const BettiEntry& a, const BettiEntry& b) {
              if (a.homological_degree != b.homological_degree) {
                return a.homological_degree < b.homological_degree;
              }
              const int da = a.totalDegree();
              const int db = b.totalDegree();
              if (da != db) return da < db;
              return a.multidegree < b.multidegree;
            });
}

int BettiTable::projdim() const {
  if (entries_.empty()) throw DomainError("zero ideal has no resolution");
  return entries_.back().homological_degree;
}

int BettiTable::reg() const {
  if (entries_.empty()) throw DomainError("zero ideal has no resolution");
  int r = entries_.front().totalDegree();
  for (const BettiEntry& e : entries_) {
    r = std::max(r, e.totalDegree() - e.homological_degree);
  }
  return r;
}

long BettiTable::total(int i) const {
  long sum = 0;
  for (const BettiEntry& e : entries_) {
    if (e.homological_degree == i) sum += e.rank;
  }
  return sum;
}

std::map<std::pair<int, int>, long> BettiTable::graded() const {
  std::map<std::pair<int, int>, long> out;
  for (const BettiEntry& e : entries_) {
    out[{e.homological_degree, e.totalDegree()}] += e.rank;
  }
  return out;
}

BettiTable bettiTable(const MonomialIdeal& ideal, const FieldChoice& field,
                      const BettiLimits& limits) {
  const int n = ideal.numVars();
  if (ideal.isZero()) return BettiTable(n, {});
  if (n > limits.max_vars || n > kMaxVertices) {
    throw ResourceError("Betti table limited to " +
                        std::to_string(limits.max_vars) + " variables, got " +
                        std::to_string(n));
  }
  if (ideal.size() > limits.max_generators) {
    throw ResourceError("Betti table limited to " +
                        std::to_string(limits.max_generators) +
                        " generators, got " + std::to_string(ideal.size()));
  }

  // Mixed-radix box {b : 0 <= b <= lcm(G(I))}.
  std::vector<int> top(n, 0);
  for (const Monomial& g : ideal.generators()) {
    for (int i = 0; i < n; ++i) top[i] = std::max(top[i], g.exponents()[i]);
  }
  std::vector<std::size_t> stride(n, 1);
  std::size_t box = 1;
  for (int i = 0; i < n; ++i) {
    stride[i] = box;
    const std::size_t radix = static_cast<std::size_t>(top[i]) + 1;
    if (box > limits.max_box / radix) {
      throw ResourceError("multidegree box exceeds cap of " +
                          std::to_string(limits.max_box));
    }
    box *= radix;
  }
  auto indexOf = [&](const std::vector<int>& e) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx += static_cast<std::size_t>(e[i]) * stride[i];
    return idx;
  };

  // in_ideal[b]: x^b in I. exact[b]: variables i for which some generator
  // dividing x^b has exponent exactly b_i. b lies in the lcm lattice iff
  // x^b in I and exact[b] covers supp(b).
  std::vector<std::uint8_t> in_ideal(box, 0);
  std::vector<Mask> exact(box, 0);
  for (const Monomial& g : ideal.generators()) {
    const std::size_t idx = indexOf(g.exponents());
    in_ideal[idx] = 1;
    exact[idx] = g.support();
  }
  std::vector<int> b(n, 0);
  std::vector<BettiEntry> entries;
  std::vector<Mask> faces;
  for (std::size_t idx = 0; idx < box; ++idx) {
    Mask support = 0;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Mask bit = Mask{1} << j;
      support |= bit;
      const std::size_t below = idx - stride[j];
      in_ideal[idx] |= in_ideal[below];
      exact[idx] |= exact[below] & ~bit;
    }
    if (in_ideal[idx] != 0 && (support & ~exact[idx]) == 0) {
      faces.clear();
      for (Mask f = support;; f = (f - 1) & support) {
        std::size_t face_idx = idx;
        for (Mask rest = f; rest != 0; rest &= rest - 1) {
          face_idx -= stride[std::countr_zero(rest)];
        }
        if (in_ideal[face_idx] != 0) faces.push_back(f);
        if (f == 0) break;
      }
      const HomologyProfile h = reducedHomologyOfFaces(faces, field);
      for (std::size_t k = 0; k < h.ranks.size(); ++k) {
        if (h.ranks[k] != 0) {
          // ranks[k] is H~_{k-1}, which gives beta_{k, b}.
          entries.push_back({static_cast<int>(k), b, h.ranks[k]});
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      if (b[j] < top[j]) {
        ++b[j];
        break;
      }
      b[j] = 0;
    }
  }
  return BettiTable(n, std::move(entries));
}

ResolutionSummary summarize(const BettiTable& table,
                            const MonomialIdeal& ideal) {
  ResolutionSummary out;
  out.projdim = table.projdim();
  out.reg = table.reg();
  const std::optional<int> d = ideal.commonDegree();
  out.linear_resolution =
      d.has_value() &&
      std::all_of(table.entries().begin(), table.entries().end(),
                  [d](const BettiEntry& e) {
                    return e.totalDegree() == *d + e.homological_degree;
                  });
  return out;
}

ResolutionSummary projdimAndReg(const MonomialIdeal& ideal,
                                const FieldChoice& field,
                                const BettiLimits& limits) {
  if (ideal.isZero()) throw DomainError("zero ideal has no resolution");
  return summarize(bettiTable(ideal, field, limits), ideal);
}

bool isCohenMacaulay(const SimplicialComplex& complex, const FieldChoice& field,
                     const HomologyLimits& limits) {
  if (complex.ambient() > limits.max_vertices) {
    throw ResourceError("Cohen-Macaulay test limited to " +
                        std::to_string(limits.max_vertices) +
                        " vertices, got " + std::to_string(complex.ambient()));
  }
  if (complex.isVoid()) throw DomainError("complex has no facets");
  const std::vector<Mask> faces = complex.faces();
  std::vector<Mask> link;
  std::unordered_set<Mask> seen;
  for (Mask face : faces) {
    link.clear();
    seen.clear();
    int link_dim = -1;
    for (Mask facet : complex.facetMasks()) {
      if ((face & ~facet) != 0) continue;
      const Mask rest = facet & ~face;
      link_dim = std::max(link_dim, bits::popcount(rest) - 1);
      for (Mask s = rest;; s = (s - 1) & rest) {
        if (seen.insert(s).second) link.push_back(s);
        if (s == 0) break;
      }
    }
    const HomologyProfile h = reducedHomologyOfFaces(link, field);
    for (int i = -1; i < link_dim; ++i) {
      if (h.rank(i) != 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> shellingOrder(
    const SimplicialComplex& complex, const ShellingOptions& options) {
  const DimensionInfo info = dimensionInfo(complex);
  if (!info.is_pure) throw DomainError("shellability needs a pure complex");
  const auto facets = complex.facetMasks();
  const std::size_t t = facets.size();
  if (t > options.max_facets) {
    throw ResourceError("shelling search limited to " +
                        std::to_string(options.max_facets) + " facets, got " +
                        std::to_string(t));
  }
  auto candidates = [&](const std::vector<std::size_t>& prefix,
                        const detail::BitKey& placed) {
    Mask covered = 0;
    for (std::size_t p : prefix) covered |= facets[p];
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < t; ++c) {
      if (placed.test(c)) continue;
      const Mask f = facets[c];
      // Vertices x with F \ H = {x} for some earlier H.
      Mask single = 0;
      for (std::size_t p : prefix) {
        const Mask diff = f & ~facets[p];
        if (bits::popcount(diff) == 1) single |= diff;
      }
      const bool ok = std::all_of(prefix.begin(), prefix.end(),
                                  [&](std::size_t p) {
                                    return (f & ~facets[p] & single) != 0;
                                  });
      if (ok) out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      return bits::popcount(facets[a] & covered) >
             bits::popcount(facets[b] & covered);
    });
    return out;
  };
  detail::OrderSearch search(
      t, candidates, {options.timeout, std::size_t{1} << 22}, "shelling");
  return search.run();
}

bool isShellingOrder(const SimplicialComplex& complex,
                     std::span<const std::size_t> order) {
  const auto facets = complex.facetMasks();
  if (order.size() != facets.size()) return false;
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  if (!dimensionInfo(complex).is_pure) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Mask fi = facets[order[i]];
    for (std::size_t j = 0; j < i; ++j) {
      bool found = false;
      for (int x : bits::members(fi & ~facets[order[j]])) {
        for (std::size_t k = 0; k < i && !found; ++k) {
          found = (fi & ~facets[order[k]]) == bits::vertexBit(x);
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace alexdual
