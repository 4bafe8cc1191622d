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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/field.hpp"
#include "alexdual/ideal.hpp"

namespace alexdual {

// Ranks of reduced homology H~_{-1}, H~_0, ..., H~_{dim}. Empty for the
// void complex.
struct HomologyProfile {
  std::vector<long> ranks;

  long rank(int dim) const {
    const int k = dim + 1;
    return k >= 0 && k < static_cast<int>(ranks.size()) ? ranks[k] : 0;
  }
  bool isAcyclic() const;
  friend bool operator==(const HomologyProfile&,
                         const HomologyProfile&) = default;
};

struct HomologyLimits {
  int max_vertices = 16;
};

HomologyProfile reducedHomology(const SimplicialComplex& complex,
                                const FieldChoice& field,
                                const HomologyLimits& limits = {});
// `faces` must be closed under taking subsets; any order.
HomologyProfile reducedHomologyOfFaces(std::span<const Mask> faces,
                                       const FieldChoice& field);

struct BettiEntry {
  int homological_degree = 0;
  std::vector<int> multidegree;
  long rank = 0;

  int totalDegree() const;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

// Multigraded Betti numbers beta_{i,b}(I) of the ideal I (so beta_0 counts
// minimal generators). Entries are sorted by (i, total degree, b) and never
// zero.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int num_vars, std::vector<BettiEntry> entries);

  int numVars() const noexcept { return num_vars_; }
  const std::vector<BettiEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  // Largest i with a nonzero entry; projdim of S/I is one more.
  int projdim() const;
  // max over entries of |b| - i.
  int reg() const;
  long total(int i) const;
  // (i, j) -> sum of beta_{i,b} over |b| = j.
  std::map<std::pair<int, int>, long> graded() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int num_vars_ = 0;
  std::vector<BettiEntry> entries_;
};

struct BettiLimits {
  int max_vars = 16;
  std::size_t max_generators = 12;
  // Cap on the exponent box below lcm(G(I)) that is scanned for lcm-lattice
  // multidegrees.
  std::size_t max_box = std::size_t{1} << 22;
};

// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) where K^b(I) is the upper Koszul
// simplicial complex {F subset supp(b) : x^(b - F) in I}; only multidegrees
// in the lcm lattice of G(I) are visited.
BettiTable bettiTable(const MonomialIdeal& ideal, const FieldChoice& field,
                      const BettiLimits& limits = {});

struct ResolutionSummary {
  int projdim = 0;
  int reg = 0;
  bool linear_resolution = false;
};

ResolutionSummary summarize(const BettiTable& table, const MonomialIdeal& ideal);
ResolutionSummary projdimAndReg(const MonomialIdeal& ideal,
                                const FieldChoice& field,
                                const BettiLimits& limits = {});

// Reisner: every link lk(F), F a face (including the empty face), has
// vanishing reduced homology below dim lk(F).
bool isCohenMacaulay(const SimplicialComplex& complex, const FieldChoice& field,
                     const HomologyLimits& limits = {14});

struct ShellingOptions {
  std::size_t max_facets = 12;
  std::chrono::milliseconds timeout{30'000};
};

// Facet indices in a shelling order, or nullopt. Requires a pure complex.
std::optional<std::vector<std::size_t>> shellingOrder(
    const SimplicialComplex& complex, const ShellingOptions& options = {});

// Direct check of the pairwise condition: for all j < i there are
// x in F_i \ F_j and k < i with F_i \ F_k = {x}.
bool isShellingOrder(const SimplicialComplex& complex,
                     std::span<const std::size_t> order);

}  // namespace alexdual
