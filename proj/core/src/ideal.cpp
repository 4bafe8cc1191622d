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

#include "alexdual/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "alexdual/errors.hpp"
#include "order_search.hpp"

namespace alexdual {

namespace {

constexpr int kMaxDenseStanleyReisnerVars = 24;

std::vector<Monomial> minimalGenerators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return canonicalLess(a, b);
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&g](const Monomial& h) {
          return h.degree() < g.degree() && h.divides(g);
        });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

void requireSquarefree(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.isSquarefree()) {
    throw DomainError(std::string(what) + " needs a squarefree ideal");
  }
}

// Calls fn(exponents) for every exponent vector of total degree `degree`.
template <typename Fn>
void forEachMonomialOfDegree(int num_vars, int degree, Fn&& fn) {
  std::vector<int> e(num_vars, 0);
  if (num_vars == 0) {
    if (degree == 0) fn(e);
    return;
  }
  auto rec = [&](auto& self, int var, int left) -> void {
    if (var == num_vars - 1) {
      e[var] = left;
      fn(e);
      e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(int num_vars) {
  if (num_vars < 0) throw DomainError("negative variable count");
  MonomialIdeal out;
  out.num_vars_ = num_vars;
  return out;
}

MonomialIdeal MonomialIdeal::generatedBy(int num_vars,
                                         std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.numVars() != num_vars) {
      throw DomainError("generator " + toString(g) + " has " +
                        std::to_string(g.numVars()) + " variables, expected " +
                        std::to_string(num_vars));
    }
    if (g.isOne()) throw DomainError("the unit ideal is not supported");
  }
  MonomialIdeal out = zero(num_vars);
  out.gens_ = minimalGenerators(std::move(gens));
  return out;
}

bool MonomialIdeal::isSquarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.isSquarefree(); });
}

std::optional<int> MonomialIdeal::commonDegree() const noexcept {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().degree();
  if (gens_.back().degree() != d) return std::nullopt;
  return d;
}

int MonomialIdeal::minDegree() const {
  if (gens_.empty()) throw DomainError("zero ideal has no generator degree");
  return gens_.front().degree();
}

int MonomialIdeal::maxDegree() const {
  if (gens_.empty()) throw DomainError("zero ideal has no generator degree");
  return gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&m](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw DomainError("empty monomial list");
  const int n = monomials.front().numVars();
  return MonomialIdeal::generatedBy(
      n, std::vector<Monomial>(monomials.begin(), monomials.end()));
}

MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex) {
  const int n = complex.ambient();
  std::vector<Monomial> gens;
  for (Mask m : minimalNonfaceMasks(complex)) {
    if (m == 0) throw DomainError("the void complex has the unit ideal");
    gens.push_back(Monomial::fromMask(n, m));
  }
  return MonomialIdeal::generatedBy(n, std::move(gens));
}

MonomialIdeal facetIdeal(const SimplicialComplex& complex) {
  if (complex.isVoid()) throw DomainError("complex has no facets");
  const int n = complex.ambient();
  std::vector<Monomial> gens;
  for (Mask f : complex.facetMasks()) {
    if (f == 0) throw DomainError("the empty facet gives the unit ideal");
    gens.push_back(Monomial::fromMask(n, f));
  }
  return MonomialIdeal::generatedBy(n, std::move(gens));
}

SimplicialComplex complexFromIdeal(const MonomialIdeal& ideal,
                                   ComplexMode mode) {
  requireSquarefree(ideal, "complexFromIdeal");
  const int n = ideal.numVars();
  if (n > kMaxVertices) throw ResourceError("more than 64 variables");
  if (mode == ComplexMode::kFacet) {
    std::vector<Mask> facets;
    for (const Monomial& g : ideal.generators()) facets.push_back(g.support());
    return SimplicialComplex::minimalized(n, std::move(facets));
  }
  if (ideal.isZero()) return SimplicialComplex::simplex(n);
  if (n > kMaxDenseStanleyReisnerVars) {
    throw ResourceError("Stanley-Reisner complex limited to " +
                        std::to_string(kMaxDenseStanleyReisnerVars) +
                        " variables");
  }
  // contains[S]: S contains the support of some generator.
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> contains(size, 0);
  for (const Monomial& g : ideal.generators()) contains[g.support()] = 1;
  for (int v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    for (Mask s = 0; s < size; ++s) {
      if ((s & bit) == 0 && contains[s] != 0) contains[s | bit] = 1;
    }
  }
  std::vector<Mask> facets;
  for (Mask s = 0; s < size; ++s) {
    if (contains[s] != 0) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      const Mask bit = Mask{1} << v;
      if ((s & bit) == 0 && contains[s | bit] == 0) maximal = false;
    }
    if (maximal) facets.push_back(s);
  }
  return SimplicialComplex::minimalized(n, std::move(facets));
}

std::optional<std::vector<Monomial>> linearQuotientsOrder(
    const MonomialIdeal& ideal, const LinearQuotientOptions& options) {
  const auto& gens = ideal.generators();
  const std::size_t t = gens.size();
  if (t == 0) throw DomainError("zero ideal has no generators to order");
  if (ideal.numVars() > kMaxVertices) throw ResourceError("more than 64 variables");

  // For the pair (f, g): support of f / gcd(f, g), and its variable bit when
  // that quotient has degree one.
  std::vector<Mask> quotient_support(t * t, 0);
  std::vector<Mask> linear_bit(t * t, 0);
  for (std::size_t f = 0; f < t; ++f) {
    for (std::size_t g = 0; g < t; ++g) {
      if (f == g) continue;
      Mask support = 0;
      int degree = 0;
      for (int i = 0; i < ideal.numVars(); ++i) {
        const int excess = gens[f].exponents()[i] - gens[g].exponents()[i];
        if (excess > 0) {
          support |= Mask{1} << i;
          degree += excess;
        }
      }
      quotient_support[f * t + g] = support;
      if (degree == 1) linear_bit[f * t + g] = support;
    }
  }

  auto candidates = [&](const std::vector<std::size_t>& prefix,
                        const detail::BitKey& placed) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < t; ++g) {
      if (placed.test(g)) continue;
      Mask linear_vars = 0;
      for (std::size_t f : prefix) linear_vars |= linear_bit[f * t + g];
      const bool linear = std::all_of(
          prefix.begin(), prefix.end(), [&](std::size_t f) {
            return (quotient_support[f * t + g] & linear_vars) != 0;
          });
      if (linear) out.push_back(g);
    }
    return out;
  };

  detail::OrderSearch search(
      t, candidates, {options.timeout, options.max_states}, "linear quotients");
  const auto order = search.run();
  if (!order) return std::nullopt;
  std::vector<Monomial> out;
  out.reserve(t);
  for (std::size_t i : *order) out.push_back(gens[i]);
  return out;
}

bool isLinearQuotientsOrder(const MonomialIdeal& ideal,
                            std::span<const Monomial> order) {
  if (order.size() != ideal.size()) return false;
  std::vector<Monomial> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial& a, const Monomial& b) {
              return canonicalLess(a, b);
            });
  if (sorted != ideal.generators()) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::vector<Monomial> colon;
    for (std::size_t j = 0; j < i; ++j) {
      colon.push_back(quotient(order[j], gcd(order[j], order[i])));
    }
    const MonomialIdeal colon_ideal =
        MonomialIdeal::generatedBy(ideal.numVars(), std::move(colon));
    if (colon_ideal.maxDegree() != 1) return false;
  }
  return true;
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw DomainError("power exponent must be >= 1");
  if (ideal.isZero()) return ideal;
  MonomialIdeal result = ideal;
  for (int step = 1; step < k; ++step) {
    std::unordered_set<Monomial, MonomialHash> products;
    for (const Monomial& a : result.generators()) {
      for (const Monomial& b : ideal.generators()) products.insert(a * b);
    }
    result = MonomialIdeal::generatedBy(
        ideal.numVars(), std::vector<Monomial>(products.begin(), products.end()));
  }
  return result;
}

MonomialIdeal gradedComponentIdeal(const MonomialIdeal& ideal, int j,
                                   const GradedComponentOptions& options) {
  if (ideal.isZero()) return ideal;
  const int min_degree = ideal.minDegree();
  if (j < min_degree) {
    throw DomainError("degree " + std::to_string(j) +
                      " below the smallest generator degree " +
                      std::to_string(min_degree));
  }
  if (j > min_degree + options.max_degree_above_min) {
    throw ResourceError("degree " + std::to_string(j) + " exceeds cap " +
                        std::to_string(min_degree +
                                       options.max_degree_above_min));
  }
  std::unordered_set<Monomial, MonomialHash> component;
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() > j) continue;
    forEachMonomialOfDegree(
        ideal.numVars(), j - g.degree(),
        [&](const std::vector<int>& e) { component.insert(g * Monomial(e)); });
  }
  return MonomialIdeal::generatedBy(
      ideal.numVars(),
      std::vector<Monomial>(component.begin(), component.end()));
}

MonomialIdeal restrictIdeal(const MonomialIdeal& ideal,
                            std::span<const int> bound) {
  if (static_cast<int>(bound.size()) != ideal.numVars()) {
    throw DomainError("bound has " + std::to_string(bound.size()) +
                      " entries, expected " + std::to_string(ideal.numVars()));
  }
  if (std::any_of(bound.begin(), bound.end(), [](int a) { return a < 0; })) {
    throw DomainError("bound entries must be >= 0");
  }
  std::vector<Monomial> kept;
  for (const Monomial& g : ideal.generators()) {
    if (g.boundedBy(bound)) kept.push_back(g);
  }
  return MonomialIdeal::generatedBy(ideal.numVars(), std::move(kept));
}

MonomialIdeal skeletonIdealFromOneSkeleton(const MonomialIdeal& one_skeleton,
                                           int ell, int n) {
  if (one_skeleton.numVars() != n) {
    throw DomainError("ideal has " + std::to_string(one_skeleton.numVars()) +
                      " variables, expected " + std::to_string(n));
  }
  if (ell + 1 < 2 || ell + 1 > n) {
    throw DomainError("need 2 <= ell + 1 <= n, got ell = " +
                      std::to_string(ell) + ", n = " + std::to_string(n));
  }
  if (n > kMaxVertices) throw ResourceError("more than 64 variables");
  if (one_skeleton.isZero()) return one_skeleton;
  requireSquarefree(one_skeleton, "skeletonIdealFromOneSkeleton");
  if (one_skeleton.commonDegree() != 2) {
    throw DomainError("one-skeleton ideal must be generated in degree 2");
  }
  std::vector<Mask> pairs;
  for (const Monomial& g : one_skeleton.generators()) {
    pairs.push_back(g.support());
  }
  // Subsets of size ell + 1 in colex order.
  std::vector<Monomial> out;
  Mask s = bits::lowMask(ell + 1);
  const Mask limit = bits::lowMask(n);
  while (true) {
    if (std::any_of(pairs.begin(), pairs.end(),
                    [s](Mask p) { return (p & ~s) == 0; })) {
      out.push_back(Monomial::fromMask(n, s));
    }
    // Gosper's hack; stop once the top bit leaves [n].
    const Mask low = s & (~s + 1);
    const Mask ripple = s + low;
    if (ripple == 0 || (ripple & ~limit) != 0) break;
    s = ripple | (((s ^ ripple) >> 2) / low);
    if ((s & ~limit) != 0) break;
  }
  return MonomialIdeal::generatedBy(n, std::move(out));
}

std::string toString(const MonomialIdeal& ideal) {
  if (ideal.isZero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const Monomial& g : ideal.generators()) {
    if (!first) out += ", ";
    out += toString(g);
    first = false;
  }
  return out + ")";
}

}  // namespace alexdual
