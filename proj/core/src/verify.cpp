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

#include "alexdual/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <thread>

#include "alexdual/errors.hpp"
#include "alexdual/families.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/io.hpp"
#include "alexdual/quasitree.hpp"

namespace alexdual::verify {
namespace {

using Json = nlohmann::json;
using families::Rng;

enum class Kind { kPositive, kNegative, kSkip, kFail };

struct Outcome {
  Kind kind = Kind::kPositive;
  Json witness;
  std::string detail;
};

Outcome positive() { return {Kind::kPositive, nullptr, {}}; }
Outcome negative() { return {Kind::kNegative, nullptr, {}}; }
Outcome verdict(bool pos) { return pos ? positive() : negative(); }
Outcome skip() { return {Kind::kSkip, nullptr, {}}; }
Outcome fail(Json witness, std::string detail) {
  return {Kind::kFail, std::move(witness), std::move(detail)};
}

struct Tally {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  Json witness;
  std::string detail;

  void add(Outcome&& o) {
    switch (o.kind) {
      case Kind::kPositive: ++positives; break;
      case Kind::kNegative: ++negatives; break;
      case Kind::kSkip: ++skipped; break;
      case Kind::kFail:
        if (failures++ == 0) {
          witness = std::move(o.witness);
          detail = std::move(o.detail);
        }
        break;
    }
  }

  void merge(Tally&& other) {
    positives += other.positives;
    negatives += other.negatives;
    skipped += other.skipped;
    if (failures == 0 && other.failures > 0) {
      witness = std::move(other.witness);
      detail = std::move(other.detail);
    }
    failures += other.failures;
  }
};

CheckResult toResult(std::string name, Tally t, bool need_both = false) {
  CheckResult r;
  r.name = std::move(name);
  r.instances = t.positives + t.negatives + t.failures;
  r.positives = t.positives;
  r.negatives = t.negatives;
  r.skipped = t.skipped;
  r.passed = t.failures == 0;
  if (!r.passed) {
    r.witness = std::move(t.witness);
    r.detail = std::to_string(t.failures) + " failing instance(s); first: " +
               t.detail;
  } else if (need_both && (t.positives == 0 || t.negatives == 0)) {
    r.passed = false;
    r.detail = "instance family does not exercise both verdicts";
  }
  return r;
}

// Runs fn(i) for every i and tallies the outcomes in index order.
// ResourceError counts as a skip; any other exception is a failure.
template <typename Fn>
Tally tallyOver(std::size_t count, Fn&& fn) {
  const std::size_t threads =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t chunks = std::max<std::size_t>(1, std::min(count, threads * 16));
  std::vector<Tally> parts(chunks);
  parallelFor(chunks, [&](std::size_t c) {
    const std::size_t lo = count * c / chunks;
    const std::size_t hi = count * (c + 1) / chunks;
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        parts[c].add(fn(i));
      } catch (const ResourceError&) {
        parts[c].add(skip());
      } catch (const std::exception& e) {
        parts[c].add(fail(Json{{"instance", i}}, e.what()));
      }
    }
  });
  Tally total;
  for (Tally& p : parts) total.merge(std::move(p));
  return total;
}

Rng instanceRng(std::uint64_t seed, std::uint32_t salt, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), salt,
                    static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
  return Rng(seq);
}

std::size_t samplesOr(const SuiteOptions& o, std::size_t fallback) {
  return o.samples == 0 ? fallback : o.samples;
}

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniformReal(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

const BettiLimits kSuiteBetti{16, std::size_t{1} << 20, std::size_t{1} << 22};
const HomologyLimits kSuiteHomology{16};

bool linearResolution(const MonomialIdeal& ideal, const FieldChoice& field) {
  return projdimAndReg(ideal, field, kSuiteBetti).linear_resolution;
}

std::optional<MonomialIdeal> dualIdeal(const SimplicialComplex& complex) {
  const auto dual = alexanderDual(complex);
  if (!dual) return std::nullopt;
  return stanleyReisnerIdeal(*dual);
}

bool isSimplex(const SimplicialComplex& c) {
  return c.numFacets() == 1 && c.facetMasks()[0] == bits::lowMask(c.ambient());
}

// Wraps a predicate so that exceptions count as "no longer failing".
template <typename T>
std::function<bool(const T&)> guarded(std::function<bool(const T&)> fails) {
  return [fails = std::move(fails)](const T& x) {
    try {
      return fails(x);
    } catch (const std::exception&) {
      return false;
    }
  };
}

Outcome failComplex(const SimplicialComplex& c,
                    std::function<bool(const SimplicialComplex&)> fails,
                    std::string detail) {
  const SimplicialComplex small =
      minimizeComplex(c, guarded<SimplicialComplex>(std::move(fails)));
  return fail(io::toJson(small), detail + " on " + toString(small));
}

Outcome failGraph(const Graph& g, std::function<bool(const Graph&)> fails,
                  std::string detail) {
  const Graph small = minimizeGraph(g, guarded<Graph>(std::move(fails)));
  return fail(io::toJson(small), detail + " on " + toString(small));
}

Outcome failIdeal(const MonomialIdeal& ideal,
                  std::function<bool(const MonomialIdeal&)> fails,
                  std::string detail) {
  const MonomialIdeal small =
      minimizeIdeal(ideal, guarded<MonomialIdeal>(std::move(fails)));
  return fail(io::toJson(small, true), detail + " on " + toString(small));
}

// Exhaustive downset representatives for n = 1..min(max_n, 6).
std::vector<SimplicialComplex> classRepresentatives(int max_n) {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= std::min(max_n, families::kMaxDownsetVertices); ++n) {
    for (families::FaceSet d : families::downsetClassRepresentatives(n)) {
      out.push_back(families::complexFromFaceSet(n, d));
    }
  }
  return out;
}

std::vector<SimplicialComplex> smallFamily(int max_n, std::size_t min_facets,
                                           std::size_t max_facets) {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= std::min(max_n, 8); ++n) {
    auto part = families::smallComplexes(n, 3, min_facets, max_facets);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

SimplicialComplex exampleQuasiTree() {
  return SimplicialComplex::fromMasks(6, {0b000111, 0b001110, 0b011100, 0b101100});
}

// Duality, skeletons and resolutions.

Outcome barComplementCheck(const SimplicialComplex& c) {
  if (c.isVoid() || !dimensionInfo(c).is_pure || c.facetMasks()[0] == 0) {
    return skip();
  }
  auto fails = [](const SimplicialComplex& x) {
    if (x.isVoid() || !dimensionInfo(x).is_pure || x.facetMasks()[0] == 0) {
      return false;
    }
    const int d = dimensionInfo(x).dim + 1;
    const SimplicialComplex gamma =
        complexFromIdeal(facetIdeal(x), ComplexMode::kStanleyReisner);
    const SimplicialComplex rhs =
        gamma.isVoid() || dimensionInfo(gamma).dim < d - 1
            ? SimplicialComplex::voidComplex(x.ambient())
            : skeleton(gamma, d - 1);
    return pureComplement(x) != rhs;
  };
  if (fails(c)) return failComplex(c, fails, "bar(Delta) != skel_Gamma(d-1)");
  return positive();
}

Outcome dualIdealCheck(const SimplicialComplex& c) {
  if (c.isVoid() || isSimplex(c)) return skip();
  auto fails = [](const SimplicialComplex& x) {
    if (x.isVoid() || isSimplex(x)) return false;
    const auto dual = alexanderDual(x);
    return stanleyReisnerIdeal(*dual) != facetIdeal(complementComplex(x)) ||
           alexanderDual(*dual) != x;
  };
  if (fails(c)) {
    return failComplex(c, fails,
                       "I_{dual} != I(Delta^c) or the dual is not an involution");
  }
  return positive();
}

std::vector<CheckResult> suiteBarComplement(const SuiteOptions& o) {
  const auto reps = classRepresentatives(o.max_n);
  return {toResult("lemma-1.1",
                   tallyOver(reps.size(), [&](std::size_t i) { return barComplementCheck(reps[i]); }))};
}

std::vector<CheckResult> suiteDualIdeal(const SuiteOptions& o) {
  // Every downset, not only class representatives.
  std::vector<std::pair<int, families::FaceSet>> all;
  for (int n = 1; n <= std::min(o.max_n, families::kMaxDownsetVertices); ++n) {
    families::forEachDownset(n, [&](families::FaceSet d) { all.emplace_back(n, d); });
  }
  Tally t = tallyOver(all.size(), [&](std::size_t i) {
    return dualIdealCheck(families::complexFromFaceSet(all[i].first, all[i].second));
  });
  const std::size_t samples = samplesOr(o, 10'000);
  t.merge(tallyOver(samples, [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 12, i);
    const int n = uniform(rng, 2, 10);
    // Redraw the trivial cases so every sample is checked.
    SimplicialComplex c = families::randomComplex(rng, n, 8, uniformReal(rng, 0.3, 0.8));
    while (c.isVoid() || isSimplex(c)) {
      c = families::randomComplex(rng, n, 8, uniformReal(rng, 0.3, 0.8));
    }
    return dualIdealCheck(c);
  }));
  return {toResult("lemma-1.2", std::move(t))};
}

Outcome skeletonDualCheck(const SimplicialComplex& sigma) {
  const int n = sigma.ambient();
  const int dim = dimensionInfo(sigma).dim;
  const MonomialIdeal one = barSkeletonIdeal(sigma, std::min(1, dim));
  if (dim < 1 || one.isZero()) return skip();
  const auto dual_prime =
      alexanderDual(complexFromIdeal(one, ComplexMode::kStanleyReisner));
  bool any = false;
  for (int ell = 1; ell <= dim; ++ell) {
    const MonomialIdeal iell = barSkeletonIdeal(sigma, ell);
    if (iell.isZero() || n - ell - 2 < 0) continue;
    any = true;
    const auto dual = alexanderDual(complexFromIdeal(iell, ComplexMode::kStanleyReisner));
    if (*dual != skeleton(*dual_prime, n - ell - 2)) {
      return fail(io::toJson(sigma), "dual mismatch at ell = " +
                                         std::to_string(ell) + " on " +
                                         toString(sigma));
    }
  }
  return any ? positive() : skip();
}

std::vector<CheckResult> suiteSkeletonDual(const SuiteOptions& o) {
  return {toResult("prop-1.3", tallyOver(samplesOr(o, 200), [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 13, i);
    const int n = uniform(rng, 4, 8);
    return skeletonDualCheck(families::randomFlagComplex(rng, n, uniformReal(rng, 0.3, 0.85)));
  }))};
}

// Instances for the Eagon-Reiner and Terai suites: every class on n <= 6
// plus random complexes on 7 or 8 vertices.
struct DualityFamily {
  std::vector<SimplicialComplex> exhaustive;
  std::size_t samples;
  std::uint64_t seed;

  std::size_t size() const { return exhaustive.size() + samples; }
  SimplicialComplex at(std::size_t i, std::uint32_t salt) const {
    if (i < exhaustive.size()) return exhaustive[i];
    Rng rng = instanceRng(seed, salt, i);
    const int n = uniform(rng, 7, 8);
    return families::randomComplex(rng, n, 8, uniformReal(rng, 0.4, 0.8));
  }
};

DualityFamily dualityFamily(const SuiteOptions& o) {
  return {classRepresentatives(o.max_n), samplesOr(o, 1000), o.seed};
}

Outcome eagonReiner(const SimplicialComplex& c, const FieldChoice& field) {
  if (c.isVoid() || isSimplex(c)) return skip();
  auto sides = [&field](const SimplicialComplex& x) {
    return std::pair{isCohenMacaulay(x, field, kSuiteHomology),
                     linearResolution(*dualIdeal(x), field)};
  };
  const auto [cm, linear] = sides(c);
  if (cm != linear) {
    return failComplex(
        c,
        [&](const SimplicialComplex& x) {
          if (x.isVoid() || isSimplex(x)) return false;
          const auto s = sides(x);
          return s.first != s.second;
        },
        std::string("Cohen-Macaulay = ") + (cm ? "true" : "false") +
            " but linear resolution = " + (linear ? "true" : "false"));
  }
  return verdict(cm);
}

Outcome terai(const SimplicialComplex& c, const FieldChoice& field) {
  if (c.isVoid() || isSimplex(c)) return skip();
  auto gap = [&field](const SimplicialComplex& x) {
    const int pd = projdimAndReg(stanleyReisnerIdeal(x), field, kSuiteBetti).projdim;
    const int reg = projdimAndReg(*dualIdeal(x), field, kSuiteBetti).reg;
    return std::pair{pd + 1, reg};
  };
  const auto [pd, reg] = gap(c);
  if (pd != reg) {
    return failComplex(
        c,
        [&](const SimplicialComplex& x) {
          if (x.isVoid() || isSimplex(x)) return false;
          const auto g = gap(x);
          return g.first != g.second;
        },
        "projdim K[Delta] = " + std::to_string(pd) + " but reg I_dual = " +
            std::to_string(reg));
  }
  return positive();
}

std::vector<CheckResult> suiteEagonReiner(const SuiteOptions& o) {
  const DualityFamily fam = dualityFamily(o);
  std::vector<CheckResult> out;
  out.push_back(toResult("thm-1.4a", tallyOver(fam.size(), [&](std::size_t i) {
    return eagonReiner(fam.at(i, 141), o.field);
  }), true));
  // The equivalence must hold over every field, including where torsion
  // makes Cohen-Macaulayness field dependent.
  const FieldChoice two = FieldChoice::prime(2);
  out.push_back(toResult("thm-1.4a/gf2", tallyOver(fam.exhaustive.size(), [&](std::size_t i) {
    return eagonReiner(fam.exhaustive[i], two);
  }), true));
  return out;
}

std::vector<CheckResult> suiteTerai(const SuiteOptions& o) {
  const DualityFamily fam = dualityFamily(o);
  return {toResult("thm-1.4b", tallyOver(fam.size(), [&](std::size_t i) {
    return terai(fam.at(i, 142), o.field);
  }))};
}

SimplicialComplex randomShellingCandidate(Rng& rng) {
  const int n = uniform(rng, 3, 8);
  const int d = uniform(rng, 2, n - 1);
  const auto t = static_cast<std::size_t>(uniform(rng, 2, 8));
  return families::randomPureComplex(rng, n, d, t,
                                     std::bernoulli_distribution(0.6)(rng));
}

const ShellingOptions kSmallShelling{12, std::chrono::milliseconds(30'000)};
const ShellingOptions kLargeShelling{64, std::chrono::milliseconds(30'000)};

Outcome shellingQuotientsCheck(const SimplicialComplex& c) {
  if (isSimplex(c)) return skip();
  auto sides = [](const SimplicialComplex& x) {
    const auto shelling = shellingOrder(x, kSmallShelling);
    if (shelling && !isShellingOrder(x, *shelling)) {
      throw std::logic_error("shelling order failed its verifier");
    }
    const MonomialIdeal dual = facetIdeal(complementComplex(x));
    const auto lq = linearQuotientsOrder(dual);
    if (lq && !isLinearQuotientsOrder(dual, *lq)) {
      throw std::logic_error("linear quotients order failed its verifier");
    }
    return std::pair{shelling.has_value(), lq.has_value()};
  };
  const auto [shellable, lq] = sides(c);
  if (shellable != lq) {
    return failComplex(
        c,
        [&](const SimplicialComplex& x) {
          if (isSimplex(x) || !dimensionInfo(x).is_pure) return false;
          const auto s = sides(x);
          return s.first != s.second;
        },
        std::string("shellable = ") + (shellable ? "true" : "false") +
            " but linear quotients = " + (lq ? "true" : "false"));
  }
  return verdict(shellable);
}

std::vector<CheckResult> suiteShellingQuotients(const SuiteOptions& o) {
  return {toResult("thm-1.4c", tallyOver(samplesOr(o, 1000), [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 143, i);
    return shellingQuotientsCheck(randomShellingCandidate(rng));
  }), true)};
}

std::vector<CheckResult> suiteFlagQuotients(const SuiteOptions& o) {
  return {toResult("cor-1.5", tallyOver(samplesOr(o, 200), [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 15, i);
    const int n = uniform(rng, 4, 8);
    const SimplicialComplex sigma =
        families::randomFlagComplex(rng, n, uniformReal(rng, 0.3, 0.85));
    const int dim = dimensionInfo(sigma).dim;
    const MonomialIdeal one = dim >= 1 ? barSkeletonIdeal(sigma, 1) : MonomialIdeal::zero(n);
    if (dim < 2 || one.isZero()) return skip();
    const bool lq_one = linearQuotientsOrder(one).has_value();
    bool any = false;
    for (int ell = 2; ell <= dim; ++ell) {
      const MonomialIdeal iell = barSkeletonIdeal(sigma, ell);
      if (iell.isZero()) continue;
      any = true;
      if (lq_one && !linearQuotientsOrder(iell)) {
        return fail(io::toJson(sigma), "I_Delta' has linear quotients but "
                                       "I_Delta does not at ell = " +
                                           std::to_string(ell));
      }
    }
    return any ? verdict(lq_one) : skip();
  }))};
}

Outcome shellableSkeletonsCheck(const SimplicialComplex& c) {
  if (c.isVoid() || !dimensionInfo(c).is_pure) return skip();
  const auto shelling = shellingOrder(c, kSmallShelling);
  if (!shelling) return negative();
  const int dim = dimensionInfo(c).dim;
  for (int i = 1; i < dim; ++i) {
    if (!shellingOrder(skeleton(c, i), kLargeShelling)) {
      return fail(io::toJson(c), "skeleton " + std::to_string(i) +
                                     " of a shellable complex is not shellable: " +
                                     toString(c));
    }
  }
  return positive();
}

std::vector<CheckResult> suiteShellableSkeletons(const SuiteOptions& o) {
  const auto reps = classRepresentatives(o.max_n);
  Tally t = tallyOver(reps.size(), [&](std::size_t i) { return shellableSkeletonsCheck(reps[i]); });
  t.merge(tallyOver(samplesOr(o, 1000), [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 16, i);
    return shellableSkeletonsCheck(randomShellingCandidate(rng));
  }));
  return {toResult("lemma-1.6", std::move(t))};
}

// Quasi-trees and relation trees.

Outcome minorCertificateCheck(const SimplicialComplex& c) {
  const std::size_t t = c.numFacets();
  const bool quasi = isQuasiTree(c);
  bool certified = false;
  for (const auto& tree : spanningTrees(t)) {
    const auto dets = minorDeterminants(c, tree);
    const auto expanded = minorDeterminantsByExpansion(c, tree);
    for (std::size_t j = 0; j < t; ++j) {
      if (!expanded[j] || *expanded[j] != dets[j]) {
        return fail(io::toJson(c), "tree elimination and cofactor expansion "
                                   "disagree on " + toString(c));
      }
    }
    if (!verifyMinorCertificate(c, tree)) continue;
    certified = true;
    // Hilbert-Burch: det M#(j) = eps * (-1)^j * u_j for one global eps.
    const int eps = dets[0].sign * -1;
    for (std::size_t j = 0; j < t; ++j) {
      const int expected = eps * ((j + 1) % 2 == 0 ? 1 : -1);
      if (dets[j].sign != expected) {
        return fail(io::toJson(c), "Hilbert-Burch sign pattern broken on " +
                                       toString(c));
      }
    }
  }
  if (quasi != certified) {
    return fail(io::toJson(c), std::string("quasi-tree = ") +
                                   (quasi ? "true" : "false") +
                                   " but minor certificate = " +
                                   (certified ? "true" : "false") + " on " +
                                   toString(c));
  }
  if (quasi && t >= 2) {
    std::vector<Monomial> expected;
    for (Mask f : c.facetMasks()) {
      expected.push_back(Monomial::fromMask(c.ambient(), c.vertexMask() & ~f));
    }
    for (const RelationTree& tree : relationTrees(c)) {
      if (!verifyMinorCertificate(c, tree) ||
          reconstructGenerators(tree) != expected) {
        return fail(io::toJson(c), "relation tree does not reproduce the "
                                   "generators on " + toString(c));
      }
    }
  }
  return verdict(quasi);
}

std::vector<CheckResult> suiteMinorCertificate(const SuiteOptions& o) {
  const auto fam = smallFamily(o.max_n, 1, o.max_facets);
  return {toResult("lemma-2.1", tallyOver(fam.size(), [&](std::size_t i) {
    return minorCertificateCheck(fam[i]);
  }), true)};
}

Outcome projdimOneCheck(const SimplicialComplex& c, const FieldChoice& field) {
  auto sides = [&field](const SimplicialComplex& x) {
    const auto order = leafOrder(x);
    if (order && !isLeafOrder(x, *order)) {
      throw std::logic_error("leaf order failed its verifier");
    }
    const int pd = projdimAndReg(facetIdeal(complementComplex(x)), field,
                                 kSuiteBetti).projdim;
    return std::pair{order.has_value(), pd == 1};
  };
  const auto [quasi, pd1] = sides(c);
  if (quasi != pd1) {
    return failComplex(
        c,
        [&](const SimplicialComplex& x) {
          if (x.numFacets() < 2) return false;
          const auto s = sides(x);
          return s.first != s.second;
        },
        std::string("quasi-tree = ") + (quasi ? "true" : "false") +
            " but projdim I(Delta^c) = 1 is " + (pd1 ? "true" : "false"));
  }
  return verdict(quasi);
}

std::vector<CheckResult> suiteProjdimOne(const SuiteOptions& o) {
  const auto fam = smallFamily(o.max_n, 2, o.max_facets);
  return {toResult("cor-2.2", tallyOver(fam.size(), [&](std::size_t i) {
    return projdimOneCheck(fam[i], o.field);
  }), true)};
}

// Graphs.

std::vector<SimplicialComplex> quasiTreeFamily(const SuiteOptions& o,
                                               std::uint32_t salt,
                                               std::size_t fallback) {
  std::vector<SimplicialComplex> out;
  for (const SimplicialComplex& c : smallFamily(o.max_n, 1, o.max_facets)) {
    if (isQuasiTree(c)) out.push_back(c);
  }
  const std::size_t samples = samplesOr(o, fallback);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = instanceRng(o.seed, salt, i);
    out.push_back(families::randomQuasiTree(rng, uniform(rng, 2, 8), 6));
  }
  return out;
}

std::vector<CheckResult> suiteQuasiTreeFlag(const SuiteOptions& o) {
  const auto fam = quasiTreeFamily(o, 32, 300);
  return {toResult("lemma-3.2", tallyOver(fam.size(), [&](std::size_t i) {
    const SimplicialComplex& c = fam[i];
    // Ambient vertices outside every face are singleton nonfaces; the
    // statement concerns the complex on its own vertex set.
    const Mask used = c.vertexMask();
    for (Mask m : minimalNonfaceMasks(c)) {
      if ((m & ~used) == 0 && bits::popcount(m) != 2) {
        return fail(io::toJson(c), "minimal nonface " + maskToString(m) +
                                       " of the quasi-tree " + toString(c));
      }
    }
    return positive();
  }))};
}

Outcome dirac(const Graph& g) {
  auto check = [](const Graph& x) -> std::string {
    const ChordalityResult c = isChordal(x);
    if (c.chordal ? !isCliqueOrder(x, c.order) : !isChordlessCycle(x, c.cycle)) {
      return "chordality witness failed its verifier";
    }
    const SimplicialComplex delta = cliqueComplex(x);
    if (c.chordal != isQuasiTree(delta)) return "chordal != quasi-tree";
    if (stanleyReisnerIdeal(delta) != edgeIdeal(complementGraph(x))) {
      return "I_Delta(G) != I(complement of G)";
    }
    const Graph one = oneSkeletonGraph(delta).graph;
    if (one != x) return "G is not the 1-skeleton of Delta(G)";
    if (isChordal(one).chordal != isQuasiTree(delta)) {
      return "ideal-side chordality mismatch";
    }
    return {};
  };
  const std::string problem = check(g);
  if (!problem.empty()) {
    return failGraph(g, [&](const Graph& x) { return !check(x).empty(); }, problem);
  }
  return verdict(isChordal(g).chordal);
}

std::vector<CheckResult> suiteDirac(const SuiteOptions& o) {
  Tally t;
  for (int n = 1; n <= std::min(o.max_n, 6); ++n) {
    std::vector<Graph> graphs;
    families::forEachGraph(n, [&](const Graph& g) { graphs.push_back(g); });
    t.merge(tallyOver(graphs.size(), [&](std::size_t i) { return dirac(graphs[i]); }));
  }
  if (o.max_n >= 7) {
    const std::size_t samples = samplesOr(o, 100'000);
    t.merge(tallyOver(samples, [&](std::size_t i) {
      Rng rng = instanceRng(o.seed, 33, i);
      return dirac(families::randomGraph(rng, 7, uniformReal(rng, 0.2, 0.8)));
    }));
    std::vector<Graph> chordal;
    families::forEachChordalGraph(7, [&](const Graph& g) { chordal.push_back(g); });
    t.merge(tallyOver(chordal.size(), [&](std::size_t i) { return dirac(chordal[i]); }));
  }
  return {toResult("thm-3.3", std::move(t), true)};
}

std::vector<CheckResult> suiteLeafDeletion(const SuiteOptions& o) {
  const auto fam = quasiTreeFamily(o, 35, 300);
  return {toResult("cor-3.5", tallyOver(fam.size(), [&](std::size_t i) {
    const SimplicialComplex& c = fam[i];
    const std::size_t t = c.numFacets();
    if (t < 2) return skip();
    for (std::size_t f = 0; f < t; ++f) {
      if (!leafReport(c, f).is_leaf) continue;
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < t; ++k) {
        if (k != f) keep.push_back(k);
      }
      if (!isQuasiTree(subcomplex(c, keep))) {
        return fail(io::toJson(c), "removing leaf " + std::to_string(f + 1) +
                                       " breaks the quasi-tree " + toString(c));
      }
    }
    return positive();
  }))};
}

std::vector<CheckResult> suiteHigherDirac(const SuiteOptions& o) {
  const std::size_t samples = samplesOr(o, 300);
  std::vector<CheckResult> out;
  // Skeletons of known quasi-trees: both sides must hold.
  out.push_back(toResult("thm-3.6/skeletons", tallyOver(samples, [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 36, i);
    const SimplicialComplex sigma =
        families::randomQuasiTree(rng, uniform(rng, 2, 8), 6);
    const int dim = dimensionInfo(sigma).dim;
    for (int ell = 0; ell <= dim; ++ell) {
      const SimplicialComplex delta = skeleton(sigma, ell);
      const HigherDiracReport r = higherDiracCheck(delta);
      if (!r.side_a || !r.side_b) {
        return fail(Json{{"quasi_tree", io::toJson(sigma)}, {"ell", ell}},
                    "skeleton " + std::to_string(ell) + " of " + toString(sigma) +
                        " gives side A = " + (r.side_a ? "true" : "false") +
                        ", side B = " + (r.side_b ? "true" : "false"));
      }
    }
    return positive();
  })));
  // Arbitrary pure complexes: the two sides must agree.
  out.push_back(toResult("thm-3.6", tallyOver(samples, [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 37, i);
    const int n = uniform(rng, 3, 8);
    const int d = uniform(rng, 2, std::min(n, 4));
    const SimplicialComplex c = families::randomPureComplex(
        rng, n, d, static_cast<std::size_t>(uniform(rng, 1, 6)), true);
    const HigherDiracReport r = higherDiracCheck(c);
    if (!r.holds()) {
      return fail(io::toJson(c), "sides disagree on " + toString(c));
    }
    return verdict(r.side_a);
  }), true));
  return out;
}

// Skeleton ideals and powers.

std::vector<CheckResult> suiteSkeletonQuotients(const SuiteOptions& o) {
  return {toResult("thm-4.1", tallyOver(samplesOr(o, 150), [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 41, i);
    const SimplicialComplex sigma =
        families::randomQuasiTree(rng, uniform(rng, 2, 8), 6);
    const int dim = dimensionInfo(sigma).dim;
    bool any = false;
    for (int ell = 0; ell <= dim; ++ell) {
      const MonomialIdeal ideal = barSkeletonIdeal(sigma, ell);
      if (ideal.isZero()) continue;
      any = true;
      const auto order = linearQuotientsOrder(ideal);
      if (!order || !isLinearQuotientsOrder(ideal, *order)) {
        return fail(Json{{"quasi_tree", io::toJson(sigma)}, {"ell", ell}},
                    "no linear quotients for I(bar skel(" + std::to_string(ell) +
                        ")) of " + toString(sigma));
      }
    }
    return any ? positive() : skip();
  }))};
}

std::vector<CheckResult> suiteSkeletonLift(const SuiteOptions& o) {
  const std::size_t samples = samplesOr(o, 300);
  return {toResult("lemma-4.2", tallyOver(samples, [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 42, i);
    const int n = uniform(rng, 3, 8);
    const SimplicialComplex c =
        i % 2 == 0 ? families::randomQuasiTree(rng, n, 6)
                   : families::randomFlagComplex(rng, n, uniformReal(rng, 0.3, 0.9));
    const int dim = dimensionInfo(c).dim;
    if (dim < 2) return skip();
    const MonomialIdeal one = barSkeletonIdeal(c, 1);
    for (int ell = 2; ell <= dim; ++ell) {
      if (skeletonIdealFromOneSkeleton(one, ell, n) != barSkeletonIdeal(c, ell)) {
        return fail(Json{{"complex", io::toJson(c)}, {"ell", ell}},
                    "degree-" + std::to_string(ell + 1) +
                        " multiples of I_1 differ from I_ell on " + toString(c));
      }
    }
    return positive();
  }))};
}

std::vector<CheckResult> suiteRestriction(const SuiteOptions& o) {
  return {toResult("lemma-4.3", tallyOver(samplesOr(o, 150), [&](std::size_t i) {
    Rng rng = instanceRng(o.seed, 43, i);
    const int n = uniform(rng, 2, 8);
    const int degree = uniform(rng, 2, 3);
    const MonomialIdeal ideal =
        families::randomLinearQuotientIdeal(rng, n, degree, 8, 2);
    const BettiTable full = bettiTable(ideal, o.field, kSuiteBetti);
    if (!summarize(full, ideal).linear_resolution) {
      return failIdeal(
          ideal,
          [&](const MonomialIdeal& x) {
            return !x.isZero() && !linearResolution(x, o.field);
          },
          "generated ideal lacks a linear resolution");
    }
    std::vector<int> bound(n);
    for (int& a : bound) a = uniform(rng, 0, 2);
    const MonomialIdeal restricted = restrictIdeal(ideal, bound);
    if (restricted.isZero()) return skip();
    const BettiTable part = bettiTable(restricted, o.field, kSuiteBetti);
    // The resolution of I^{<=a} is the part of the resolution of I in
    // multidegrees <= a.
    std::vector<BettiEntry> expected;
    for (const BettiEntry& e : full.entries()) {
      bool below = true;
      for (int k = 0; k < n; ++k) below = below && e.multidegree[k] <= bound[k];
      if (below) expected.push_back(e);
    }
    if (part != BettiTable(n, expected) ||
        !summarize(part, restricted).linear_resolution) {
      return fail(Json{{"ideal", io::toJson(ideal, true)}, {"bound", bound}},
                  "restriction of " + toString(ideal) +
                      " is not resolved by the bounded subcomplex");
    }
    return positive();
  }))};
}

// Rough count of monomials built by gradedComponentIdeal.
double componentSize(const MonomialIdeal& ideal, int j) {
  double total = 0;
  const int n = ideal.numVars();
  for (const Monomial& g : ideal.generators()) {
    const int extra = j - g.degree();
    if (extra < 0) continue;
    double c = 1;
    for (int k = 1; k <= extra; ++k) c = c * (n - 1 + k) / k;
    total += c;
  }
  return total;
}

std::vector<CheckResult> suitePowers(const SuiteOptions& o) {
  std::vector<SimplicialComplex> instances;
  if (o.complex) {
    instances.push_back(*o.complex);
  } else {
    instances.push_back(exampleQuasiTree());
    const std::size_t samples = samplesOr(o, 25);
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng = instanceRng(o.seed, 44, i);
      instances.push_back(families::randomQuasiTree(rng, uniform(rng, 3, 7), 5));
    }
  }
  std::vector<Tally> identity_parts(instances.size());
  Tally powers = tallyOver(instances.size(), [&](std::size_t i) {
    const SimplicialComplex& sigma = instances[i];
    if (!isQuasiTree(sigma)) {
      return fail(io::toJson(sigma), "input is not a quasi-tree: " + toString(sigma));
    }
    const int dim = dimensionInfo(sigma).dim;
    const int n = sigma.ambient();
    bool any = false;
    for (int ell = 1; ell <= dim; ++ell) {
      const MonomialIdeal j_ideal = barSkeletonIdeal(sigma, ell);
      if (j_ideal.isZero()) continue;
      any = true;
      const MonomialIdeal one = barSkeletonIdeal(sigma, 1);
      MonomialIdeal jk = j_ideal;
      MonomialIdeal ik = one;
      for (int k = 1; k <= o.max_power; ++k) {
        if (k > 1) {
          jk = power(j_ideal, k);
          ik = power(one, k);
        }
        if (!linearResolution(jk, o.field)) {
          return fail(Json{{"quasi_tree", io::toJson(sigma)}, {"ell", ell}, {"k", k}},
                      "power " + std::to_string(k) + " of I(bar skel(" +
                          std::to_string(ell) + ")) is not linear for " +
                          toString(sigma));
        }
        // J^k = ((I^k)_<k(ell+1)>)^{<=(k..k)}, checked where affordable.
        const int degree = k * (ell + 1);
        if (componentSize(ik, degree) > 50'000) {
          identity_parts[i].add(skip());
          continue;
        }
        const MonomialIdeal rebuilt = restrictIdeal(
            gradedComponentIdeal(ik, degree, {64}), std::vector<int>(n, k));
        if (rebuilt != jk) {
          identity_parts[i].add(fail(Json{{"quasi_tree", io::toJson(sigma)}, {"ell", ell}, {"k", k}},
                            "J^k differs from the bounded component of I^k"));
        } else {
          identity_parts[i].add(positive());
        }
      }
    }
    return any ? positive() : skip();
  });
  Tally identity;
  for (Tally& part : identity_parts) identity.merge(std::move(part));
  return {toResult("thm-4.4", std::move(powers)),
          toResult("thm-4.4/power-identity", std::move(identity))};
}

using SuiteFn = std::vector<CheckResult> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"lemma-1.1", suiteBarComplement}, {"lemma-1.2", suiteDualIdeal},
      {"prop-1.3", suiteSkeletonDual},   {"thm-1.4a", suiteEagonReiner},
      {"thm-1.4b", suiteTerai},   {"thm-1.4c", suiteShellingQuotients},
      {"cor-1.5", suiteFlagQuotients},     {"lemma-1.6", suiteShellableSkeletons},
      {"lemma-2.1", suiteMinorCertificate}, {"cor-2.2", suiteProjdimOne},
      {"lemma-3.2", suiteQuasiTreeFlag}, {"thm-3.3", suiteDirac},
      {"cor-3.5", suiteLeafDeletion},     {"thm-3.6", suiteHigherDirac},
      {"thm-4.1", suiteSkeletonQuotients},     {"lemma-4.2", suiteSkeletonLift},
      {"lemma-4.3", suiteRestriction}, {"thm-4.4", suitePowers},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckResult> runSuite(std::string_view name,
                                  const SuiteOptions& options) {
  if (options.max_n < 1) throw DomainError("--max-n must be positive");
  std::vector<CheckResult> out;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) {
      auto part = fn(options);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (out.empty()) throw DomainError("unknown suite '" + std::string(name) + "'");
  return out;
}

MonomialIdeal barSkeletonIdeal(const SimplicialComplex& complex, int ell) {
  const SimplicialComplex bar = pureComplement(skeleton(complex, ell));
  if (bar.isVoid()) return MonomialIdeal::zero(complex.ambient());
  return facetIdeal(bar);
}

SimplicialComplex minimizeComplex(
    SimplicialComplex complex,
    const std::function<bool(const SimplicialComplex&)>& fails) {
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (std::size_t f = 0; f < complex.numFacets(); ++f) {
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < complex.numFacets(); ++k) {
        if (k != f) keep.push_back(k);
      }
      SimplicialComplex smaller = subcomplex(complex, keep);
      if (fails(smaller)) {
        complex = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return complex;
}

Graph minimizeGraph(Graph g, const std::function<bool(const Graph&)>& fails) {
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (auto [u, v] : g.edges()) {
      std::vector<Mask> adj = g.adjacency();
      adj[u - 1] &= ~bits::vertexBit(v);
      adj[v - 1] &= ~bits::vertexBit(u);
      Graph smaller = Graph::fromAdjacency(std::move(adj));
      if (fails(smaller)) {
        g = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return g;
}

MonomialIdeal minimizeIdeal(
    MonomialIdeal ideal, const std::function<bool(const MonomialIdeal&)>& fails) {
  for (bool shrunk = true; shrunk && ideal.size() > 1;) {
    shrunk = false;
    for (std::size_t k = 0; k < ideal.size(); ++k) {
      std::vector<Monomial> gens = ideal.generators();
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
      MonomialIdeal smaller = MonomialIdeal::generatedBy(ideal.numVars(), gens);
      if (fails(smaller)) {
        ideal = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return ideal;
}

void parallelFor(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = std::min<std::size_t>(
      count, std::max<std::size_t>(1, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count && !failed;) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace alexdual::verify
