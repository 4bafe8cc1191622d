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

#include <gtest/gtest.h>

#include "alexdual/errors.hpp"
#include "alexdual/quasitree.hpp"
#include "alexdual/verify.hpp"
#include "support.hpp"

namespace {

using namespace alexdual;
using namespace testing_support;

verify::SuiteOptions quick() {
  verify::SuiteOptions o;
  o.seed = 7;
  o.max_n = 4;
  o.max_facets = 3;
  o.max_power = 2;
  o.samples = 30;
  return o;
}

TEST(Verify, EverySuitePassesOnSmallBudgets) {
  for (const std::string& name : verify::suiteNames()) {
    if (name == "all") continue;
    for (const verify::CheckResult& r : verify::runSuite(name, quick())) {
      EXPECT_TRUE(r.passed) << r.name << ": " << r.detail << " " << r.witness.dump();
      EXPECT_GT(r.instances, 0U) << r.name;
    }
  }
}

TEST(Verify, ResultsAreDeterministic) {
  auto summary = [](const std::vector<verify::CheckResult>& rs) {
    std::vector<std::size_t> out;
    for (const auto& r : rs) {
      out.insert(out.end(), {r.instances, r.positives, r.negatives, r.skipped});
    }
    return out;
  };
  for (const char* name : {"thm-1.4c", "thm-4.1", "lemma-4.3"}) {
    EXPECT_EQ(summary(verify::runSuite(name, quick())), summary(verify::runSuite(name, quick())));
  }
  verify::SuiteOptions other = quick();
  other.seed = 8;
  EXPECT_NE(summary(verify::runSuite("thm-1.4c", quick())),
            summary(verify::runSuite("thm-1.4c", other)));
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(verify::runSuite("lemma-9.9", quick()), DomainError);
}

TEST(Verify, ComplexOptionIsUsedByPowers) {
  verify::SuiteOptions o = quick();
  o.complex = deltaQ();
  o.max_power = 3;
  const auto rs = verify::runSuite("thm-4.4", o);
  ASSERT_FALSE(rs.empty());
  EXPECT_TRUE(rs[0].passed);
  EXPECT_EQ(rs[0].instances, 1U);
  o.complex = deltaN();
  EXPECT_FALSE(verify::runSuite("thm-4.4", o)[0].passed);
}

TEST(BarSkeletonIdeal, NonConverseExample) {
  const MonomialIdeal bar = verify::barSkeletonIdeal(deltaN(), 2);
  EXPECT_EQ(bar, facetIdeal(pureComplement(deltaN())));
  EXPECT_TRUE(linearQuotientsOrder(bar).has_value());
  EXPECT_FALSE(isQuasiTree(deltaN()));
}

TEST(Minimize, ComplexKeepsFailure) {
  // Failing means "not a quasi-tree"; the core obstruction is three facets.
  const auto big = complexOf(7, {{1, 2, 3}, {3, 4, 5}, {2, 4, 6}, {6, 7}});
  const auto small = verify::minimizeComplex(
      big, [](const SimplicialComplex& c) { return !isQuasiTree(c); });
  EXPECT_FALSE(isQuasiTree(small));
  EXPECT_EQ(small.numFacets(), 3U);
}

TEST(Minimize, GraphKeepsFailure) {
  const Graph g = graphOf(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {5, 6}, {1, 6}});
  const Graph small =
      verify::minimizeGraph(g, [](const Graph& x) { return !isChordal(x).chordal; });
  EXPECT_FALSE(isChordal(small).chordal);
  EXPECT_EQ(small.numEdges(), 4U);
}

TEST(Minimize, IdealKeepsFailure) {
  // Three disjoint edges; any two already lack linear quotients.
  const auto i = idealOf(6, {"x1*x2", "x3*x4", "x5*x6"});
  const auto small = verify::minimizeIdeal(
      i, [](const MonomialIdeal& x) { return !linearQuotientsOrder(x).has_value(); });
  EXPECT_FALSE(linearQuotientsOrder(small).has_value());
  EXPECT_EQ(small.size(), 2U);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  verify::parallelFor(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(verify::parallelFor(10, [](std::size_t i) {
                 if (i == 3) throw DomainError("boom");
               }),
               DomainError);
}

}  // namespace
