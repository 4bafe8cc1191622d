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

#include <set>

#include "alexdual/errors.hpp"
#include "alexdual/families.hpp"
#include "alexdual/quasitree.hpp"
#include "support.hpp"

namespace {

using namespace alexdual;
using namespace testing_support;

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Monomial x(int n, const char* text) { return parseMonomial(text, n); }

TEST(LeafReport, Examples) {
  const LeafReport q = leafReport(deltaQ(), 0);
  EXPECT_TRUE(q.is_leaf);
  EXPECT_EQ(q.branches, std::vector<std::size_t>{1});
  EXPECT_EQ(q.free_vertices.members(), std::vector<int>{1});
  EXPECT_FALSE(leafReport(deltaN(), 0).is_leaf);
  const LeafReport single = leafReport(complexOf(3, {{1, 2}}), 0);
  EXPECT_TRUE(single.is_leaf);
  EXPECT_TRUE(single.branches.empty());
  EXPECT_THROW(leafReport(deltaQ(), 4), DomainError);
}

TEST(LeafOrder, Examples) {
  const auto q = leafOrder(deltaQ());
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(isLeafOrder(deltaQ(), *q));
  EXPECT_FALSE(leafOrder(deltaN()).has_value());
  const auto path = complexOf(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(isLeafOrder(path, std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(isLeafOrder(path, std::vector<std::size_t>{1, 0}));
}

TEST(LeafOrder, MatchesDefinitionSearch) {
  int yes = 0;
  int no = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : families::smallComplexes(n, 3, 1, 5)) {
      const bool want = oracle::hasLeafOrder(masks(c));
      const auto order = leafOrder(c);
      EXPECT_EQ(order.has_value(), want) << toString(c);
      if (order) EXPECT_TRUE(isLeafOrder(c, *order));
      (want ? yes : no)++;
    }
  }
  EXPECT_GT(yes, 100);
  EXPECT_GT(no, 100);
}

TEST(MDelta, Examples) {
  const MonomialMatrix q = buildMDelta(deltaQ());
  EXPECT_EQ(q.num_cols, 4U);
  EXPECT_EQ(q.rows.size(), 6U);
  // Row (1,2) of M_Delta for delta_Q: (x1, -x4, 0, 0).
  EXPECT_EQ(q.rows[0].i, 0U);
  EXPECT_EQ(q.rows[0].j, 1U);
  EXPECT_EQ(q.rows[0].at_i.value, x(6, "x1"));
  EXPECT_EQ(q.rows[0].at_j.value, x(6, "x4"));
  EXPECT_EQ(q.rows[0].at_i.sign, -q.rows[0].at_j.sign);

  const MonomialMatrix disjoint = buildMDelta(complexOf(4, {{1, 2}, {3, 4}}));
  ASSERT_EQ(disjoint.rows.size(), 1U);
  EXPECT_EQ(disjoint.rows[0].at_i.value, x(4, "x1*x2"));
  EXPECT_EQ(disjoint.rows[0].at_j.value, x(4, "x3*x4"));

  const MonomialMatrix path = buildMDelta(complexOf(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(path.rows[0].at_i.value, x(3, "x1"));
  EXPECT_EQ(path.rows[0].at_j.value, x(3, "x3"));
  EXPECT_THROW(buildMDelta(complexOf(3, {{1, 2}})), DomainError);
}

TEST(TaylorRelations, Examples) {
  const auto rel = taylorRelations(idealEx());
  ASSERT_EQ(rel.size(), 6U);
  // Pair (1,2): u_21 = x1 and u_12 = x4.
  EXPECT_EQ(rel[0].u_ji, x(6, "x1"));
  EXPECT_EQ(rel[0].u_ij, x(6, "x4"));
  // Pair (2,3): u_32 = x2 and u_23 = x5.
  EXPECT_EQ(rel[3].i, 1U);
  EXPECT_EQ(rel[3].j, 2U);
  EXPECT_EQ(rel[3].u_ji, x(6, "x2"));
  EXPECT_EQ(rel[3].u_ij, x(6, "x5"));
  // Generators are stored in canonical order, so x2 comes first.
  const auto coprime = taylorRelations(idealOf(2, {"x1", "x2"}));
  EXPECT_EQ(coprime[0].u_ij, x(2, "x2"));
  EXPECT_EQ(coprime[0].u_ji, x(2, "x1"));
  EXPECT_THROW(taylorRelations(idealOf(2, {"x1"})), DomainError);
}

TEST(MinorCertificate, DeltaQTrees) {
  for (const Pairs& tree : {Pairs{{0, 1}, {1, 2}, {1, 3}}, Pairs{{0, 1}, {1, 2}, {2, 3}},
                            Pairs{{0, 1}, {1, 3}, {2, 3}}}) {
    EXPECT_TRUE(verifyMinorCertificate(deltaQ(), tree));
    const auto dets = minorDeterminants(deltaQ(), tree);
    const auto gens = idealEx().generators();
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(dets[j].value, gens[j]);
      EXPECT_EQ(dets[j].sign, j % 2 == 0 ? -1 : 1);
    }
  }
}

TEST(MinorCertificate, DeltaNFailsForEveryTree) {
  for (const auto& tree : spanningTrees(3)) {
    EXPECT_FALSE(verifyMinorCertificate(deltaN(), tree));
  }
}

TEST(MinorCertificate, RejectsNonTrees) {
  EXPECT_THROW(verifyMinorCertificate(deltaQ(), Pairs{{0, 1}, {1, 2}, {0, 2}}), DomainError);
  EXPECT_THROW(verifyMinorCertificate(deltaQ(), Pairs{{0, 1}, {1, 2}}), DomainError);
}

TEST(MinorCertificate, EliminationMatchesCofactorExpansion) {
  for (const auto& c : families::smallComplexes(5, 3, 2, 4)) {
    for (const auto& tree : spanningTrees(c.numFacets())) {
      const auto fast = minorDeterminants(c, tree);
      const auto slow = minorDeterminantsByExpansion(c, tree);
      for (std::size_t j = 0; j < fast.size(); ++j) {
        ASSERT_TRUE(slow[j].has_value());
        EXPECT_EQ(*slow[j], fast[j]) << toString(c);
      }
    }
  }
}

TEST(SpanningTrees, CayleyCounts) {
  EXPECT_EQ(spanningTrees(1).size(), 1U);
  EXPECT_EQ(spanningTrees(2).size(), 1U);
  EXPECT_EQ(spanningTrees(4).size(), 16U);
  EXPECT_EQ(spanningTrees(5).size(), 125U);
  EXPECT_EQ(spanningTrees(6).size(), 1296U);
}

std::set<Pairs> treeShapes(const std::vector<RelationTree>& trees) {
  std::set<Pairs> out;
  for (const auto& t : trees) out.insert(t.edgePairs());
  return out;
}

TEST(RelationTrees, DeltaQHasExactlyThree) {
  const auto trees = relationTrees(deltaQ());
  EXPECT_EQ(treeShapes(trees),
            (std::set<Pairs>{{{0, 1}, {1, 2}, {1, 3}}, {{0, 1}, {1, 2}, {2, 3}},
                             {{0, 1}, {1, 3}, {2, 3}}}));
  for (const auto& t : trees) {
    EXPECT_EQ(reconstructGenerators(t), idealEx().generators());
  }
}

TEST(RelationTrees, SmallCases) {
  EXPECT_EQ(treeShapes(relationTrees(complexOf(3, {{1, 2}, {2, 3}}))), (std::set<Pairs>{{{0, 1}}}));
  const auto path = treeShapes(relationTrees(complexOf(4, {{1, 2}, {2, 3}, {3, 4}})));
  EXPECT_TRUE(path.count(Pairs{{0, 1}, {1, 2}}));
  EXPECT_THROW(relationTrees(deltaN()), DomainError);
}

TEST(Reconstruct, Examples) {
  const RelationTree tree = labelFromGenerators(idealEx().generators(), Pairs{{0, 1}, {1, 2}, {1, 3}});
  const auto gens = reconstructGenerators(tree);
  EXPECT_EQ(gens[0], x(6, "x4*x5*x6"));
  EXPECT_EQ(gens[2], x(6, "x1*x2*x6"));
  const RelationTree edge = labelFromGenerators(idealOf(2, {"x1", "x2"}).generators(), Pairs{{0, 1}});
  EXPECT_EQ(reconstructGenerators(edge), (std::vector<Monomial>{x(2, "x2"), x(2, "x1")}));
}

TEST(Reconstruct, InconsistentLabelsAreRejected) {
  RelationTree tree = labelFromGenerators(idealEx().generators(), Pairs{{0, 1}, {1, 2}, {1, 3}});
  // Both sides of a relation cannot keep a common variable.
  tree.edges[0].u_ij = x(6, "x4");
  tree.edges[0].u_ji = x(6, "x4");
  EXPECT_THROW(reconstructGenerators(tree), DomainError);
}

TEST(RelationTrees, EveryTreeReconstructsTheIdeal) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& c : families::smallComplexes(n, 3, 2, 4)) {
      if (!isQuasiTree(c)) continue;
      std::vector<Monomial> want;
      for (Mask f : c.facetMasks()) want.push_back(Monomial::fromMask(n, c.vertexMask() & ~f));
      for (const auto& t : relationTrees(c)) {
        EXPECT_TRUE(verifyMinorCertificate(c, t)) << toString(c);
        EXPECT_EQ(reconstructGenerators(t), want) << toString(c);
      }
    }
  }
}

}  // namespace
