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

#include <algorithm>

#include "alexdual/complex.hpp"
#include "alexdual/errors.hpp"
#include "alexdual/families.hpp"
#include "alexdual/ideal.hpp"
#include "support.hpp"

namespace {

using namespace alexdual;
using namespace testing_support;

TEST(VertexSet, RejectsOutOfRangeAndRepeats) {
  EXPECT_THROW(VertexSet(3, maskOf({4})), DomainError);
  const std::vector<int> repeated{1, 1};
  EXPECT_THROW(VertexSet::fromMembers(3, repeated), DomainError);
  EXPECT_EQ(VertexSet(4, maskOf({1, 3})).complement().members(), (std::vector<int>{2, 4}));
}

TEST(Complex, FacetsAreCanonicallyOrdered) {
  const auto c = complexOf(4, {{3, 4}, {2}, {1, 3}});
  std::vector<Mask> want{maskOf({2}), maskOf({1, 3}), maskOf({3, 4})};
  std::sort(want.begin(), want.end(), bits::canonicalLess);
  EXPECT_EQ(masks(c), want);
}

TEST(Complex, RejectsComparableFacets) {
  EXPECT_THROW(complexOf(3, {{1, 2}, {1}}), DomainError);
  const auto fixed = SimplicialComplex::minimalized(3, {maskOf({1, 2}), maskOf({1})});
  EXPECT_EQ(fixed, complexOf(3, {{1, 2}}));
}

TEST(Skeleton, SimplexEdges) {
  EXPECT_EQ(skeleton(complexOf(3, {{1, 2, 3}}), 1), complexOf(3, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Skeleton, DeltaQEdges) {
  EXPECT_EQ(skeleton(deltaQ(), 1),
            complexOf(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {3, 6}, {4, 6}}));
}

TEST(Skeleton, TopSkeletonOfPureComplexIsItself) {
  EXPECT_EQ(skeleton(deltaQ(), 2), deltaQ());
  EXPECT_THROW(skeleton(deltaQ(), 3), DomainError);
}

TEST(DimensionInfo, Examples) {
  EXPECT_EQ(dimensionInfo(complexOf(3, {{1, 2}, {2, 3}})).dim, 1);
  EXPECT_TRUE(dimensionInfo(complexOf(3, {{1, 2}, {2, 3}})).is_pure);
  const auto mixed = dimensionInfo(complexOf(5, {{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(mixed.dim, 2);
  EXPECT_FALSE(mixed.is_pure);
  EXPECT_EQ(dimensionInfo(deltaQ()).dim, 2);
}

TEST(PureComplement, Examples) {
  EXPECT_TRUE(pureComplement(complexOf(3, {{1, 2}, {1, 3}, {2, 3}})).isVoid());
  EXPECT_EQ(pureComplement(complexOf(3, {{1, 2}, {2, 3}})), complexOf(3, {{1, 3}}));
  EXPECT_EQ(pureComplement(skeleton(deltaQ(), 1)),
            complexOf(6, {{1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {5, 6}}));
  EXPECT_THROW(pureComplement(complexOf(5, {{1, 2, 3}, {4, 5}})), DomainError);
}

TEST(AlexanderDual, PathOnThreeVertices) {
  const auto path = complexOf(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(*alexanderDual(path), complexOf(3, {{2}}));
  EXPECT_EQ(*alexanderDual(*alexanderDual(path)), path);
}

TEST(AlexanderDual, SimplexHasNoDual) {
  EXPECT_FALSE(alexanderDual(complexOf(3, {{1, 2, 3}})).has_value());
}

TEST(AlexanderDual, MatchesSubsetEnumeration) {
  for (int n = 1; n <= 4; ++n) {
    families::forEachDownset(n, [n](families::FaceSet d) {
      const auto c = families::complexFromFaceSet(n, d);
      if (c.isVoid()) return;
      const auto dual = alexanderDual(c);
      const auto expected = oracle::dualFacets(n, masks(c));
      if (!dual) {
        EXPECT_TRUE(expected.empty());
        return;
      }
      EXPECT_EQ(*dual, SimplicialComplex::minimalized(n, expected)) << toString(c);
    });
  }
}

TEST(ComplementComplex, Examples) {
  EXPECT_EQ(complementComplex(complexOf(3, {{1, 2}})), complexOf(3, {{3}}));
  EXPECT_EQ(complementComplex(deltaQ()),
            complexOf(6, {{4, 5, 6}, {1, 5, 6}, {1, 2, 6}, {1, 2, 5}}));
  EXPECT_EQ(complementComplex(complexOf(3, {{1, 2}, {2, 3}})), complexOf(3, {{3}, {1}}));
  EXPECT_THROW(complementComplex(complexOf(2, {{1, 2}})), DomainError);
}

TEST(MinimalNonfaces, Examples) {
  const auto boundary = minimalNonfaces(complexOf(3, {{1, 2}, {1, 3}, {2, 3}}));
  ASSERT_EQ(boundary.nonfaces.size(), 1U);
  EXPECT_EQ(boundary.nonfaces[0].bits(), maskOf({1, 2, 3}));
  EXPECT_FALSE(boundary.is_flag);

  const auto simplex = minimalNonfaces(complexOf(3, {{1, 2, 3}}));
  EXPECT_TRUE(simplex.nonfaces.empty());
  EXPECT_TRUE(simplex.is_flag);

  const auto q = minimalNonfaces(deltaQ());
  std::vector<Mask> got;
  for (const auto& f : q.nonfaces) got.push_back(f.bits());
  std::sort(got.begin(), got.end());
  std::vector<Mask> want{maskOf({1, 4}), maskOf({1, 5}), maskOf({1, 6}),
                         maskOf({2, 5}), maskOf({2, 6}), maskOf({5, 6})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_TRUE(q.is_flag);
}

TEST(MinimalNonfaces, MatchesSubsetEnumeration) {
  for (int n = 1; n <= 4; ++n) {
    families::forEachDownset(n, [n](families::FaceSet d) {
      const auto c = families::complexFromFaceSet(n, d);
      if (c.isVoid()) return;
      auto got = minimalNonfaceMasks(c);
      auto want = oracle::minimalNonfaces(n, masks(c));
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want) << toString(c);
    });
  }
}

TEST(ContainsFace, Examples) {
  EXPECT_TRUE(containsFace(deltaQ(), VertexSet(6, maskOf({3, 4}))));
  EXPECT_FALSE(containsFace(deltaQ(), VertexSet(6, maskOf({1, 4}))));
  EXPECT_TRUE(containsFace(deltaQ(), VertexSet(6, 0)));
}

TEST(Subcomplex, KeepsSelectedFacets) {
  const std::vector<std::size_t> keep{0, 2};
  EXPECT_EQ(subcomplex(deltaQ(), keep), complexOf(6, {{1, 2, 3}, {3, 4, 5}}));
}

TEST(Complex, ToString) {
  EXPECT_EQ(toString(complexOf(3, {{1, 2}, {2, 3}})), "<{1,2},{2,3}> on [3]");
}

}  // namespace
