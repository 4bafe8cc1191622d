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

#include "alexdual/families.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/ideal.hpp"
#include "alexdual/quasitree.hpp"
#include "support.hpp"

namespace {

using namespace alexdual;
using namespace testing_support;

TEST(Downsets, DedekindNumbers) {
  const std::vector<std::size_t> want{2, 3, 6, 20, 168, 7581};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(families::downsets(n).size(), want[n]) << n;
}

TEST(Downsets, ClassCountsAndOrbitSums) {
  // Inequivalent monotone Boolean functions: 2, 3, 5, 10, 30, 210.
  const std::vector<std::size_t> want{2, 3, 5, 10, 30, 210};
  const std::vector<std::size_t> factorial{1, 1, 2, 6, 24, 120};
  for (int n = 0; n <= 5; ++n) {
    const auto reps = families::downsetClassRepresentatives(n);
    EXPECT_EQ(reps.size(), want[n]);
    std::size_t orbit_total = 0;
    for (auto d : reps) orbit_total += factorial[n] / families::stabilizerSize(n, d);
    EXPECT_EQ(orbit_total, families::downsets(n).size());
  }
}

TEST(Downsets, FaceSetRoundTrip) {
  for (auto d : families::downsets(4)) {
    const auto c = families::complexFromFaceSet(4, d);
    if (!c.isVoid()) EXPECT_EQ(families::faceSetOf(c), d);
  }
}

TEST(SmallComplexes, CoverTheVertexSet) {
  const auto all = families::smallComplexes(4, 3, 1, 4);
  std::set<std::vector<Mask>> seen;
  for (const auto& c : all) {
    EXPECT_EQ(c.vertexMask(), bits::lowMask(4));
    EXPECT_LE(c.numFacets(), 4U);
    for (Mask f : c.facetMasks()) EXPECT_LE(bits::popcount(f), 3);
    EXPECT_TRUE(seen.insert(masks(c)).second);
  }
}

TEST(Random, GeneratorsAreDeterministic) {
  families::Rng a(99);
  families::Rng b(99);
  for (int k = 0; k < 20; ++k) {
    EXPECT_EQ(families::randomQuasiTree(a, 7, 5), families::randomQuasiTree(b, 7, 5));
  }
}

TEST(Random, QuasiTreesAreQuasiTrees) {
  families::Rng rng(1);
  for (int k = 0; k < 500; ++k) {
    const auto c = families::randomQuasiTree(rng, 2 + k % 7, 6);
    EXPECT_TRUE(oracle::hasLeafOrder(masks(c))) << toString(c);
  }
}

TEST(Random, ChordalGraphsAreChordal) {
  families::Rng rng(2);
  for (int k = 0; k < 300; ++k) {
    EXPECT_TRUE(oracle::isChordal(families::randomChordalGraph(rng, 2 + k % 6).adjacency()));
  }
}

TEST(Random, FlagComplexesAreFlag) {
  families::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    EXPECT_TRUE(minimalNonfaces(families::randomFlagComplex(rng, 3 + k % 5, 0.5)).is_flag);
  }
}

TEST(Random, PureComplexesArePure) {
  families::Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const auto c = families::randomPureComplex(rng, 6, 3, 5, k % 2 == 0);
    EXPECT_TRUE(dimensionInfo(c).is_pure);
    EXPECT_EQ(dimensionInfo(c).dim, 2);
  }
}

TEST(Random, LinearQuotientIdealsHaveLinearQuotients) {
  families::Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto i = families::randomLinearQuotientIdeal(rng, 5, 2 + k % 2, 6, 2);
    EXPECT_TRUE(oracle::hasLinearQuotients(exponents(i))) << toString(i);
  }
}

TEST(Relabel, PreservesQuasiTrees) {
  families::Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    const auto perm = families::randomPermutation(rng, 6);
    EXPECT_TRUE(isQuasiTree(families::relabel(deltaQ(), perm)));
    EXPECT_FALSE(isQuasiTree(families::relabel(deltaN(), perm)));
  }
}

}  // namespace
