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

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/graph.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/ideal.hpp"
#include "alexdual/monomial.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

using alexdual::Mask;

inline Mask maskOf(std::initializer_list<int> members) {
  Mask m = 0;
  for (int v : members) m |= alexdual::bits::vertexBit(v);
  return m;
}

inline alexdual::SimplicialComplex complexOf(
    int n, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<Mask> masks;
  for (const auto& f : facets) masks.push_back(maskOf(f));
  return alexdual::SimplicialComplex::fromMasks(n, masks);
}

inline alexdual::MonomialIdeal idealOf(int n, std::initializer_list<const char*> gens) {
  std::vector<alexdual::Monomial> ms;
  for (const char* g : gens) ms.push_back(alexdual::parseMonomial(g, n));
  return alexdual::MonomialIdeal::generatedBy(n, ms);
}

inline alexdual::Graph graphOf(int n, std::vector<std::pair<int, int>> edges) {
  return alexdual::Graph(n, edges);
}

// The quasi-tree of the relation-tree example, with a..f read as 1..6.
inline alexdual::SimplicialComplex deltaQ() {
  return complexOf(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {3, 4, 6}});
}

// The complex whose bar ideal has linear quotients without being a quasi-tree.
inline alexdual::SimplicialComplex deltaN() {
  return complexOf(6, {{1, 2, 3}, {3, 4, 5}, {2, 4, 6}});
}

inline alexdual::MonomialIdeal idealEx() {
  return idealOf(6, {"x4*x5*x6", "x1*x5*x6", "x1*x2*x6", "x1*x2*x5"});
}

inline std::vector<Mask> masks(const alexdual::SimplicialComplex& c) {
  return {c.facetMasks().begin(), c.facetMasks().end()};
}

inline std::vector<oracle::Exponents> exponents(const alexdual::MonomialIdeal& ideal) {
  std::vector<oracle::Exponents> out;
  for (const auto& g : ideal.generators()) out.push_back(g.exponents());
  return out;
}

inline oracle::BettiMap bettiMap(const alexdual::BettiTable& table) {
  oracle::BettiMap out;
  for (const auto& e : table.entries()) {
    out[{e.homological_degree, e.multidegree}] = e.rank;
  }
  return out;
}

}  // namespace testing_support

namespace alexdual {

// Readable gtest failure messages.
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << toString(m); }
inline void PrintTo(const SimplicialComplex& c, std::ostream* os) { *os << toString(c); }
inline void PrintTo(const MonomialIdeal& i, std::ostream* os) { *os << toString(i); }

}  // namespace alexdual
