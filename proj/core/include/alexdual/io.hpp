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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "alexdual/complex.hpp"
#include "alexdual/graph.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/ideal.hpp"
#include "alexdual/quasitree.hpp"

namespace alexdual::io {

using Json = nlohmann::json;

// Parse errors carry a JSON pointer ("/facets/2/1") or "byte N".
Json parseText(std::string_view text);

struct ComplexParseOptions {
  // Drop non-maximal faces instead of rejecting comparable facet pairs.
  bool minimalize = false;
};

// {"ambient": n, "facets": [[1,2,3], ...]}
SimplicialComplex complexFromJson(const Json& j,
                                  const ComplexParseOptions& options = {});
Json toJson(const SimplicialComplex& complex);

// {"vars": n, "generators": [[0,1,1], "x2*x3", ...]}
MonomialIdeal idealFromJson(const Json& j);
Json toJson(const MonomialIdeal& ideal, bool pretty = false);
Json toJson(const Monomial& m, bool pretty = false);
Monomial monomialFromJson(const Json& j, int num_vars, const std::string& path);

// {"n": 4, "edges": [[1,2], ...]}
Graph graphFromJson(const Json& j);
Json toJson(const Graph& g);
// One graph in graph6 format (no header), n <= 62.
Graph parseGraph6(std::string_view text);
std::string toGraph6(const Graph& g);

// {"vars", "entries": [{"i", "multidegree", "rank"}], "projdim", "reg",
// "linear"}; the summary fields are null for the zero ideal.
Json toJson(const BettiTable& table, const MonomialIdeal& ideal);

// {"t", "edges": [[1,2], ...], "labels": {"1-2": {"u_ij", "u_ji"}}}
Json toJson(const RelationTree& tree, bool pretty = false);
RelationTree relationTreeFromJson(const Json& j);

Json toJson(const MonomialMatrix& m, bool pretty = false);

}  // namespace alexdual::io
