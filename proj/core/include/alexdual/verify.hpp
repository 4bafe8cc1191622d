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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "alexdual/complex.hpp"
#include "alexdual/field.hpp"
#include "alexdual/graph.hpp"
#include "alexdual/ideal.hpp"

namespace alexdual::verify {

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Bound for the exhaustive part of a suite.
  int max_n = 6;
  std::size_t max_facets = 4;
  int max_power = 3;
  // Random sample count; 0 keeps each suite's default.
  std::size_t samples = 0;
  // Extra instance supplied by the caller (thm-4.4 and others).
  std::optional<SimplicialComplex> complex;
  FieldChoice field = FieldChoice::rationals();
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t skipped = 0;
  // First failing instance (minimized), null when passed.
  nlohmann::json witness;
  std::string detail;
};

const std::vector<std::string>& suiteNames();
// Throws DomainError for an unknown suite; "all" runs every suite.
std::vector<CheckResult> runSuite(std::string_view name,
                                  const SuiteOptions& options);

// The ideal I(bar skel_Delta(ell)); zero when the pure complement is void.
MonomialIdeal barSkeletonIdeal(const SimplicialComplex& complex, int ell);

// Greedy deletion of facets / edges / generators while `fails` holds.
SimplicialComplex minimizeComplex(
    SimplicialComplex complex,
    const std::function<bool(const SimplicialComplex&)>& fails);
Graph minimizeGraph(Graph g, const std::function<bool(const Graph&)>& fails);
MonomialIdeal minimizeIdeal(
    MonomialIdeal ideal, const std::function<bool(const MonomialIdeal&)>& fails);

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
// fn must only touch per-index state.
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace alexdual::verify
