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
#include <utility>
#include <vector>

#include "alexdual/field.hpp"

namespace alexdual {

// One row of a sparse integer matrix: (column, value) pairs, sorted by
// column, no zero values.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Exact rank over the chosen field. Over the rationals this is a
// fraction-free row reduction on integers; it runs in checked 64-bit
// arithmetic and restarts in arbitrary precision on overflow.
std::size_t exactRank(std::vector<SparseRow> rows, const FieldChoice& field);

}  // namespace alexdual
