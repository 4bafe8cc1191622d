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
#include <string>
#include <string_view>

namespace alexdual {

// Coefficient field for homology and Betti computations.
class FieldChoice {
 public:
  enum class Kind { kRationals, kPrime };

  static FieldChoice rationals() { return FieldChoice(Kind::kRationals, 0); }
  // Throws DomainError unless p is prime and below 2^31.
  static FieldChoice prime(std::uint32_t p);
  // "q", "gf2", "gf<p>".
  static FieldChoice parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;

 private:
  FieldChoice(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace alexdual
