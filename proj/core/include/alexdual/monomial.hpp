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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alexdual/vertex_set.hpp"

namespace alexdual {

// x^a for an exponent vector a over x_1, ..., x_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int num_vars);
  // x_i, 1-based.
  static Monomial variable(int num_vars, int i);
  // x_F = prod_{i in F} x_i.
  static Monomial fromMask(int num_vars, Mask support);
  static Monomial fromSet(const VertexSet& s) {
    return fromMask(s.ambient(), s.bits());
  }

  int numVars() const noexcept { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int exponent(int i) const { return exps_.at(i - 1); }
  int degree() const noexcept { return degree_; }
  bool isOne() const noexcept { return degree_ == 0; }
  bool isSquarefree() const noexcept;
  // Variables with positive exponent. Requires numVars() <= 64.
  Mask support() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  // Componentwise b <= a.
  bool boundedBy(std::span<const int> bound) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// a / b; throws DomainError unless b divides a.
Monomial quotient(const Monomial& a, const Monomial& b);

// Degree first, then lexicographic on exponent vectors.
bool canonicalLess(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// "x1^2*x3", or "1" for the unit monomial.
std::string toString(const Monomial& m);
// Accepts "x4*x5*x6", "x1^2*x3", "1"; whitespace ignored.
Monomial parseMonomial(std::string_view text, int num_vars);

}  // namespace alexdual
