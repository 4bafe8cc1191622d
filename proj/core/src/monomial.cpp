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

#include "alexdual/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "alexdual/errors.hpp"

namespace alexdual {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::one(int num_vars) {
  if (num_vars < 0) throw DomainError("negative variable count");
  return Monomial(std::vector<int>(num_vars, 0));
}

Monomial Monomial::variable(int num_vars, int i) {
  if (i < 1 || i > num_vars) {
    throw DomainError("variable x" + std::to_string(i) + " outside x1..x" +
                      std::to_string(num_vars));
  }
  std::vector<int> e(num_vars, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::fromMask(int num_vars, Mask support) {
  if (num_vars > kMaxVertices || (support & ~bits::lowMask(num_vars)) != 0) {
    throw DomainError("support outside x1..x" + std::to_string(num_vars));
  }
  std::vector<int> e(num_vars, 0);
  for (int v : bits::members(support)) e[v - 1] = 1;
  return Monomial(std::move(e));
}

bool Monomial::isSquarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

Mask Monomial::support() const noexcept {
  Mask m = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i) {
    if (exps_[i] > 0) m |= Mask{1} << i;
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::boundedBy(std::span<const int> bound) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > bound[i]) return false;
  }
  return true;
}

namespace {

void requireSameRing(const Monomial& a, const Monomial& b) {
  if (a.numVars() != b.numVars()) {
    throw DomainError("monomials live in rings with " +
                      std::to_string(a.numVars()) + " and " +
                      std::to_string(b.numVars()) + " variables");
  }
}

template <typename Op>
Monomial zipWith(const Monomial& a, const Monomial& b, Op op) {
  requireSameRing(a, b);
  std::vector<int> e(a.numVars());
  for (int i = 0; i < a.numVars(); ++i) {
    e[i] = op(a.exponents()[i], b.exponents()[i]);
  }
  return Monomial(std::move(e));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return zipWith(a, b, std::plus<>{});
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return zipWith(a, b, [](int x, int y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return zipWith(a, b, [](int x, int y) { return std::min(x, y); });
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) {
    throw DomainError(toString(b) + " does not divide " + toString(a));
  }
  return zipWith(a, b, std::minus<>{});
}

bool canonicalLess(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() < b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::string toString(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.numVars(); ++i) {
    const int e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Monomial parseMonomial(std::string_view text, int num_vars) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  std::vector<int> e(num_vars, 0);
  if (s == "1") return Monomial(std::move(e));
  if (s.empty()) throw DomainError("empty monomial");
  std::size_t pos = 0;
  auto readInt = [&](const char* what) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data() + pos) {
      throw DomainError("expected " + std::string(what) + " at offset " +
                        std::to_string(pos) + " in \"" + s + "\"");
    }
    pos = static_cast<std::size_t>(ptr - s.data());
    return value;
  };
  while (true) {
    if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) {
      throw DomainError("expected 'x' at offset " + std::to_string(pos) +
                        " in \"" + s + "\"");
    }
    ++pos;
    const int var = readInt("variable index");
    if (var < 1 || var > num_vars) {
      throw DomainError("variable x" + std::to_string(var) + " outside x1..x" +
                        std::to_string(num_vars));
    }
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      power = readInt("exponent");
      if (power < 0) throw DomainError("negative exponent");
    }
    e[var - 1] += power;
    if (pos == s.size()) break;
    if (s[pos] != '*') {
      throw DomainError("expected '*' at offset " + std::to_string(pos) +
                        " in \"" + s + "\"");
    }
    ++pos;
  }
  return Monomial(std::move(e));
}

}  // namespace alexdual
