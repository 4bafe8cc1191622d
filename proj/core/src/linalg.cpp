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

#include "alexdual/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "alexdual/errors.hpp"

namespace alexdual {

namespace {

bool isPrime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

struct Overflow {};

// Checked 64-bit integer; throws Overflow instead of wrapping.
struct Checked {
  std::int64_t v = 0;

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  bool isZero() const { return v == 0; }
  bool isNegative() const { return v < 0; }
  Checked negated() const {
    if (v == INT64_MIN) throw Overflow{};
    return {-v};
  }
  friend Checked gcdOf(Checked a, Checked b) { return {std::gcd(a.v, b.v)}; }
};

struct Big {
  boost::multiprecision::cpp_int v;

  friend Big operator*(const Big& a, const Big& b) { return {a.v * b.v}; }
  friend Big operator-(const Big& a, const Big& b) { return {a.v - b.v}; }
  friend Big operator/(const Big& a, const Big& b) { return {a.v / b.v}; }
  friend bool operator==(const Big& a, const Big& b) { return a.v == b.v; }
  bool isZero() const { return v.is_zero(); }
  bool isNegative() const { return v.sign() < 0; }
  Big negated() const { return {-v}; }
  friend Big gcdOf(const Big& a, const Big& b) {
    return {boost::multiprecision::gcd(a.v, b.v)};
  }
};

template <typename Int>
using Row = std::vector<std::pair<std::uint32_t, Int>>;

// Divides out the content and makes the leading entry positive.
template <typename Int>
void normalize(Row<Int>& row) {
  Int g = row.front().second;
  if (g.isNegative()) g = g.negated();
  for (std::size_t i = 1; i < row.size(); ++i) {
    Int x = row[i].second;
    if (x.isNegative()) x = x.negated();
    g = gcdOf(g, x);
    if (g == Int{1}) break;
  }
  const bool flip = row.front().second.isNegative();
  if (!(g == Int{1})) {
    for (auto& [c, x] : row) x = x / g;
  }
  if (flip) {
    for (auto& [c, x] : row) x = x.negated();
  }
}

// row <- a * row - b * pivot, where a, b are the leading coefficients.
template <typename Int>
Row<Int> eliminate(const Row<Int>& row, const Row<Int>& pivot) {
  const Int a = pivot.front().second;
  const Int b = row.front().second;
  Row<Int> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1;
  std::size_t j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, Int{} - b * pivot[j].second);
      ++j;
    } else {
      Int x = a * row[i].second - b * pivot[j].second;
      if (!x.isZero()) out.emplace_back(row[i].first, x);
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Int>
std::size_t integerRank(const std::vector<SparseRow>& rows) {
  std::uint32_t cols = 0;
  for (const auto& r : rows) {
    if (!r.empty()) cols = std::max(cols, r.back().first + 1);
  }
  std::vector<Row<Int>> pivots;
  std::vector<int> pivot_of(cols, -1);
  for (const SparseRow& input : rows) {
    Row<Int> row;
    row.reserve(input.size());
    for (const auto& [c, x] : input) row.emplace_back(c, Int{x});
    while (!row.empty()) {
      const int p = pivot_of[row.front().first];
      if (p < 0) {
        normalize(row);
        pivot_of[row.front().first] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      row = eliminate(row, pivots[p]);
      if (!row.empty()) normalize(row);
    }
  }
  return pivots.size();
}

std::size_t primeRank(const std::vector<SparseRow>& rows, std::uint32_t p) {
  const std::int64_t mod = p;
  auto reduce = [mod](std::int64_t x) {
    x %= mod;
    return x < 0 ? x + mod : x;
  };
  auto inverse = [mod](std::int64_t a) {
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = mod - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
    }
    return result;
  };
  std::uint32_t cols = 0;
  for (const auto& r : rows) {
    if (!r.empty()) cols = std::max(cols, r.back().first + 1);
  }
  std::vector<SparseRow> pivots;
  std::vector<int> pivot_of(cols, -1);
  for (const SparseRow& input : rows) {
    SparseRow row;
    for (const auto& [c, x] : input) {
      const std::int64_t y = reduce(x);
      if (y != 0) row.emplace_back(c, y);
    }
    while (!row.empty()) {
      const int pi = pivot_of[row.front().first];
      if (pi < 0) {
        const std::int64_t inv = inverse(row.front().second);
        for (auto& [c, x] : row) x = x * inv % mod;
        pivot_of[row.front().first] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      // Pivot rows are monic.
      const SparseRow& pivot = pivots[pi];
      const std::int64_t b = row.front().second;
      SparseRow out;
      std::size_t i = 1;
      std::size_t j = 1;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() ||
            (i < row.size() && row[i].first < pivot[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          out.emplace_back(pivot[j].first, reduce(-b * pivot[j].second));
          ++j;
        } else {
          const std::int64_t x = reduce(row[i].second - b * pivot[j].second);
          if (x != 0) out.emplace_back(row[i].first, x);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

FieldChoice FieldChoice::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !isPrime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) +
                      " is not a prime below 2^31");
  }
  return FieldChoice(Kind::kPrime, p);
}

FieldChoice FieldChoice::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
    std::uint32_t p = 0;
    const auto rest = text.substr(2);
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc{} && ptr == rest.data() + rest.size()) return prime(p);
  }
  throw DomainError("unknown field \"" + std::string(text) +
                    "\" (expected q, gf2 or gf<p>)");
}

std::string FieldChoice::name() const {
  return kind_ == Kind::kRationals ? "q" : "gf" + std::to_string(p_);
}

std::size_t exactRank(std::vector<SparseRow> rows, const FieldChoice& field) {
  if (field.kind() == FieldChoice::Kind::kPrime) {
    return primeRank(rows, field.characteristic());
  }
  try {
    return integerRank<Checked>(rows);
  } catch (const Overflow&) {
    return integerRank<Big>(rows);
  }
}

}  // namespace alexdual
