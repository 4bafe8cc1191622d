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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace alexdual {

// Bit (v - 1) set means vertex v is present.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

namespace bits {

constexpr Mask lowMask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
constexpr Mask vertexBit(int v) { return Mask{1} << (v - 1); }
constexpr int popcount(Mask m) { return std::popcount(m); }
// Smallest vertex (1-based) in a non-empty mask.
constexpr int lowestVertex(Mask m) { return std::countr_zero(m) + 1; }
constexpr int highestVertex(Mask m) { return 64 - std::countl_zero(m); }

// Cardinality first, then lexicographic on the sorted member lists.
constexpr bool canonicalLess(Mask a, Mask b) {
  const int sa = std::popcount(a);
  const int sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::vector<int> members(Mask m);

}  // namespace bits

// A subset of [n] = {1, ..., n}.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int ambient, Mask bits);

  // Rejects out-of-range and repeated members; order does not matter.
  static VertexSet fromMembers(int ambient, std::span<const int> members);
  static VertexSet full(int ambient) {
    return VertexSet(ambient, bits::lowMask(ambient));
  }

  int ambient() const noexcept { return ambient_; }
  Mask bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int v) const noexcept {
    return v >= 1 && v <= ambient_ && (bits_ & bits::vertexBit(v)) != 0;
  }
  bool isSubsetOf(const VertexSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  std::vector<int> members() const { return bits::members(bits_); }

  // [n] minus this set.
  VertexSet complement() const {
    return VertexSet(ambient_, bits::lowMask(ambient_) & ~bits_);
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int ambient_ = 0;
  Mask bits_ = 0;
};

std::string toString(const VertexSet& s);
std::string maskToString(Mask m);

}  // namespace alexdual
