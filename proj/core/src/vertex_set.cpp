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

#include "alexdual/vertex_set.hpp"

#include "alexdual/errors.hpp"

namespace alexdual {

namespace bits {

std::vector<int> members(Mask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  while (m != 0) {
    out.push_back(lowestVertex(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace bits

VertexSet::VertexSet(int ambient, Mask bits) : ambient_(ambient), bits_(bits) {
  if (ambient < 0 || ambient > kMaxVertices) {
    throw DomainError("ambient size " + std::to_string(ambient) +
                      " outside [0, 64]");
  }
  if ((bits & ~bits::lowMask(ambient)) != 0) {
    throw DomainError("vertex " + std::to_string(bits::highestVertex(bits)) +
                      " outside [1, " + std::to_string(ambient) + "]");
  }
}

VertexSet VertexSet::fromMembers(int ambient, std::span<const int> members) {
  Mask m = 0;
  for (int v : members) {
    if (v < 1 || v > ambient) {
      throw DomainError("vertex " + std::to_string(v) + " outside [1, " +
                        std::to_string(ambient) + "]");
    }
    if ((m & bits::vertexBit(v)) != 0) {
      throw DomainError("vertex " + std::to_string(v) + " repeated");
    }
    m |= bits::vertexBit(v);
  }
  return VertexSet(ambient, m);
}

std::string maskToString(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int v : bits::members(m)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string toString(const VertexSet& s) { return maskToString(s.bits()); }

}  // namespace alexdual
