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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {
namespace {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
long eliminate(std::vector<std::vector<T>> m, const std::function<T(const T&)>& inverse,
               const std::function<T(const T&)>& reduce) {
  long rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const T inv = inverse(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const T factor = reduce(m[r][c] * inv);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = reduce(m[r][k] - factor * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

long long power(long long base, long long exp, long long mod) {
  long long out = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

bool isSubset(Mask a, Mask b) { return (a & ~b) == 0; }

// Facets of the complex {F cap G : G earlier}, restricted to maximal ones.
std::vector<Mask> maximal(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : sets) dominated = dominated || (s != t && isSubset(s, t));
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Search over subsets: ok(prefix, next) decides whether `next` may follow
// the facets in `prefix`.
bool someOrder(std::size_t t, const std::function<bool(std::uint32_t, std::size_t)>& ok) {
  if (t > 20) throw std::invalid_argument("oracle order search limited to 20 items");
  std::vector<char> reachable(std::size_t{1} << t, 0);
  reachable[0] = 1;
  for (std::uint32_t s = 0; s < reachable.size(); ++s) {
    if (!reachable[s]) continue;
    for (std::size_t k = 0; k < t; ++k) {
      if (s >> k & 1U) continue;
      if (ok(s, k)) reachable[s | (1U << k)] = 1;
    }
  }
  return reachable.back() != 0;
}

}  // namespace

long matrixRank(const std::vector<std::vector<int>>& rows, unsigned prime) {
  if (prime == 0) {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return eliminate<Rational>(
        m, [](const Rational& x) { return Rational(1) / x; },
        [](const Rational& x) { return x; });
  }
  const long long p = prime;
  std::vector<std::vector<long long>> m;
  for (const auto& r : rows) {
    std::vector<long long> row;
    for (int x : r) row.push_back(((x % p) + p) % p);
    m.push_back(std::move(row));
  }
  return eliminate<long long>(
      m, [p](const long long& x) { return power(x, p - 2, p); },
      [p](const long long& x) { return ((x % p) + p) % p; });
}

std::vector<long> reducedHomology(const std::vector<Mask>& faces, unsigned prime) {
  int top = 0;
  for (Mask f : faces) top = std::max(top, std::popcount(f));
  std::vector<std::vector<Mask>> by_size(top + 2);
  for (Mask f : faces) by_size[std::popcount(f)].push_back(f);
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  // rank of the boundary map from size-k faces to size-(k-1) faces
  std::vector<long> boundary_rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& lower = by_size[k - 1];
    std::vector<std::vector<int>> rows;
    for (Mask f : by_size[k]) {
      std::vector<int> row(lower.size(), 0);
      int sign = 1;
      for (Mask rest = f; rest != 0; rest &= rest - 1) {
        const Mask bit = rest & -rest;
        const auto it = std::lower_bound(lower.begin(), lower.end(), f & ~bit);
        row[it - lower.begin()] = sign;
        sign = -sign;
      }
      rows.push_back(std::move(row));
    }
    boundary_rank[k] = matrixRank(rows, prime);
  }
  std::vector<long> out(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    out[k] = static_cast<long>(by_size[k].size()) - boundary_rank[k] - boundary_rank[k + 1];
  }
  return out;
}

BettiMap taylorBetti(const std::vector<Exponents>& gens, unsigned prime) {
  const std::size_t t = gens.size();
  if (t == 0) return {};
  if (t > 16) throw std::invalid_argument("Taylor oracle limited to 16 generators");
  const std::size_t n = gens[0].size();
  std::vector<Exponents> lcms(std::size_t{1} << t, Exponents(n, 0));
  for (std::uint32_t s = 1; s < lcms.size(); ++s) {
    const int low = std::countr_zero(s);
    lcms[s] = lcm(lcms[s & (s - 1)], gens[low]);
  }
  std::set<Exponents> lattice(lcms.begin() + 1, lcms.end());
  BettiMap out;
  for (const Exponents& b : lattice) {
    std::vector<Mask> faces;
    for (std::uint32_t s = 0; s < lcms.size(); ++s) {
      if (divides(lcms[s], b) && lcms[s] != b) faces.push_back(s);
    }
    const std::vector<long> h = reducedHomology(faces, prime);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != 0) out[{static_cast<int>(i), b}] = h[i];
    }
  }
  return out;
}

std::vector<Mask> allFaces(const std::vector<Mask>& facets) {
  std::set<Mask> faces;
  for (Mask f : facets) {
    for (Mask s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  return {faces.begin(), faces.end()};
}

std::vector<Mask> minimalNonfaces(int n, const std::vector<Mask>& facets) {
  auto is_face = [&](Mask s) {
    return std::any_of(facets.begin(), facets.end(), [s](Mask f) { return isSubset(s, f); });
  };
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      minimal = minimal && is_face(s & ~(rest & -rest));
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<Mask> dualFacets(int n, const std::vector<Mask>& facets) {
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Mask> faces;
  for (Mask s = 0; s <= all; ++s) {
    const bool face = std::any_of(facets.begin(), facets.end(),
                                  [s](Mask f) { return isSubset(s, f); });
    if (!face) faces.push_back(all & ~s);
  }
  return maximal(std::move(faces));
}

std::vector<Mask> skeletonFacets(const std::vector<Mask>& facets, int i) {
  std::vector<Mask> out;
  for (Mask s : allFaces(facets)) {
    if (std::popcount(s) == i + 1) out.push_back(s);
  }
  return out;
}

bool hasLeafOrder(const std::vector<Mask>& facets) {
  const std::size_t t = facets.size();
  // Facet k joins the prefix as a leaf: some earlier facet contains every
  // intersection of facet k with the earlier ones.
  return someOrder(t, [&](std::uint32_t prefix, std::size_t k) {
    if (prefix == 0) return true;
    for (std::size_t g = 0; g < t; ++g) {
      if (!(prefix >> g & 1U)) continue;
      bool branch = true;
      for (std::size_t h = 0; h < t && branch; ++h) {
        if (prefix >> h & 1U) {
          branch = isSubset(facets[k] & facets[h], facets[k] & facets[g]);
        }
      }
      if (branch) return true;
    }
    return false;
  });
}

bool isShellable(const std::vector<Mask>& facets) {
  const std::size_t t = facets.size();
  return someOrder(t, [&](std::uint32_t prefix, std::size_t k) {
    if (prefix == 0) return true;
    std::vector<Mask> meets;
    for (std::size_t j = 0; j < t; ++j) {
      if (prefix >> j & 1U) meets.push_back(facets[k] & facets[j]);
    }
    const int want = std::popcount(facets[k]) - 1;
    for (Mask m : maximal(meets)) {
      if (std::popcount(m) != want) return false;
    }
    return true;
  });
}

bool hasLinearQuotients(const std::vector<Exponents>& gens) {
  const std::size_t t = gens.size();
  return someOrder(t, [&](std::uint32_t prefix, std::size_t k) {
    std::vector<Exponents> colon;
    for (std::size_t j = 0; j < t; ++j) {
      if (!(prefix >> j & 1U)) continue;
      Exponents q(gens[k].size());
      for (std::size_t v = 0; v < q.size(); ++v) {
        q[v] = std::max(0, gens[j][v] - gens[k][v]);
      }
      colon.push_back(std::move(q));
    }
    for (const Exponents& q : minimalize(colon)) {
      int degree = 0;
      for (int e : q) degree += e;
      if (degree != 1) return false;
    }
    return true;
  });
}

bool isCohenMacaulay(int n, const std::vector<Mask>& facets, unsigned prime) {
  (void)n;
  const std::vector<Mask> faces = allFaces(facets);
  for (Mask sigma : faces) {
    std::vector<Mask> link;
    for (Mask f : faces) {
      if ((f & sigma) == 0 && std::binary_search(faces.begin(), faces.end(), f | sigma)) {
        link.push_back(f);
      }
    }
    int top = 0;
    for (Mask f : link) top = std::max(top, std::popcount(f));
    const std::vector<long> h = reducedHomology(link, prime);
    // H~_i must vanish for i < dim(link) = top - 1, i.e. entries k < top.
    for (int k = 0; k < top && k < static_cast<int>(h.size()); ++k) {
      if (h[k] != 0) return false;
    }
  }
  return true;
}

bool isChordal(const std::vector<Mask>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) < 4) continue;
    bool all_two = true;
    for (Mask rest = s; rest != 0 && all_two; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      all_two = std::popcount(adjacency[v] & s) == 2;
    }
    if (!all_two) continue;
    // 2-regular: a single cycle exactly when connected.
    Mask seen = s & -s;
    for (bool grew = true; grew;) {
      grew = false;
      for (Mask rest = seen; rest != 0; rest &= rest - 1) {
        const Mask next = seen | (adjacency[std::countr_zero(rest)] & s);
        if (next != seen) {
          seen = next;
          grew = true;
        }
      }
    }
    if (seen == s) return false;
  }
  return true;
}

std::vector<Mask> maximalCliques(const std::vector<Mask>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<Mask> cliques;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    bool clique = true;
    for (Mask rest = s; rest != 0 && clique; rest &= rest - 1) {
      const Mask bit = rest & -rest;
      clique = isSubset(s & ~bit, adjacency[std::countr_zero(rest)]);
    }
    if (clique) cliques.push_back(s);
  }
  return maximal(std::move(cliques));
}

std::set<std::vector<Mask>> quasiTreeSkeletons(int n, int ell) {
  if (n > 5) throw std::invalid_argument("skeleton oracle limited to n <= 5");
  const Mask count = Mask{1} << n;
  std::set<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  // Antichains of subsets of [n], chosen in increasing order.
  std::function<void(Mask)> grow = [&](Mask from) {
    if (!chosen.empty() && hasLeafOrder(chosen)) {
      std::vector<Mask> skel = skeletonFacets(chosen, ell);
      if (!skel.empty()) out.insert(skel);
    }
    for (Mask s = from; s < count; ++s) {
      const bool free = std::none_of(chosen.begin(), chosen.end(), [s](Mask c) {
        return isSubset(s, c) || isSubset(c, s);
      });
      if (!free) continue;
      chosen.push_back(s);
      grow(s + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

std::vector<Exponents> minimalize(std::vector<Exponents> monomials) {
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Exponents> out;
  for (const Exponents& m : monomials) {
    bool redundant = false;
    for (const Exponents& other : monomials) {
      redundant = redundant || (other != m && divides(other, m));
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace oracle
