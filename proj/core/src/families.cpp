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

#include "alexdual/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "alexdual/errors.hpp"

namespace alexdual::families {
namespace {

void requireDownsetSize(int n) {
  if (n < 0 || n > kMaxDownsetVertices) {
    throw DomainError("downset enumeration needs 0 <= n <= 6, got " +
                      std::to_string(n));
  }
}

// Moves the faces of a downset when vertices i < j are swapped: a single
// delta swap on the 2^n-bit word.
struct Transposition {
  FaceSet low = 0;  // face positions containing i but not j
  int shift = 0;

  FaceSet apply(FaceSet x) const {
    const FaceSet t = ((x >> shift) ^ x) & low;
    return x ^ t ^ (t << shift);
  }
};

Transposition transposition(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  Transposition t;
  t.shift = (1 << j) - (1 << i);
  for (int s = 0; s < (1 << n); ++s) {
    if ((s >> i & 1) && !(s >> j & 1)) t.low |= FaceSet{1} << s;
  }
  return t;
}

// Calls fn(image) for the image of `faces` under every permutation in
// S_n (Heap's order, identity first); stops early when fn returns false.
template <typename Fn>
void forEachImage(int n, FaceSet faces, Fn fn) {
  using Table = std::array<std::array<Transposition, 8>, 8>;
  static const std::array<Table, kMaxDownsetVertices + 1> tables = [] {
    std::array<Table, kMaxDownsetVertices + 1> out{};
    for (int m = 0; m <= kMaxDownsetVertices; ++m) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i != j) out[m][i][j] = transposition(m, i, j);
        }
      }
    }
    return out;
  }();
  const Table& table = tables[n];
  if (!fn(faces)) return;
  std::array<int, 8> c{};
  std::array<int, 8> a{};
  std::iota(a.begin(), a.end(), 0);
  int i = 0;
  while (i < n) {
    if (c[i] < i) {
      const int p = i % 2 == 0 ? 0 : c[i];
      faces = table[a[p]][a[i]].apply(faces);
      std::swap(a[p], a[i]);
      if (!fn(faces)) return;
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

template <typename T>
T pick(Rng& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Mask randomSubsetOfSize(Rng& rng, int n, int d) {
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 1);
  std::shuffle(verts.begin(), verts.end(), rng);
  Mask m = 0;
  for (int k = 0; k < d; ++k) m |= bits::vertexBit(verts[k]);
  return m;
}

}  // namespace

void forEachDownset(int n, const std::function<void(FaceSet)>& fn) {
  requireDownsetSize(n);
  if (n == 0) {
    fn(0);
    fn(1);
    return;
  }
  // A downset of B_n is a pair (A, B) of downsets of B_{n-1}, B inside A:
  // the faces avoiding vertex n and the links of n.
  const std::vector<FaceSet> smaller = downsets(n - 1);
  const int half = 1 << (n - 1);
  for (FaceSet a : smaller) {
    for (FaceSet b : smaller) {
      if ((b & ~a) == 0) fn(a | (b << half));
    }
  }
}

std::vector<FaceSet> downsets(int n) {
  std::vector<FaceSet> out;
  forEachDownset(n, [&out](FaceSet d) { out.push_back(d); });
  return out;
}

SimplicialComplex complexFromFaceSet(int n, FaceSet faces) {
  requireDownsetSize(n);
  std::vector<Mask> facets;
  for (FaceSet rest = faces; rest != 0; rest &= rest - 1) {
    const int s = std::countr_zero(rest);
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(s >> v & 1) && (faces >> (s | 1 << v) & 1)) maximal = false;
    }
    if (maximal) facets.push_back(static_cast<Mask>(s));
  }
  return SimplicialComplex::minimalized(n, std::move(facets));
}

FaceSet faceSetOf(const SimplicialComplex& complex) {
  requireDownsetSize(complex.ambient());
  FaceSet out = 0;
  for (Mask f : complex.facetMasks()) {
    for (Mask s = f;; s = (s - 1) & f) {
      out |= FaceSet{1} << s;
      if (s == 0) break;
    }
  }
  return out;
}

FaceSet permuteFaceSet(int n, FaceSet faces, const std::vector<int>& perm) {
  requireDownsetSize(n);
  FaceSet out = 0;
  for (FaceSet rest = faces; rest != 0; rest &= rest - 1) {
    const int s = std::countr_zero(rest);
    int image = 0;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) image |= 1 << perm[v];
    }
    out |= FaceSet{1} << image;
  }
  return out;
}

bool isCanonicalFaceSet(int n, FaceSet faces) {
  requireDownsetSize(n);
  bool canonical = true;
  forEachImage(n, faces, [&](FaceSet image) {
    if (image < faces) canonical = false;
    return canonical;
  });
  return canonical;
}

std::size_t stabilizerSize(int n, FaceSet faces) {
  requireDownsetSize(n);
  std::size_t count = 0;
  forEachImage(n, faces, [&](FaceSet image) {
    count += image == faces ? 1 : 0;
    return true;
  });
  return count;
}

std::vector<FaceSet> downsetClassRepresentatives(int n) {
  std::vector<FaceSet> out;
  forEachDownset(n, [&](FaceSet d) {
    if (isCanonicalFaceSet(n, d)) out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplicialComplex> smallComplexes(int n, int max_size,
                                              std::size_t min_facets,
                                              std::size_t max_facets) {
  if (n < 1 || n > 16) throw DomainError("smallComplexes needs 1 <= n <= 16");
  std::vector<Mask> pool;
  for (Mask s = 1; s <= bits::lowMask(n); ++s) {
    if (bits::popcount(s) <= max_size) pool.push_back(s);
  }
  std::vector<SimplicialComplex> out;
  std::vector<Mask> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() >= min_facets) {
      Mask used = 0;
      for (Mask f : chosen) used |= f;
      if (used == bits::lowMask(n)) {
        out.push_back(SimplicialComplex::fromMasks(n, chosen));
      }
    }
    if (chosen.size() == max_facets) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      const Mask f = pool[k];
      if (std::any_of(chosen.begin(), chosen.end(), [f](Mask g) {
            return (f & ~g) == 0 || (g & ~f) == 0;
          })) {
        continue;
      }
      chosen.push_back(f);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void forEachGraph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 7) throw DomainError("graph enumeration needs n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  std::vector<Mask> adj(n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (code >> k & 1U) {
        auto [u, v] = slots[k];
        adj[u - 1] |= bits::vertexBit(v);
        adj[v - 1] |= bits::vertexBit(u);
      }
    }
    fn(Graph::fromAdjacency(adj));
  }
}

void forEachChordalGraph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 7) throw DomainError("chordal enumeration needs n <= 7");
  using Adj = std::array<Mask, 8>;
  auto isCliqueIn = [](const Adj& adj, Mask c) {
    for (int w : bits::members(c)) {
      if ((c & ~adj[w - 1]) != bits::vertexBit(w)) return false;
    }
    return true;
  };
  // Every chordal graph has a simplicial vertex; insisting that the new
  // vertex is the largest simplicial one generates each graph once.
  std::vector<Adj> layer{Adj{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<Adj> next;
    for (const Adj& h : layer) {
      for (int v = 1; v <= k; ++v) {
        auto lift = [v](Mask m) {
          return (m & bits::lowMask(v - 1)) | ((m >> (v - 1)) << v);
        };
        Adj base{};
        for (int u = 1; u < k; ++u) base[(u < v ? u : u + 1) - 1] = lift(h[u - 1]);
        const Mask others = lift(bits::lowMask(k - 1));
        for (Mask c = others;; c = (c - 1) & others) {
          if (isCliqueIn(base, c)) {
            Adj g = base;
            g[v - 1] = c;
            for (int w : bits::members(c)) g[w - 1] |= bits::vertexBit(v);
            bool canonical = true;
            for (int w = v + 1; w <= k && canonical; ++w) {
              canonical = !isCliqueIn(g, g[w - 1]);
            }
            if (canonical) next.push_back(g);
          }
          if (c == 0) break;
        }
      }
    }
    layer = std::move(next);
  }
  for (const Adj& g : layer) {
    fn(Graph::fromAdjacency(std::vector<Mask>(g.begin(), g.begin() + n)));
  }
}

std::vector<int> randomPermutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::vector<int>& perm) {
  std::vector<Mask> facets;
  for (Mask f : complex.facetMasks()) {
    Mask image = 0;
    for (int v : bits::members(f)) image |= bits::vertexBit(perm[v - 1] + 1);
    facets.push_back(image);
  }
  return SimplicialComplex::fromMasks(complex.ambient(), std::move(facets));
}

SimplicialComplex randomComplex(Rng& rng, int n, std::size_t max_facets,
                                double p) {
  std::bernoulli_distribution keep(p);
  const auto t = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_facets)));
  std::vector<Mask> faces;
  for (std::size_t k = 0; k < t; ++k) {
    Mask f = 0;
    for (int v = 1; v <= n; ++v) {
      if (keep(rng)) f |= bits::vertexBit(v);
    }
    faces.push_back(f);
  }
  return SimplicialComplex::minimalized(n, std::move(faces));
}

SimplicialComplex randomPureComplex(Rng& rng, int n, int d, std::size_t t,
                                    bool grow) {
  if (d < 1 || d > n) throw DomainError("facet size must lie in [1, n]");
  std::set<Mask> facets;
  std::vector<Mask> order;
  std::size_t attempts = 0;
  while (facets.size() < t && attempts++ < 50 * t) {
    Mask f = 0;
    if (grow && !order.empty() && d < n) {
      const Mask g = pick(rng, order);
      const std::vector<int> inside = bits::members(g);
      const std::vector<int> outside = bits::members(bits::lowMask(n) & ~g);
      f = (g & ~bits::vertexBit(pick(rng, inside))) |
          bits::vertexBit(pick(rng, outside));
    } else {
      f = randomSubsetOfSize(rng, n, d);
    }
    if (facets.insert(f).second) order.push_back(f);
  }
  return SimplicialComplex::fromMasks(n, std::move(order));
}

SimplicialComplex randomQuasiTree(Rng& rng, int n, std::size_t max_facets,
                                  int max_facet_size) {
  if (n < 1) throw DomainError("need at least one vertex");
  max_facet_size = std::max(1, std::min(max_facet_size, n));
  const auto target =
      static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_facets)));
  int used = uniform(rng, 1, max_facet_size);
  std::vector<Mask> facets{bits::lowMask(used)};
  while (facets.size() < target && used < n) {
    const Mask g = pick(rng, facets);
    std::vector<int> members = bits::members(g);
    std::shuffle(members.begin(), members.end(), rng);
    // A proper subset of g, leaving room for at least one fresh vertex.
    int keep = uniform(rng, 0, static_cast<int>(members.size()) - 1);
    keep = std::min(keep, max_facet_size - 1);
    Mask f = 0;
    for (int k = 0; k < keep; ++k) f |= bits::vertexBit(members[k]);
    const int fresh = uniform(rng, 1, std::min(max_facet_size - keep, n - used));
    for (int k = 0; k < fresh; ++k) f |= bits::vertexBit(++used);
    facets.push_back(f);
  }
  return relabel(SimplicialComplex::fromMasks(n, std::move(facets)),
                 randomPermutation(rng, n));
}

Graph randomGraph(Rng& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph randomChordalGraph(Rng& rng, int n) {
  std::vector<Mask> adj(n, 0);
  std::bernoulli_distribution take(0.6);
  std::bernoulli_distribution isolate(0.1);
  for (int v = 2; v <= n; ++v) {
    if (isolate(rng)) continue;
    const int u = uniform(rng, 1, v - 1);
    Mask clique = bits::vertexBit(u);
    std::vector<int> candidates = bits::members(adj[u - 1]);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (int w : candidates) {
      if ((clique & ~adj[w - 1]) == 0 && take(rng)) clique |= bits::vertexBit(w);
    }
    adj[v - 1] = clique;
    for (int w : bits::members(clique)) adj[w - 1] |= bits::vertexBit(v);
  }
  const std::vector<int> perm = randomPermutation(rng, n);
  std::vector<Mask> out(n, 0);
  for (int v = 1; v <= n; ++v) {
    for (int w : bits::members(adj[v - 1])) {
      out[perm[v - 1]] |= bits::vertexBit(perm[w - 1] + 1);
    }
  }
  return Graph::fromAdjacency(std::move(out));
}

SimplicialComplex randomFlagComplex(Rng& rng, int n, double p) {
  return cliqueComplex(randomGraph(rng, n, p));
}

MonomialIdeal randomLinearQuotientIdeal(Rng& rng, int n, int degree,
                                        std::size_t max_gens, int max_exp) {
  if (degree < 1 || degree > n * max_exp) {
    throw DomainError("degree out of range for the exponent cap");
  }
  std::vector<int> first(n, 0);
  for (int placed = 0; placed < degree;) {
    const int v = uniform(rng, 0, n - 1);
    if (first[v] < max_exp) {
      ++first[v];
      ++placed;
    }
  }
  std::vector<Monomial> gens{Monomial(first)};
  const auto target = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_gens)));
  for (std::size_t attempt = 0; gens.size() < target && attempt < 40 * max_gens;
       ++attempt) {
    std::vector<int> e = pick(rng, gens).exponents();
    const int a = uniform(rng, 0, n - 1);
    const int b = uniform(rng, 0, n - 1);
    if (a == b || e[a] == 0 || e[b] == max_exp) continue;
    --e[a];
    ++e[b];
    const Monomial u(std::move(e));
    if (std::find(gens.begin(), gens.end(), u) != gens.end()) continue;
    std::vector<Monomial> colon;
    for (const Monomial& g : gens) colon.push_back(quotient(g, gcd(g, u)));
    if (minimalize(colon).maxDegree() == 1) gens.push_back(u);
  }
  return MonomialIdeal::generatedBy(n, std::move(gens));
}

MonomialIdeal randomIdeal(Rng& rng, int n, std::size_t gens, int max_exp,
                          int max_degree) {
  std::vector<Monomial> out;
  while (out.size() < gens) {
    std::vector<int> e(n, 0);
    const int d = uniform(rng, 1, std::min(max_degree, n * max_exp));
    for (int placed = 0; placed < d;) {
      const int v = uniform(rng, 0, n - 1);
      if (e[v] < max_exp) {
        ++e[v];
        ++placed;
      }
    }
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal::generatedBy(n, std::move(out));
}

}  // namespace alexdual::families
