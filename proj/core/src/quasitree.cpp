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

#include "alexdual/quasitree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "alexdual/errors.hpp"

namespace alexdual {
namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Branches of facet f inside the subcomplex spanned by the facets in
// `alive` (bit k = facet k). Returns nullopt if f is not a leaf there.
// A lone facet is a leaf with no branches.
std::optional<std::vector<std::size_t>> branchesWithin(
    std::span<const Mask> facets, std::uint64_t alive, std::size_t f) {
  Mask covered = 0;
  for (std::size_t h = 0; h < facets.size(); ++h) {
    if (h != f && (alive >> h & 1U)) covered |= facets[h] & facets[f];
  }
  std::vector<std::size_t> out;
  bool any_other = false;
  for (std::size_t g = 0; g < facets.size(); ++g) {
    if (g == f || !(alive >> g & 1U)) continue;
    any_other = true;
    if ((facets[g] & facets[f]) == covered) out.push_back(g);
  }
  if (any_other && out.empty()) return std::nullopt;
  return out;
}

void requireFacetCap(const SimplicialComplex& complex) {
  if (complex.numFacets() > 64) {
    throw ResourceError("quasi-tree routines limited to 64 facets");
  }
}

std::uint64_t allFacets(std::size_t t) {
  return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
}

std::pair<std::size_t, std::size_t> ordered(std::pair<std::size_t, std::size_t> e) {
  return e.first < e.second ? e : std::pair{e.second, e.first};
}

int permutationSign(std::vector<std::size_t> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  }
  return sign;
}

SignedMonomial rowEntry(const SimplicialComplex& complex, std::size_t row_i,
                        std::size_t row_j, std::size_t col) {
  const Mask fi = complex.facetMasks()[row_i];
  const Mask fj = complex.facetMasks()[row_j];
  const int n = complex.ambient();
  if (col == row_i) return {1, Monomial::fromMask(n, fi & ~fj)};
  return {-1, Monomial::fromMask(n, fj & ~fi)};
}

}  // namespace

LeafReport leafReport(const SimplicialComplex& complex, std::size_t f) {
  const std::size_t t = complex.numFacets();
  if (f >= t) {
    throw DomainError("facet index " + std::to_string(f + 1) +
                      " out of range");
  }
  const auto facets = complex.facetMasks();
  LeafReport report;
  Mask elsewhere = 0;
  Mask covered = 0;
  for (std::size_t h = 0; h < t; ++h) {
    if (h == f) continue;
    elsewhere |= facets[h];
    covered |= facets[h] & facets[f];
  }
  for (std::size_t g = 0; g < t; ++g) {
    if (g != f && (facets[g] & facets[f]) == covered) {
      report.branches.push_back(g);
    }
  }
  report.is_leaf = t == 1 || !report.branches.empty();
  report.free_vertices = VertexSet(complex.ambient(), facets[f] & ~elsewhere);
  return report;
}

std::optional<std::vector<std::size_t>> leafOrder(
    const SimplicialComplex& complex) {
  if (complex.isVoid()) throw DomainError("complex has no facets");
  requireFacetCap(complex);
  const auto facets = complex.facetMasks();
  const std::size_t t = facets.size();
  std::uint64_t alive = allFacets(t);
  std::vector<std::size_t> removed;
  while (std::popcount(alive) > 1) {
    bool found = false;
    for (std::size_t f = t; f-- > 0;) {
      if ((alive >> f & 1U) && branchesWithin(facets, alive, f)) {
        alive &= ~(std::uint64_t{1} << f);
        removed.push_back(f);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::vector<std::size_t> order{
      static_cast<std::size_t>(std::countr_zero(alive))};
  order.insert(order.end(), removed.rbegin(), removed.rend());
  return order;
}

bool isLeafOrder(const SimplicialComplex& complex,
                 std::span<const std::size_t> order) {
  const std::size_t t = complex.numFacets();
  if (t == 0 || t > 64 || order.size() != t) return false;
  std::vector<bool> seen(t, false);
  for (std::size_t f : order) {
    if (f >= t || seen[f]) return false;
    seen[f] = true;
  }
  std::uint64_t prefix = 0;
  for (std::size_t f : order) {
    prefix |= std::uint64_t{1} << f;
    if (!branchesWithin(complex.facetMasks(), prefix, f)) return false;
  }
  return true;
}

bool isQuasiTree(const SimplicialComplex& complex) {
  return leafOrder(complex).has_value();
}

MonomialMatrix buildMDelta(const SimplicialComplex& complex) {
  const std::size_t t = complex.numFacets();
  if (t < 2) throw DomainError("M_Delta needs at least two facets");
  MonomialMatrix m;
  m.num_cols = t;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      m.rows.push_back({i, j, rowEntry(complex, i, j, i),
                        rowEntry(complex, i, j, j)});
    }
  }
  return m;
}

std::vector<TaylorRelation> taylorRelations(std::span<const Monomial> gens) {
  if (gens.size() < 2) {
    throw DomainError("Taylor relations need at least two generators");
  }
  std::vector<TaylorRelation> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Monomial g = gcd(gens[i], gens[j]);
      out.push_back({i, j, quotient(gens[i], g), quotient(gens[j], g)});
    }
  }
  return out;
}

std::vector<TaylorRelation> taylorRelations(const MonomialIdeal& ideal) {
  return taylorRelations(ideal.generators());
}

std::vector<std::pair<std::size_t, std::size_t>> RelationTree::edgePairs()
    const {
  EdgeList out;
  for (const RelationEdge& e : edges) out.emplace_back(e.i, e.j);
  return out;
}

void requireSpanningTree(
    std::size_t t, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  if (t == 0) throw DomainError("tree needs at least one vertex");
  if (edges.size() + 1 != t) {
    throw DomainError("a tree on " + std::to_string(t) + " vertices needs " +
                      std::to_string(t - 1) + " edges, got " +
                      std::to_string(edges.size()));
  }
  std::vector<std::size_t> parent(t);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a >= t || b >= t || a == b) {
      throw DomainError("edge {" + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + "} is not valid");
    }
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra == rb) throw DomainError("edge set contains a cycle");
    parent[ra] = rb;
  }
}

RelationTree labelFromComplex(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges) {
  const std::size_t t = complex.numFacets();
  requireSpanningTree(t, edges);
  const auto facets = complex.facetMasks();
  const int n = complex.ambient();
  RelationTree tree{t, {}};
  for (auto e : edges) {
    auto [i, j] = ordered(e);
    tree.edges.push_back({i, j, Monomial::fromMask(n, facets[j] & ~facets[i]),
                          Monomial::fromMask(n, facets[i] & ~facets[j])});
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const RelationEdge& a, const RelationEdge& b) {
              return std::pair{a.i, a.j} < std::pair{b.i, b.j};
            });
  return tree;
}

RelationTree labelFromGenerators(
    std::span<const Monomial> gens,
    std::span<const std::pair<std::size_t, std::size_t>> edges) {
  requireSpanningTree(gens.size(), edges);
  RelationTree tree{gens.size(), {}};
  for (auto e : edges) {
    auto [i, j] = ordered(e);
    const Monomial g = gcd(gens[i], gens[j]);
    tree.edges.push_back({i, j, quotient(gens[i], g), quotient(gens[j], g)});
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const RelationEdge& a, const RelationEdge& b) {
              return std::pair{a.i, a.j} < std::pair{b.i, b.j};
            });
  return tree;
}

std::vector<SignedMonomial> minorDeterminants(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges) {
  const std::size_t t = complex.numFacets();
  requireSpanningTree(t, edges);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(t);
  for (std::size_t r = 0; r < edges.size(); ++r) {
    adj[edges[r].first].emplace_back(edges[r].second, r);
    adj[edges[r].second].emplace_back(edges[r].first, r);
  }
  std::vector<SignedMonomial> dets;
  for (std::size_t root = 0; root < t; ++root) {
    // Deleting column `root` leaves each tree row with a single pivot at
    // the endpoint farther from the root; peeling leaves inward, that
    // pivot is the only nonzero left in its column.
    std::vector<std::size_t> child_of_row(edges.size());
    std::vector<std::size_t> stack{root};
    std::vector<bool> seen(t, false);
    seen[root] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto [w, r] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        child_of_row[r] = w;
        stack.push_back(w);
      }
    }
    SignedMonomial det{1, Monomial::one(complex.ambient())};
    std::vector<std::size_t> perm(edges.size());
    for (std::size_t r = 0; r < edges.size(); ++r) {
      const std::size_t c = child_of_row[r];
      auto [i, j] = ordered(edges[r]);
      const SignedMonomial entry = rowEntry(complex, i, j, c);
      det.sign *= entry.sign;
      det.value = det.value * entry.value;
      perm[r] = c < root ? c : c - 1;
    }
    det.sign *= permutationSign(std::move(perm));
    dets.push_back(std::move(det));
  }
  return dets;
}

std::vector<std::optional<SignedMonomial>> minorDeterminantsByExpansion(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges) {
  const std::size_t t = complex.numFacets();
  if (t > 8) throw ResourceError("cofactor expansion limited to 8 facets");
  if (edges.size() + 1 != t) throw DomainError("need t - 1 rows");
  const std::size_t m = edges.size();
  std::vector<std::optional<SignedMonomial>> out;
  for (std::size_t root = 0; root < t; ++root) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < t; ++c) {
      if (c != root) cols.push_back(c);
    }
    std::vector<std::vector<std::optional<SignedMonomial>>> a(
        m, std::vector<std::optional<SignedMonomial>>(m));
    for (std::size_t r = 0; r < m; ++r) {
      auto [i, j] = ordered(edges[r]);
      for (std::size_t k = 0; k < m; ++k) {
        if (cols[k] == i || cols[k] == j) {
          a[r][k] = rowEntry(complex, i, j, cols[k]);
        }
      }
    }
    std::map<std::vector<int>, long> terms;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      SignedMonomial term{permutationSign(perm), Monomial::one(complex.ambient())};
      bool zero = false;
      for (std::size_t r = 0; r < m && !zero; ++r) {
        const auto& entry = a[r][perm[r]];
        if (!entry) {
          zero = true;
        } else {
          term.sign *= entry->sign;
          term.value = term.value * entry->value;
        }
      }
      if (!zero) terms[term.value.exponents()] += term.sign;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    if (terms.empty()) {
      out.emplace_back(std::nullopt);
    } else if (terms.size() == 1 && std::abs(terms.begin()->second) == 1) {
      out.emplace_back(SignedMonomial{static_cast<int>(terms.begin()->second),
                                      Monomial(terms.begin()->first)});
    } else {
      throw std::logic_error("minor determinant is not a single monomial");
    }
  }
  return out;
}

bool verifyMinorCertificate(
    const SimplicialComplex& complex,
    std::span<const std::pair<std::size_t, std::size_t>> edges) {
  const std::vector<SignedMonomial> dets = minorDeterminants(complex, edges);
  const Mask used = complex.vertexMask();
  for (std::size_t j = 0; j < dets.size(); ++j) {
    const Monomial expected =
        Monomial::fromMask(complex.ambient(), used & ~complex.facetMasks()[j]);
    if (dets[j].value != expected) return false;
  }
  return true;
}

bool verifyMinorCertificate(const SimplicialComplex& complex,
                            const RelationTree& tree) {
  return verifyMinorCertificate(complex, tree.edgePairs());
}

std::vector<RelationTree> relationTrees(const SimplicialComplex& complex,
                                        std::size_t limit) {
  if (!isQuasiTree(complex)) throw DomainError("complex is not a quasi-tree");
  const auto facets = complex.facetMasks();
  const std::size_t t = facets.size();
  std::map<std::uint64_t, std::set<EdgeList>> memo;
  auto rec = [&](auto&& self, std::uint64_t alive) -> const std::set<EdgeList>& {
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    std::set<EdgeList> found;
    if (std::popcount(alive) == 1) {
      found.insert(EdgeList{});
    } else {
      for (std::size_t f = 0; f < t && found.size() < limit; ++f) {
        if (!(alive >> f & 1U)) continue;
        const auto branches = branchesWithin(facets, alive, f);
        if (!branches) continue;
        const std::uint64_t rest = alive & ~(std::uint64_t{1} << f);
        const std::set<EdgeList>& sub = self(self, rest);
        for (std::size_t g : *branches) {
          for (const EdgeList& tree : sub) {
            EdgeList grown = tree;
            const auto e = ordered({f, g});
            grown.insert(std::lower_bound(grown.begin(), grown.end(), e), e);
            found.insert(std::move(grown));
            if (found.size() >= limit) break;
          }
          if (found.size() >= limit) break;
        }
      }
    }
    return memo.emplace(alive, std::move(found)).first->second;
  };
  std::vector<RelationTree> out;
  for (const EdgeList& edges : rec(rec, allFacets(t))) {
    out.push_back(labelFromComplex(complex, edges));
  }
  return out;
}

std::vector<Monomial> reconstructGenerators(const RelationTree& tree) {
  const std::size_t t = tree.num_generators;
  if (t < 2) throw DomainError("a single generator carries no relation labels");
  const EdgeList pairs = tree.edgePairs();
  requireSpanningTree(t, pairs);
  const int n = tree.edges.front().u_ij.numVars();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(t);
  for (std::size_t r = 0; r < tree.edges.size(); ++r) {
    const RelationEdge& e = tree.edges[r];
    if (e.u_ij.numVars() != n || e.u_ji.numVars() != n) {
      throw DomainError("relation labels live in different rings");
    }
    adj[e.i].emplace_back(e.j, r);
    adj[e.j].emplace_back(e.i, r);
  }
  std::vector<Monomial> gens;
  for (std::size_t source = 0; source < t; ++source) {
    Monomial u = Monomial::one(n);
    std::vector<std::size_t> stack{source};
    std::vector<bool> seen(t, false);
    seen[source] = true;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      for (auto [j, r] : adj[k]) {
        if (seen[j]) continue;
        seen[j] = true;
        const RelationEdge& e = tree.edges[r];
        u = u * (e.i == k ? e.u_ij : e.u_ji);
        stack.push_back(j);
      }
    }
    gens.push_back(std::move(u));
  }
  for (const RelationEdge& e : tree.edges) {
    const Monomial g = gcd(gens[e.i], gens[e.j]);
    if (quotient(gens[e.i], g) != e.u_ij || quotient(gens[e.j], g) != e.u_ji) {
      throw DomainError("relation labels on edge {" + std::to_string(e.i + 1) +
                        "," + std::to_string(e.j + 1) + "} are inconsistent");
    }
  }
  return gens;
}

std::vector<EdgeList> spanningTrees(std::size_t t) {
  if (t == 0) throw DomainError("need at least one vertex");
  if (t > 8) throw ResourceError("spanning tree enumeration limited to t <= 8");
  if (t == 1) return {EdgeList{}};
  std::vector<EdgeList> out;
  std::vector<std::size_t> code(t - 2, 0);
  while (true) {
    // Decode the Pruefer sequence.
    std::vector<std::size_t> degree(t, 1);
    for (std::size_t c : code) ++degree[c];
    EdgeList edges;
    for (std::size_t c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back(ordered({leaf, c}));
      --degree[leaf];
      --degree[c];
    }
    std::size_t a = t;
    for (std::size_t v = 0; v < t; ++v) {
      if (degree[v] == 1) {
        if (a == t) {
          a = v;
        } else {
          edges.push_back(ordered({a, v}));
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == t) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return out;
}

}  // namespace alexdual
