// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Slow reference implementations used as test oracles. Nothing here calls
// into the library's algorithms; matroid oracles are only used as black-box
// independence predicates where a test says so.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "mpls/mpls.hpp"

namespace ref {

using mpls::Element;
using mpls::ElementSet;
using mpls::Rational;

using Predicate = std::function<bool(const ElementSet&)>;

/// A library oracle paired with an independently coded predicate.
struct PairedMatroid {
  std::string family;
  std::size_t n = 0;
  mpls::MatroidOracle lib;
  Predicate ref;
};

inline bool uniform_independent(std::size_t r, const ElementSet& s) { return s.size() <= r; }

inline bool partition_independent(const std::vector<std::size_t>& block_of, const std::vector<std::size_t>& caps,
                                  const ElementSet& s) {
  std::vector<std::size_t> used(caps.size(), 0);
  for (Element e : s) {
    if (++used[block_of[e]] > caps[block_of[e]]) return false;
  }
  return true;
}

/// Forest test by counting components with breadth-first search:
/// a multigraph edge set is acyclic iff |edges| = |touched vertices| - components.
inline bool graphic_independent(std::size_t vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                const ElementSet& s) {
  std::vector<std::vector<std::uint32_t>> adj(vertices);
  std::vector<char> touched(vertices, 0);
  for (Element e : s) {
    auto [u, v] = edges[e];
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
    touched[u] = touched[v] = 1;
  }
  std::size_t components = 0, count = 0;
  std::vector<char> seen(vertices, 0);
  for (std::uint32_t start = 0; start < vertices; ++start) {
    if (!touched[start]) continue;
    ++count;
    if (seen[start]) continue;
    ++components;
    std::queue<std::uint32_t> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
      }
    }
  }
  return s.size() == count - components;
}

/// Linear independence by trying every nonzero coefficient vector.
inline bool linear_independent(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& columns,
                               const ElementSet& s) {
  if (s.empty()) return true;
  const std::size_t rows = columns.front().size();
  std::vector<std::uint64_t> coef(s.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == p - 1) coef[i++] = 0;
    if (i == coef.size()) return true;
    ++coef[i];
    bool zero = true;
    for (std::size_t r = 0; r < rows && zero; ++r) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < s.size(); ++j) {
        acc = (acc + static_cast<std::int64_t>(coef[j]) * (((columns[s[j]][r] % static_cast<std::int64_t>(p)) +
                                                              static_cast<std::int64_t>(p)) %
                                                             static_cast<std::int64_t>(p))) %
              static_cast<std::int64_t>(p);
      }
      zero = acc == 0;
    }
    if (zero) return false;
  }
}

/// Random matroid of one of the four families, built from parameters that
/// both the library factory and the reference predicate see.
inline PairedMatroid random_paired(mpls::Rng& rng, const std::string& family, std::size_t n) {
  PairedMatroid m{family, n, {}, {}};
  if (family == "uniform") {
    std::size_t r = rng.between(0, n);
    m.lib = mpls::uniform_matroid(n, r);
    m.ref = [r](const ElementSet& s) { return uniform_independent(r, s); };
  } else if (family == "partition") {
    std::size_t count = rng.between(1, std::max<std::size_t>(1, n));
    std::vector<std::size_t> block_of(n);
    for (auto& b : block_of) b = rng.below(count);
    std::vector<std::size_t> caps(count);
    for (auto& c : caps) c = rng.between(0, 2);
    std::vector<ElementSet> blocks(count);
    for (std::size_t e = 0; e < n; ++e) blocks[block_of[e]].push_back(static_cast<Element>(e));
    m.lib = mpls::partition_matroid(blocks, caps);
    m.ref = [block_of, caps](const ElementSet& s) { return partition_independent(block_of, caps, s); };
  } else if (family == "graphic") {
    std::size_t vertices = rng.between(2, 5);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t e = 0; e < n; ++e) {
      auto u = static_cast<std::uint32_t>(rng.below(vertices));
      auto v = static_cast<std::uint32_t>(rng.below(vertices));
      edges.emplace_back(u, v);  // loops allowed here
    }
    m.lib = mpls::graphic_matroid(vertices, edges);
    m.ref = [vertices, edges](const ElementSet& s) { return graphic_independent(vertices, edges, s); };
  } else {
    std::uint64_t p = rng.below(2) ? 3 : 2;
    std::size_t rows = rng.between(1, 4);
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(rows));
    for (auto& c : cols) {
      for (auto& x : c) x = static_cast<std::int64_t>(rng.below(p));
    }
    m.lib = mpls::linear_matroid(p, cols);
    m.ref = [p, cols](const ElementSet& s) { return linear_independent(p, cols, s); };
  }
  return m;
}

inline const std::vector<std::string>& families() {
  static const std::vector<std::string> f{"uniform", "partition", "graphic", "linear"};
  return f;
}

inline ElementSet from_mask(std::uint64_t mask) {
  ElementSet s;
  for (Element e = 0; mask; ++e, mask >>= 1) {
    if (mask & 1) s.push_back(e);
  }
  return s;
}

/// Size of a largest independent subset, by enumeration.
inline std::size_t rank(const Predicate& indep, const ElementSet& set) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << set.size()); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (mask >> i & 1) s.push_back(set[i]);
    }
    if (s.size() > best && indep(s)) best = s.size();
  }
  return best;
}

/// Pairwise disjoint and independent, checked from raw edge data.
inline bool feasible(const mpls::ParityInstance& inst, const std::vector<std::uint32_t>& chosen,
                     const Predicate& indep) {
  std::map<Element, int> seen;
  ElementSet verts;
  for (auto e : chosen) {
    for (Element v : inst.edges()[e].verts) {
      if (seen[v]++) return false;
      verts.push_back(v);
    }
  }
  std::sort(verts.begin(), verts.end());
  return indep(verts);
}

inline Predicate oracle_predicate(const mpls::MatroidOracle& m) {
  return [m](const ElementSet& s) { return m.is_independent(s); };
}

/// Maximum feasible weight over all edge subsets.
inline Rational optimum_weight(const mpls::ParityInstance& inst, const Predicate& indep) {
  const std::size_t n = inst.edge_count();
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint32_t> chosen;
    Rational w = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1) {
        chosen.push_back(static_cast<std::uint32_t>(e));
        w += inst.edges()[e].weight;
      }
    }
    if (w > best && feasible(inst, chosen, indep)) best = w;
  }
  return best;
}

inline Rational optimum_weight(const mpls::ParityInstance& inst) {
  return optimum_weight(inst, oracle_predicate(inst.matroid()));
}

/// Maximum weight common independent set of k matroids on 0..n-1.
inline Rational kmi_optimum(const std::vector<Predicate>& matroids, const std::vector<Rational>& weights) {
  const std::size_t n = weights.size();
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s = from_mask(mask);
    Rational w = 0;
    for (Element e : s) w += weights[e];
    if (w <= best) continue;
    if (std::all_of(matroids.begin(), matroids.end(), [&](const Predicate& p) { return p(s); })) best = w;
  }
  return best;
}

struct WeightedPair {
  std::uint32_t left;
  std::uint32_t right;
  Rational weight;
};

/// Maximum weight bipartite matching by successive shortest augmenting paths
/// (Bellman-Ford on the residual graph, costs = negated weights). Stops when
/// the cheapest augmenting path no longer has negative cost.
inline Rational max_weight_matching(std::size_t left, std::size_t right, const std::vector<WeightedPair>& pairs) {
  // Nodes: source 0, left 1..L, right L+1..L+R, sink L+R+1.
  const std::size_t N = left + right + 2, src = 0, sink = left + right + 1;
  struct Arc {
    std::size_t to;
    int cap;
    Rational cost;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> g(N);
  auto add = [&](std::size_t u, std::size_t v, Rational c) {
    g[u].push_back({v, 1, c, g[v].size()});
    g[v].push_back({u, 0, -c, g[u].size() - 1});
  };
  for (std::size_t u = 0; u < left; ++u) add(src, 1 + u, 0);
  for (std::size_t v = 0; v < right; ++v) add(1 + left + v, sink, 0);
  for (const auto& p : pairs) add(1 + p.left, 1 + left + p.right, -p.weight);

  Rational total = 0;
  while (true) {
    std::vector<std::optional<Rational>> dist(N);
    std::vector<std::pair<std::size_t, std::size_t>> parent(N, {SIZE_MAX, SIZE_MAX});
    dist[src] = Rational(0);
    for (std::size_t it = 0; it + 1 < N; ++it) {
      bool changed = false;
      for (std::size_t u = 0; u < N; ++u) {
        if (!dist[u]) continue;
        for (std::size_t a = 0; a < g[u].size(); ++a) {
          const Arc& arc = g[u][a];
          if (arc.cap <= 0) continue;
          Rational nd = *dist[u] + arc.cost;
          if (!dist[arc.to] || nd < *dist[arc.to]) {
            dist[arc.to] = nd;
            parent[arc.to] = {u, a};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (!dist[sink] || *dist[sink] >= 0) break;
    total -= *dist[sink];
    for (std::size_t v = sink; v != src;) {
      auto [u, a] = parent[v];
      g[u][a].cap -= 1;
      g[v][g[u][a].rev].cap += 1;
      v = u;
    }
  }
  return total;
}

}  // namespace ref
