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

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mpls/errors.hpp"
#include "mpls/instance.hpp"
#include "mpls/matroid.hpp"
#include "mpls/rational.hpp"

namespace mpls {

/// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed of the `index`-th independent stream derived from `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix_seed(mix_seed(seed) ^ mix_seed(index + 0x632be59bd9b4e019ull));
}

/// mt19937_64 with a portable bounded draw (std distributions differ between
/// standard libraries; generated instances must not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 gen_;
};

enum class Family { random_k_set_packing, random_k_mi_partition, graphic_parity, greedy_trap };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::random_k_set_packing: return "random-k-set-packing";
    case Family::random_k_mi_partition: return "random-k-mi-partition";
    case Family::graphic_parity: return "graphic-parity";
    case Family::greedy_trap: return "greedy-trap";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::random_k_set_packing, Family::random_k_mi_partition, Family::graphic_parity,
                   Family::greedy_trap}) {
    if (family_name(f) == name) return f;
  }
  throw ConstructionError("unknown instance family '" + std::string(name) + "'");
}

/// Generator parameters. `n` is the number of hyperedges (for k-MI: ground
/// set elements). Zero for `vertices` / `blocks` selects a size-based default.
struct GenParams {
  Family family = Family::random_k_set_packing;
  std::size_t k = 3;
  std::size_t n = 8;
  std::size_t vertices = 0;   // set packing: vertex pool; graphic-parity: graph vertices
  std::size_t blocks = 0;     // k-MI: blocks per partition matroid
  std::size_t capacity = 1;   // k-MI: capacities drawn from 1..capacity
  Rational rho{1, 10};        // greedy-trap
  std::uint32_t weight_levels = 100;  // weights are j / weight_levels, j in 1..weight_levels
};

namespace detail {

inline Weight draw_weight(Rng& rng, std::uint32_t levels) {
  Weight w(static_cast<long>(rng.between(1, levels)), static_cast<long>(levels));
  w.canonicalize();
  return w;
}

inline std::size_t draw_arity(Rng& rng, std::size_t k) { return rng.between(std::min<std::size_t>(2, k), k); }

inline ElementSet draw_distinct(Rng& rng, std::size_t pool, std::size_t count) {
  std::vector<Element> all(pool);
  for (std::size_t i = 0; i < pool; ++i) all[i] = static_cast<Element>(i);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + rng.below(pool - i);
    std::swap(all[i], all[j]);
  }
  all.resize(count);
  return make_set(all);
}

inline ParityInstance gen_set_packing(const GenParams& p, Rng& rng) {
  const std::size_t pool = p.vertices ? p.vertices : std::max(p.k, p.n * p.k / 2);
  if (pool < p.k) throw ConstructionError("random-k-set-packing: vertex pool smaller than k");
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < p.n; ++i) {
    Hyperedge e;
    e.verts = draw_distinct(rng, pool, draw_arity(rng, p.k));
    e.weight = draw_weight(rng, p.weight_levels);
    edges.push_back(std::move(e));
  }
  return ParityInstance(p.k, pool, std::move(edges), free_matroid(pool));
}

inline ParityInstance gen_kmi_partition(const GenParams& p, Rng& rng) {
  const std::size_t blocks = p.blocks ? p.blocks : std::max<std::size_t>(1, p.n / 2);
  if (p.capacity < 1) throw ConstructionError("random-k-mi-partition: capacity must be at least 1");
  std::vector<MatroidOracle> matroids;
  for (std::size_t i = 0; i < p.k; ++i) {
    std::vector<ElementSet> parts(blocks);
    for (std::size_t v = 0; v < p.n; ++v) parts[rng.below(blocks)].push_back(static_cast<Element>(v));
    std::vector<std::size_t> caps(blocks);
    for (auto& c : caps) c = rng.between(1, p.capacity);
    matroids.push_back(partition_matroid(std::move(parts), std::move(caps)));
  }
  std::vector<Weight> weights;
  for (std::size_t v = 0; v < p.n; ++v) weights.push_back(draw_weight(rng, p.weight_levels));
  return from_matroid_intersection(matroids, weights);
}

inline ParityInstance gen_graphic_parity(const GenParams& p, Rng& rng) {
  const std::size_t graph_vertices = p.vertices ? p.vertices : std::max<std::size_t>(3, p.n);
  if (graph_vertices < 2) throw ConstructionError("graphic-parity: need at least 2 graph vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> graph_edges;
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < p.n; ++i) {
    Hyperedge e;
    const std::size_t arity = draw_arity(rng, p.k);
    for (std::size_t j = 0; j < arity; ++j) {
      auto u = static_cast<std::uint32_t>(rng.below(graph_vertices));
      auto v = static_cast<std::uint32_t>(rng.below(graph_vertices - 1));
      if (v >= u) ++v;
      e.verts.push_back(static_cast<Element>(graph_edges.size()));
      graph_edges.emplace_back(u, v);
    }
    e.weight = draw_weight(rng, p.weight_levels);
    edges.push_back(std::move(e));
  }
  const std::size_t count = graph_edges.size();
  return ParityInstance(p.k, count, std::move(edges), graphic_matroid(graph_vertices, std::move(graph_edges)));
}

/// Edge 0 (weight 1) has vertices h_1..h_k; edge j (weight 1 - rho) has
/// vertices l_j1..l_jk. A partition matroid puts {h_j, l_j1} in a capacity-1
/// block, so the heavy edge conflicts with every light edge while the light
/// edges are mutually compatible. Greedy takes the heavy edge (value 1); the
/// optimum takes all light edges (value k(1 - rho)).
inline ParityInstance gen_greedy_trap(const GenParams& p) {
  const std::size_t k = p.k;
  if (k < 2) throw ConstructionError("greedy-trap: k must be at least 2");
  if (p.rho < 0 || p.rho >= Rational(static_cast<long>(k - 1), static_cast<long>(k))) {
    throw ConstructionError("greedy-trap: rho must lie in [0, 1 - 1/k)");
  }
  const std::size_t count = k + k * k;
  auto heavy = [](std::size_t j) { return static_cast<Element>(j); };
  auto light = [k](std::size_t edge, std::size_t j) { return static_cast<Element>(k + edge * k + j); };

  std::vector<ElementSet> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back(make_set({heavy(j), light(j, 0)}));
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t j = 1; j < k; ++j) blocks.push_back({light(e, j)});
  }
  std::vector<std::size_t> caps(blocks.size(), 1);

  std::vector<Hyperedge> edges;
  Hyperedge h;
  for (std::size_t j = 0; j < k; ++j) h.verts.push_back(heavy(j));
  h.weight = 1;
  edges.push_back(std::move(h));
  for (std::size_t e = 0; e < k; ++e) {
    Hyperedge l;
    for (std::size_t j = 0; j < k; ++j) l.verts.push_back(light(e, j));
    l.weight = 1 - p.rho;
    edges.push_back(std::move(l));
  }
  return ParityInstance(k, count, std::move(edges), partition_matroid(std::move(blocks), std::move(caps)));
}

}  // namespace detail

enum class MatroidFamily { uniform, partition, graphic, linear };

inline std::string matroid_family_name(MatroidFamily f) {
  switch (f) {
    case MatroidFamily::uniform: return "uniform";
    case MatroidFamily::partition: return "partition";
    case MatroidFamily::graphic: return "graphic";
    case MatroidFamily::linear: return "linear";
  }
  return "?";
}

/// Small random matroid on 0..n-1. Graphic: a loopless multigraph on 2..5
/// vertices. Linear: GF(2) or GF(3) columns of height 1..4.
inline MatroidOracle random_matroid(Rng& rng, MatroidFamily family, std::size_t n) {
  switch (family) {
    case MatroidFamily::uniform: return uniform_matroid(n, rng.between(0, n));
    case MatroidFamily::partition: {
      const std::size_t count = rng.between(1, std::max<std::size_t>(1, n));
      std::vector<ElementSet> blocks(count);
      for (std::size_t e = 0; e < n; ++e) blocks[rng.below(count)].push_back(static_cast<Element>(e));
      std::vector<ElementSet> nonempty;
      std::vector<std::size_t> caps;
      for (auto& b : blocks) {
        if (b.empty()) continue;
        caps.push_back(rng.between(0, std::min<std::size_t>(2, b.size())));
        nonempty.push_back(std::move(b));
      }
      return partition_matroid(std::move(nonempty), std::move(caps));
    }
    case MatroidFamily::graphic: {
      const auto vertices = static_cast<std::uint32_t>(rng.between(2, 5));
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (std::size_t e = 0; e < n; ++e) {
        auto u = static_cast<std::uint32_t>(rng.below(vertices));
        auto v = static_cast<std::uint32_t>(rng.below(vertices - 1));
        if (v >= u) ++v;
        edges.emplace_back(u, v);
      }
      return graphic_matroid(vertices, std::move(edges));
    }
    case MatroidFamily::linear: {
      const std::uint64_t prime = rng.below(2) ? 3 : 2;
      const std::size_t rows = rng.between(1, 4);
      std::vector<std::vector<std::int64_t>> columns(n, std::vector<std::int64_t>(rows));
      for (auto& c : columns) {
        for (auto& x : c) x = static_cast<std::int64_t>(rng.below(prime));
      }
      return linear_matroid(prime, std::move(columns));
    }
  }
  throw ConstructionError("unknown matroid family");
}

/// Random independent subset of `pool` with at most `max_size` elements,
/// built greedily from a shuffled order.
inline ElementSet random_independent(Rng& rng, const MatroidOracle& m, ElementSet pool, std::size_t max_size) {
  for (std::size_t i = 0; i + 1 < pool.size(); ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  std::vector<Element> out;
  for (Element e : pool) {
    if (out.size() >= max_size) break;
    out.push_back(e);
    if (!m.independent_unchecked(out)) out.pop_back();
  }
  return make_set(std::move(out));
}

/// Deterministic for a given (params, seed). The result may have overlapping
/// hyperedges (set packing); pass it through make_disjoint before solving.
inline ParityInstance generate(const GenParams& params, std::uint64_t seed) {
  if (params.k < 1) throw ConstructionError("generator: k must be at least 1");
  if (params.family != Family::greedy_trap && params.n < 1) throw ConstructionError("generator: n must be at least 1");
  if (params.weight_levels < 1) throw ConstructionError("generator: weight_levels must be at least 1");
  Rng rng(seed);
  switch (params.family) {
    case Family::random_k_set_packing: return detail::gen_set_packing(params, rng);
    case Family::random_k_mi_partition: return detail::gen_kmi_partition(params, rng);
    case Family::graphic_parity: return detail::gen_graphic_parity(params, rng);
    case Family::greedy_trap: return detail::gen_greedy_trap(params);
  }
  throw ConstructionError("generator: unknown family");
}

}  // namespace mpls
