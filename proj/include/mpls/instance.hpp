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

/**
 * @file instance.hpp
 * @brief Matroid k-parity instances and feasible solutions.
 *
 * An instance is a hypergraph whose hyperedges have at most k vertices, a
 * nonnegative weight per hyperedge, and a matroid on the vertices. A set of
 * hyperedges is feasible when the hyperedges are pairwise disjoint and the
 * union of their vertices is independent.
 *
 * Instances may have overlapping hyperedges as loaded; make_disjoint brings
 * them to the normal form the solvers expect, where every vertex lies in
 * exactly one hyperedge.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpls/errors.hpp"
#include "mpls/matroid.hpp"
#include "mpls/rational.hpp"

namespace mpls {

using EdgeId = std::uint32_t;
using EdgeSet = std::vector<EdgeId>;

struct Hyperedge {
  ElementSet verts;
  Weight weight;

  friend bool operator==(const Hyperedge& a, const Hyperedge& b) {
    return a.verts == b.verts && a.weight == b.weight;
  }
};

class ParityInstance {
 public:
  ParityInstance(std::size_t k, std::size_t vertex_count, std::vector<Hyperedge> edges, MatroidOracle matroid)
      : k_(k), vertex_count_(vertex_count), edges_(std::move(edges)), matroid_(std::move(matroid)) {
    if (k_ < 1) throw ConstructionError("instance: k must be at least 1");
    if (!matroid_) throw ConstructionError("instance: missing matroid");
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (!matroid_.ground().contains(static_cast<Element>(v))) {
        throw ConstructionError("instance: vertex " + std::to_string(v) + " is not in the matroid ground set");
      }
    }
    std::vector<std::uint32_t> degree(vertex_count_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Hyperedge& e = edges_[i];
      std::size_t raw = e.verts.size();
      e.verts = make_set(std::move(e.verts));
      if (e.verts.size() != raw) {
        throw ConstructionError("instance: edge " + std::to_string(i) + " repeats a vertex");
      }
      if (e.verts.empty() || e.verts.size() > k_) {
        throw ConstructionError("instance: edge " + std::to_string(i) + " has " + std::to_string(e.verts.size()) +
                                " vertices, expected 1.." + std::to_string(k_));
      }
      if (e.verts.back() >= vertex_count_) {
        throw ConstructionError("instance: edge " + std::to_string(i) + " names an unknown vertex");
      }
      e.weight.canonicalize();
      if (e.weight < 0) throw ConstructionError("instance: edge " + std::to_string(i) + " has negative weight");
      for (Element v : e.verts) ++degree[v];
    }
    disjoint_ = std::all_of(degree.begin(), degree.end(), [](std::uint32_t d) { return d <= 1; });
    normal_ = std::all_of(degree.begin(), degree.end(), [](std::uint32_t d) { return d == 1; });
    if (disjoint_) {
      owner_.assign(vertex_count_, UINT32_MAX);
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (Element v : edges_[i].verts) owner_[v] = static_cast<EdgeId>(i);
      }
    }
  }

  std::size_t k() const { return k_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeId e) const { return edges_.at(e); }
  const Weight& weight(EdgeId e) const { return edges_.at(e).weight; }
  const MatroidOracle& matroid() const { return matroid_; }

  /// Hyperedges pairwise vertex-disjoint.
  bool is_disjoint() const { return disjoint_; }
  /// Disjoint and every vertex covered: the form produced by make_disjoint.
  bool is_normalized() const { return normal_; }

  /// Edge covering `v` in a disjoint instance.
  std::optional<EdgeId> owner(Element v) const {
    if (!disjoint_ || v >= owner_.size() || owner_[v] == UINT32_MAX) return std::nullopt;
    return owner_[v];
  }

  /// v(E') for a list of edge ids (concatenated, not sorted).
  std::vector<Element> vertices_of(std::span<const EdgeId> chosen) const {
    std::vector<Element> out;
    for (EdgeId e : chosen) {
      const auto& vs = edges_[e].verts;
      out.insert(out.end(), vs.begin(), vs.end());
    }
    return out;
  }

  Weight weight_of(std::span<const EdgeId> chosen) const {
    Weight total = 0;
    for (EdgeId e : chosen) total += edges_[e].weight;
    return total;
  }

 private:
  std::size_t k_;
  std::size_t vertex_count_;
  std::vector<Hyperedge> edges_;
  MatroidOracle matroid_;
  bool disjoint_ = false;
  bool normal_ = false;
  std::vector<EdgeId> owner_;
};

/// A feasible set of hyperedges and its total weight.
struct Solution {
  EdgeSet edges;  // sorted
  Weight weight = 0;

  friend bool operator==(const Solution& a, const Solution& b) { return a.edges == b.edges && a.weight == b.weight; }
};

inline void check_edge_ids(const ParityInstance& inst, std::span<const EdgeId> chosen) {
  for (EdgeId e : chosen) {
    if (e >= inst.edge_count()) throw DomainError("unknown edge id " + std::to_string(e));
  }
}

inline Solution make_solution(const ParityInstance& inst, EdgeSet chosen) {
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  check_edge_ids(inst, chosen);
  Weight w = inst.weight_of(chosen);
  return Solution{std::move(chosen), std::move(w)};
}

/// Edges pairwise disjoint and their vertices independent.
inline bool is_feasible(const ParityInstance& inst, std::span<const EdgeId> chosen) {
  check_edge_ids(inst, chosen);
  std::vector<Element> verts = inst.vertices_of(chosen);
  std::vector<Element> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return inst.matroid().is_independent(verts);
}

/// c_v: weight of the edge of a disjoint edge collection that covers v.
class VertexCost {
 public:
  VertexCost(const ParityInstance& inst, std::span<const EdgeId> chosen) {
    check_edge_ids(inst, chosen);
    for (EdgeId e : chosen) {
      for (Element v : inst.edge(e).verts) {
        auto [it, fresh] = cost_.emplace(v, inst.weight(e));
        if (!fresh) throw PreconditionError("vertex cost: edges overlap at vertex " + std::to_string(v));
      }
    }
  }

  const Weight& operator()(Element v) const {
    auto it = cost_.find(v);
    if (it == cost_.end()) throw DomainError("vertex cost: vertex " + std::to_string(v) + " is not covered");
    return it->second;
  }

  Weight operator()(std::span<const Element> set) const {
    Weight total = 0;
    for (Element v : set) total += (*this)(v);
    return total;
  }

 private:
  std::map<Element, Weight> cost_;
};

/// k-matroid intersection as matroid k-parity: k labeled copies of the
/// ground set, one hyperedge per original element joining its k copies, and
/// the union of the per-copy matroids.
inline ParityInstance from_matroid_intersection(const std::vector<MatroidOracle>& matroids,
                                                const std::vector<Weight>& weights) {
  if (matroids.empty()) throw ConstructionError("matroid intersection: need at least one matroid");
  const GroundSet& ground = matroids.front().ground();
  if (!ground.is_dense()) throw ConstructionError("matroid intersection: ground set must be 0..n-1");
  for (const auto& m : matroids) {
    if (!(m.ground() == ground)) throw ConstructionError("matroid intersection: ground sets differ");
  }
  const std::size_t n = ground.size();
  const std::size_t k = matroids.size();
  if (weights.size() != n) throw ConstructionError("matroid intersection: need one weight per element");

  std::vector<MatroidOracle> copies;
  for (std::size_t i = 0; i < k; ++i) copies.push_back(shift(matroids[i], static_cast<Element>(i * n)));
  std::vector<Hyperedge> edges;
  edges.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    Hyperedge e;
    for (std::size_t i = 0; i < k; ++i) e.verts.push_back(static_cast<Element>(i * n + v));
    e.weight = weights[v];
    edges.push_back(std::move(e));
  }
  return ParityInstance(k, k * n, std::move(edges), matroid_union(copies));
}

/// Gives every hyperedge private copies of its vertices. The new matroid
/// accepts a set iff it holds at most one copy of each original vertex and
/// the originals are independent. Instances already in normal form are
/// returned unchanged.
inline ParityInstance make_disjoint(const ParityInstance& raw) {
  if (raw.is_normalized()) return raw;
  std::vector<Element> origin;
  std::vector<Hyperedge> edges;
  edges.reserve(raw.edge_count());
  for (const auto& e : raw.edges()) {
    Hyperedge copy;
    for (Element v : e.verts) {
      copy.verts.push_back(static_cast<Element>(origin.size()));
      origin.push_back(v);
    }
    copy.weight = e.weight;
    edges.push_back(std::move(copy));
  }
  const std::size_t count = origin.size();
  return ParityInstance(raw.k(), count, std::move(edges), project(raw.matroid(), std::move(origin)));
}

}  // namespace mpls
