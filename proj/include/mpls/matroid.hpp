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
 * @file matroid.hpp
 * @brief Matroid independence oracles.
 *
 * A MatroidOracle is an immutable, cheaply copyable handle around a shared
 * implementation. The standard families (uniform, partition, graphic, linear
 * over GF(p), free) are leaves; restrict / contract / shift / union /
 * project build new oracles that reference their bases.
 *
 * Element identifiers are unsigned integers. A base family over n elements
 * owns the dense labels 0..n-1; combinators keep the labels of their base, so
 * e.g. restrict(M, {3, 5}) answers queries about the elements 3 and 5.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mpls/errors.hpp"

namespace mpls {

using Element = std::uint32_t;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

/// Sorts and removes duplicates.
inline ElementSet make_set(std::vector<Element> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Finite ground set: a subset of the label universe [0, universe).
class GroundSet {
 public:
  GroundSet() = default;

  static GroundSet dense(std::size_t n) {
    GroundSet g;
    g.members_.assign(n, true);
    g.elements_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.elements_[i] = static_cast<Element>(i);
    return g;
  }

  static GroundSet of(const ElementSet& elements) {
    GroundSet g;
    g.elements_ = make_set(elements);
    std::size_t universe = g.elements_.empty() ? 0 : g.elements_.back() + 1;
    g.members_.assign(universe, false);
    for (Element e : g.elements_) g.members_[e] = true;
    return g;
  }

  bool contains(Element e) const { return e < members_.size() && members_[e]; }
  std::size_t size() const { return elements_.size(); }
  /// One past the largest label in the set.
  std::size_t universe() const { return members_.size(); }
  const ElementSet& elements() const { return elements_; }
  bool is_dense() const { return elements_.size() == members_.size(); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<bool> members_;
  ElementSet elements_;
};

namespace detail {

class MatroidImpl {
 public:
  explicit MatroidImpl(GroundSet ground) : ground_(std::move(ground)) {}
  virtual ~MatroidImpl() = default;

  /// `set` holds distinct members of the ground set, in any order.
  virtual bool independent(std::span<const Element> set) const = 0;
  virtual std::string kind() const = 0;
  virtual std::optional<nlohmann::json> describe() const { return std::nullopt; }

  const GroundSet& ground() const { return ground_; }

 private:
  GroundSet ground_;
};

}  // namespace detail

/// Immutable independence oracle. Copies share the implementation and the
/// query counter; the counter is atomic so concurrent queries are safe.
class MatroidOracle {
 public:
  MatroidOracle() = default;
  explicit MatroidOracle(std::shared_ptr<const detail::MatroidImpl> impl)
      : impl_(std::move(impl)), calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

  /// Throws DomainError when `set` has an element outside the ground set or a repeated element.
  bool is_independent(std::span<const Element> set) const {
    validate(set);
    calls_->fetch_add(1, std::memory_order_relaxed);
    return impl_->independent(set);
  }
  bool is_independent(std::initializer_list<Element> set) const {
    return is_independent(std::span<const Element>(set.begin(), set.size()));
  }

  /// Same as is_independent without the membership check; for hot loops whose
  /// inputs are already known to be valid.
  bool independent_unchecked(std::span<const Element> set) const {
    calls_->fetch_add(1, std::memory_order_relaxed);
    return impl_->independent(set);
  }

  const GroundSet& ground() const { return impl_->ground(); }
  std::string kind() const { return impl_->kind(); }
  /// JSON descriptor, when the oracle is built only from serializable kinds.
  std::optional<nlohmann::json> describe() const { return impl_->describe(); }

  std::uint64_t calls() const { return calls_->load(std::memory_order_relaxed); }
  void reset_calls() const { calls_->store(0, std::memory_order_relaxed); }

  const std::shared_ptr<const detail::MatroidImpl>& impl() const { return impl_; }
  explicit operator bool() const { return static_cast<bool>(impl_); }

 private:
  void validate(std::span<const Element> set) const {
    const GroundSet& g = impl_->ground();
    if (set.size() <= 16) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (!g.contains(set[i])) throw DomainError("element " + std::to_string(set[i]) + " is outside the ground set");
        for (std::size_t j = 0; j < i; ++j) {
          if (set[i] == set[j]) throw DomainError("element " + std::to_string(set[i]) + " repeated in query");
        }
      }
      return;
    }
    std::vector<bool> seen(g.universe(), false);
    for (Element e : set) {
      if (!g.contains(e)) throw DomainError("element " + std::to_string(e) + " is outside the ground set");
      if (seen[e]) throw DomainError("element " + std::to_string(e) + " repeated in query");
      seen[e] = true;
    }
  }

  std::shared_ptr<const detail::MatroidImpl> impl_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

namespace detail {

class UniformImpl final : public MatroidImpl {
 public:
  UniformImpl(std::size_t n, std::size_t r) : MatroidImpl(GroundSet::dense(n)), rank_(r) {}
  bool independent(std::span<const Element> set) const override { return set.size() <= rank_; }
  std::string kind() const override { return "uniform"; }
  std::optional<nlohmann::json> describe() const override {
    return nlohmann::json{{"kind", "uniform"}, {"n", ground().size()}, {"r", rank_}};
  }

 private:
  std::size_t rank_;
};

class FreeImpl final : public MatroidImpl {
 public:
  explicit FreeImpl(std::size_t n) : MatroidImpl(GroundSet::dense(n)) {}
  bool independent(std::span<const Element>) const override { return true; }
  std::string kind() const override { return "free"; }
  std::optional<nlohmann::json> describe() const override {
    return nlohmann::json{{"kind", "free"}, {"n", ground().size()}};
  }
};

class PartitionImpl final : public MatroidImpl {
 public:
  PartitionImpl(GroundSet ground, std::vector<ElementSet> blocks, std::vector<std::size_t> capacities,
                std::vector<std::uint32_t> block_of)
      : MatroidImpl(std::move(ground)),
        blocks_(std::move(blocks)),
        capacities_(std::move(capacities)),
        block_of_(std::move(block_of)) {}

  bool independent(std::span<const Element> set) const override {
    std::vector<std::size_t> used(blocks_.size(), 0);
    for (Element e : set) {
      std::uint32_t b = block_of_[e];
      if (++used[b] > capacities_[b]) return false;
    }
    return true;
  }
  std::string kind() const override { return "partition"; }
  std::optional<nlohmann::json> describe() const override {
    return nlohmann::json{{"kind", "partition"}, {"blocks", blocks_}, {"capacities", capacities_}};
  }

 private:
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> capacities_;
  std::vector<std::uint32_t> block_of_;
};

class GraphicImpl final : public MatroidImpl {
 public:
  GraphicImpl(std::size_t vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
      : MatroidImpl(GroundSet::dense(edges.size())), vertices_(vertices), edges_(std::move(edges)) {}

  // A fresh disjoint-set forest per query; an edge closing a cycle (or a loop) is dependent.
  bool independent(std::span<const Element> set) const override {
    if (set.size() >= vertices_ && !set.empty()) return false;
    std::vector<std::uint32_t> parent(vertices_);
    std::vector<std::uint8_t> rank(vertices_, 0);
    for (std::uint32_t v = 0; v < vertices_; ++v) parent[v] = v;
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (Element e : set) {
      auto [u, v] = edges_[e];
      std::uint32_t ru = find(u), rv = find(v);
      if (ru == rv) return false;
      if (rank[ru] < rank[rv]) std::swap(ru, rv);
      parent[rv] = ru;
      if (rank[ru] == rank[rv]) ++rank[ru];
    }
    return true;
  }
  std::string kind() const override { return "graphic"; }
  std::optional<nlohmann::json> describe() const override {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : edges_) edges.push_back({u, v});
    return nlohmann::json{{"kind", "graphic"}, {"vertices", vertices_}, {"edges", edges}};
  }

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % mod);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

/// Column matroid of an integer matrix reduced modulo a prime.
class LinearImpl final : public MatroidImpl {
 public:
  LinearImpl(std::uint64_t prime, std::size_t rows, std::vector<std::vector<std::int64_t>> columns)
      : MatroidImpl(GroundSet::dense(columns.size())), prime_(prime), rows_(rows), raw_(std::move(columns)) {
    reduced_.reserve(raw_.size());
    for (const auto& col : raw_) {
      std::vector<std::uint64_t> r(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        std::int64_t m = col[i] % static_cast<std::int64_t>(prime_);
        if (m < 0) m += static_cast<std::int64_t>(prime_);
        r[i] = static_cast<std::uint64_t>(m);
      }
      reduced_.push_back(std::move(r));
    }
  }

  // Full column rank by Gaussian elimination over GF(p).
  bool independent(std::span<const Element> set) const override {
    if (set.size() > rows_) return false;
    if (set.empty()) return true;
    const std::size_t cols = set.size();
    std::vector<std::vector<std::uint64_t>> m(rows_, std::vector<std::uint64_t>(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) m[r][c] = reduced_[set[c]][r];
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t sel = pivot_row;
      while (sel < rows_ && m[sel][c] == 0) ++sel;
      if (sel == rows_) return false;
      std::swap(m[sel], m[pivot_row]);
      std::uint64_t inv = pow_mod(m[pivot_row][c], prime_ - 2, prime_);
      for (std::size_t r = pivot_row + 1; r < rows_; ++r) {
        if (m[r][c] == 0) continue;
        std::uint64_t factor = mul(m[r][c], inv);
        for (std::size_t cc = c; cc < cols; ++cc) {
          m[r][cc] = sub(m[r][cc], mul(factor, m[pivot_row][cc]));
        }
      }
      ++pivot_row;
    }
    return true;
  }
  std::string kind() const override { return "linear"; }
  std::optional<nlohmann::json> describe() const override {
    return nlohmann::json{{"kind", "linear"}, {"field_prime", prime_}, {"columns", raw_}};
  }

 private:
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % prime_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + prime_ - b; }

  std::uint64_t prime_;
  std::size_t rows_;
  std::vector<std::vector<std::int64_t>> raw_;
  std::vector<std::vector<std::uint64_t>> reduced_;
};

class RestrictedImpl final : public MatroidImpl {
 public:
  RestrictedImpl(std::shared_ptr<const MatroidImpl> base, GroundSet keep)
      : MatroidImpl(std::move(keep)), base_(std::move(base)) {}
  bool independent(std::span<const Element> set) const override { return base_->independent(set); }
  std::string kind() const override { return "restricted"; }

 private:
  std::shared_ptr<const MatroidImpl> base_;
};

class ContractedImpl final : public MatroidImpl {
 public:
  ContractedImpl(std::shared_ptr<const MatroidImpl> base, GroundSet rest, ElementSet away)
      : MatroidImpl(std::move(rest)), base_(std::move(base)), away_(std::move(away)) {}
  bool independent(std::span<const Element> set) const override {
    std::vector<Element> joined;
    joined.reserve(set.size() + away_.size());
    joined.assign(set.begin(), set.end());
    joined.insert(joined.end(), away_.begin(), away_.end());
    return base_->independent(joined);
  }
  std::string kind() const override { return "contracted"; }

 private:
  std::shared_ptr<const MatroidImpl> base_;
  ElementSet away_;
};

/// Relabeled copy: element e of the base appears as e + offset.
class ShiftedImpl final : public MatroidImpl {
 public:
  ShiftedImpl(std::shared_ptr<const MatroidImpl> base, Element offset, GroundSet ground)
      : MatroidImpl(std::move(ground)), base_(std::move(base)), offset_(offset) {}
  bool independent(std::span<const Element> set) const override {
    std::vector<Element> back(set.begin(), set.end());
    for (Element& e : back) e -= offset_;
    return base_->independent(back);
  }
  std::string kind() const override { return "shifted"; }
  std::optional<nlohmann::json> describe() const override {
    auto inner = base_->describe();
    if (!inner) return std::nullopt;
    return nlohmann::json{{"kind", "union"}, {"parts", {{{"offset", offset_}, {"matroid", *inner}}}}};
  }

  const std::shared_ptr<const MatroidImpl>& base() const { return base_; }
  Element offset() const { return offset_; }

 private:
  std::shared_ptr<const MatroidImpl> base_;
  Element offset_;
};

/// Union of matroids on pairwise disjoint ground sets: a set is independent
/// iff its trace on every part is independent there.
class DisjointUnionImpl final : public MatroidImpl {
 public:
  DisjointUnionImpl(std::vector<std::shared_ptr<const MatroidImpl>> parts, GroundSet ground,
                    std::vector<std::uint32_t> part_of)
      : MatroidImpl(std::move(ground)), parts_(std::move(parts)), part_of_(std::move(part_of)) {}

  bool independent(std::span<const Element> set) const override {
    if (parts_.size() == 1) return parts_[0]->independent(set);
    std::vector<std::vector<Element>> split(parts_.size());
    for (Element e : set) split[part_of_[e]].push_back(e);
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      if (!split[p].empty() && !parts_[p]->independent(split[p])) return false;
    }
    return true;
  }
  std::string kind() const override { return "union"; }
  std::optional<nlohmann::json> describe() const override {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : parts_) {
      if (const auto* shifted = dynamic_cast<const ShiftedImpl*>(p.get())) {
        auto inner = shifted->base()->describe();
        if (!inner) return std::nullopt;
        parts.push_back({{"offset", shifted->offset()}, {"matroid", *inner}});
      } else {
        auto inner = p->describe();
        if (!inner) return std::nullopt;
        parts.push_back({{"offset", 0}, {"matroid", *inner}});
      }
    }
    return nlohmann::json{{"kind", "union"}, {"parts", parts}};
  }

 private:
  std::vector<std::shared_ptr<const MatroidImpl>> parts_;
  std::vector<std::uint32_t> part_of_;
};

/// Elements are copies of base elements (`origin[e]`); a set is independent iff
/// it holds at most one copy of each base element and the projected set is
/// independent in the base.
class ProjectedImpl final : public MatroidImpl {
 public:
  ProjectedImpl(std::shared_ptr<const MatroidImpl> base, std::vector<Element> origin)
      : MatroidImpl(GroundSet::dense(origin.size())), base_(std::move(base)), origin_(std::move(origin)) {}

  bool independent(std::span<const Element> set) const override {
    std::vector<Element> projected;
    projected.reserve(set.size());
    for (Element e : set) projected.push_back(origin_[e]);
    std::sort(projected.begin(), projected.end());
    if (std::adjacent_find(projected.begin(), projected.end()) != projected.end()) return false;
    return base_->independent(projected);
  }
  std::string kind() const override { return "projected"; }

  Element origin(Element e) const { return origin_[e]; }

 private:
  std::shared_ptr<const MatroidImpl> base_;
  std::vector<Element> origin_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Families

inline MatroidOracle uniform_matroid(std::size_t n, std::size_t r) {
  return MatroidOracle(std::make_shared<detail::UniformImpl>(n, r));
}

inline MatroidOracle free_matroid(std::size_t n) { return MatroidOracle(std::make_shared<detail::FreeImpl>(n)); }

/// Blocks must partition 0..n-1 for some n; one capacity per block.
inline MatroidOracle partition_matroid(std::vector<ElementSet> blocks, std::vector<std::size_t> capacities) {
  if (blocks.size() != capacities.size()) {
    throw ConstructionError("partition matroid: " + std::to_string(blocks.size()) + " blocks but " +
                            std::to_string(capacities.size()) + " capacities");
  }
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  std::vector<std::uint32_t> block_of(n, UINT32_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element e : blocks[b]) {
      if (e >= n) throw ConstructionError("partition matroid: element " + std::to_string(e) + " out of range");
      if (block_of[e] != UINT32_MAX) {
        throw ConstructionError("partition matroid: element " + std::to_string(e) + " in two blocks");
      }
      block_of[e] = static_cast<std::uint32_t>(b);
    }
  }
  return MatroidOracle(std::make_shared<detail::PartitionImpl>(GroundSet::dense(n), std::move(blocks),
                                                               std::move(capacities), std::move(block_of)));
}

/// Cycle matroid of a multigraph; element i is edges[i].
inline MatroidOracle graphic_matroid(std::size_t vertices,
                                     std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  for (auto [u, v] : edges) {
    if (u >= vertices || v >= vertices) throw ConstructionError("graphic matroid: edge endpoint out of range");
  }
  return MatroidOracle(std::make_shared<detail::GraphicImpl>(vertices, std::move(edges)));
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Column matroid over GF(prime); every column must have the same length.
inline MatroidOracle linear_matroid(std::uint64_t prime, std::vector<std::vector<std::int64_t>> columns) {
  if (!is_prime(prime) || prime > (1ull << 32)) {
    throw ConstructionError("linear matroid: field size " + std::to_string(prime) + " is not a supported prime");
  }
  std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw ConstructionError("linear matroid: ragged columns");
  }
  return MatroidOracle(std::make_shared<detail::LinearImpl>(prime, rows, std::move(columns)));
}

// ---------------------------------------------------------------------------
// Combinators

namespace detail {
inline void require_subset(const MatroidOracle& m, const ElementSet& s, const char* what) {
  for (Element e : s) {
    if (!m.ground().contains(e)) {
      throw DomainError(std::string(what) + ": element " + std::to_string(e) + " is outside the ground set");
    }
  }
}
}  // namespace detail

/// M|keep: same independence on subsets of `keep`.
inline MatroidOracle restrict(const MatroidOracle& m, const ElementSet& keep) {
  ElementSet k = make_set(keep);
  detail::require_subset(m, k, "restrict");
  return MatroidOracle(std::make_shared<detail::RestrictedImpl>(m.impl(), GroundSet::of(k)));
}

/// M/away on ground ∖ away. `away` must be independent.
inline MatroidOracle contract(const MatroidOracle& m, const ElementSet& away) {
  ElementSet a = make_set(away);
  detail::require_subset(m, a, "contract");
  if (!m.is_independent(a)) throw PreconditionError("contract: the contracted set is dependent");
  if (a.empty()) return m;
  ElementSet rest = set_difference(m.ground().elements(), a);
  GroundSet g = GroundSet::of(rest);
  return MatroidOracle(std::make_shared<detail::ContractedImpl>(m.impl(), std::move(g), std::move(a)));
}

/// Labeled copy of `m` with every element moved up by `offset`.
inline MatroidOracle shift(const MatroidOracle& m, Element offset) {
  ElementSet moved = m.ground().elements();
  for (Element& e : moved) e += offset;
  return MatroidOracle(std::make_shared<detail::ShiftedImpl>(m.impl(), offset, GroundSet::of(moved)));
}

/// Union of oracles whose ground sets are pairwise disjoint labeled copies.
inline MatroidOracle matroid_union(const std::vector<MatroidOracle>& parts) {
  if (parts.empty()) throw ConstructionError("matroid union needs at least one part");
  std::size_t universe = 0;
  for (const auto& p : parts) universe = std::max(universe, p.ground().universe());
  std::vector<std::uint32_t> part_of(universe, UINT32_MAX);
  ElementSet all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Element e : parts[i].ground().elements()) {
      if (part_of[e] != UINT32_MAX) {
        throw ConstructionError("matroid union: ground sets overlap at element " + std::to_string(e));
      }
      part_of[e] = static_cast<std::uint32_t>(i);
      all.push_back(e);
    }
  }
  std::vector<std::shared_ptr<const detail::MatroidImpl>> impls;
  for (const auto& p : parts) impls.push_back(p.impl());
  return MatroidOracle(std::make_shared<detail::DisjointUnionImpl>(std::move(impls), GroundSet::of(all),
                                                                   std::move(part_of)));
}

/// Oracle over copies 0..origin.size()-1, copy e standing for base element origin[e].
inline MatroidOracle project(const MatroidOracle& base, std::vector<Element> origin) {
  for (Element o : origin) {
    if (!base.ground().contains(o)) throw DomainError("project: origin " + std::to_string(o) + " outside base");
  }
  return MatroidOracle(std::make_shared<detail::ProjectedImpl>(base.impl(), std::move(origin)));
}

/// Greedy rank: size of a maximal independent subset of `set`, |set| oracle calls.
inline std::size_t rank(const MatroidOracle& m, const ElementSet& set) {
  detail::require_subset(m, set, "rank");
  std::vector<Element> basis;
  for (Element e : set) {
    basis.push_back(e);
    if (!m.independent_unchecked(basis)) basis.pop_back();
  }
  return basis.size();
}

// ---------------------------------------------------------------------------
// Descriptors

inline MatroidOracle matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConstructionError("matroid descriptor needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "uniform") return uniform_matroid(j.at("n").get<std::size_t>(), j.at("r").get<std::size_t>());
    if (kind == "free") return free_matroid(j.at("n").get<std::size_t>());
    if (kind == "partition") {
      auto blocks = j.at("blocks").get<std::vector<std::vector<Element>>>();
      for (auto& b : blocks) b = make_set(b);
      return partition_matroid(std::move(blocks), j.at("capacities").get<std::vector<std::size_t>>());
    }
    if (kind == "graphic") {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ConstructionError("graphic edge must be [u, v]");
        edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
      }
      return graphic_matroid(j.at("vertices").get<std::size_t>(), std::move(edges));
    }
    if (kind == "linear") {
      return linear_matroid(j.at("field_prime").get<std::uint64_t>(),
                            j.at("columns").get<std::vector<std::vector<std::int64_t>>>());
    }
    if (kind == "union") {
      std::vector<MatroidOracle> parts;
      for (const auto& p : j.at("parts")) {
        parts.push_back(shift(matroid_from_json(p.at("matroid")), p.at("offset").get<Element>()));
      }
      return matroid_union(parts);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConstructionError("bad " + kind + " matroid descriptor: " + ex.what());
  }
  throw ConstructionError("unknown matroid kind '" + kind + "'");
}

}  // namespace mpls
