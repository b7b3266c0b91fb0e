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

// Exhaustive optimum and the checks that compare solver output against it.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpls/errors.hpp"
#include "mpls/instance.hpp"
#include "mpls/rational.hpp"
#include "mpls/sliding.hpp"

namespace mpls {

enum class ExactMethod { subset_enum, branch_and_bound };

inline std::string exact_method_name(ExactMethod m) {
  return m == ExactMethod::subset_enum ? "subset-enum" : "branch-and-bound";
}

inline constexpr std::size_t default_exact_limit(ExactMethod m) { return m == ExactMethod::subset_enum ? 14 : 20; }

/// MPLS_EXACT_LIMIT, when set to a positive integer.
inline std::optional<std::size_t> exact_limit_from_env() {
  const char* raw = std::getenv("MPLS_EXACT_LIMIT");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw ConstructionError("MPLS_EXACT_LIMIT must be a positive integer");
  return static_cast<std::size_t>(v);
}

struct ExactOptions {
  ExactMethod method = ExactMethod::branch_and_bound;
  std::optional<std::size_t> limit;  // defaults: env, then per-method default
};

struct ExactResult {
  Solution optimum;
  std::uint64_t explored = 0;
  ExactMethod method = ExactMethod::branch_and_bound;
};

namespace detail {

inline ExactResult exact_subset_enum(const ParityInstance& inst) {
  const std::size_t n = inst.edge_count();
  ExactResult out{Solution{}, 0, ExactMethod::subset_enum};
  EdgeSet chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++out.explored;
    chosen.clear();
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1) chosen.push_back(static_cast<EdgeId>(e));
    }
    Weight w = inst.weight_of(chosen);
    if (w < out.optimum.weight) continue;
    if (w == out.optimum.weight && !(chosen < out.optimum.edges)) continue;
    if (!is_feasible(inst, chosen)) continue;
    out.optimum = Solution{chosen, std::move(w)};
  }
  return out;
}

// Include-first depth-first search. A node is visited when an edge is added,
// so nodes appear in lexicographic order of their sorted edge lists and a
// strict-improvement rule keeps the lexicographically smallest optimum.
class BranchAndBound {
 public:
  explicit BranchAndBound(const ParityInstance& inst) : inst_(inst), used_(inst.vertex_count(), 0) {
    suffix_.assign(inst.edge_count() + 1, 0);
    for (std::size_t e = inst.edge_count(); e-- > 0;) suffix_[e] = suffix_[e + 1] + inst.weight(e);
  }

  ExactResult run() {
    result_ = ExactResult{Solution{}, 1, ExactMethod::branch_and_bound};
    dfs(0);
    return std::move(result_);
  }

 private:
  void dfs(std::size_t from) {
    for (std::size_t e = from; e < inst_.edge_count(); ++e) {
      if (current_weight_ + suffix_[e] <= result_.optimum.weight) return;
      const auto& vs = inst_.edge(static_cast<EdgeId>(e)).verts;
      if (std::any_of(vs.begin(), vs.end(), [&](Element v) { return used_[v]; })) continue;
      verts_.insert(verts_.end(), vs.begin(), vs.end());
      ++result_.explored;
      if (inst_.matroid().independent_unchecked(verts_)) {
        for (Element v : vs) used_[v] = 1;
        chosen_.push_back(static_cast<EdgeId>(e));
        current_weight_ += inst_.weight(static_cast<EdgeId>(e));
        if (current_weight_ > result_.optimum.weight) result_.optimum = Solution{chosen_, current_weight_};
        dfs(e + 1);
        current_weight_ -= inst_.weight(static_cast<EdgeId>(e));
        chosen_.pop_back();
        for (Element v : vs) used_[v] = 0;
      }
      verts_.resize(verts_.size() - vs.size());
    }
  }

  const ParityInstance& inst_;
  std::vector<Weight> suffix_;
  std::vector<char> used_;
  std::vector<Element> verts_;
  EdgeSet chosen_;
  Weight current_weight_ = 0;
  ExactResult result_;
};

}  // namespace detail

/// Maximum-weight feasible edge set; ties go to the lexicographically
/// smallest sorted edge list. Works on overlapping instances too.
inline ExactResult brute_force_optimum(const ParityInstance& inst, const ExactOptions& options = {}) {
  std::size_t limit = default_exact_limit(options.method);
  if (options.limit) {
    limit = *options.limit;
  } else if (auto env = exact_limit_from_env()) {
    limit = *env;
  }
  if (options.method == ExactMethod::subset_enum) limit = std::min<std::size_t>(limit, 62);
  if (inst.edge_count() > limit) {
    throw SizeLimitError("exact solver: instance has " + std::to_string(inst.edge_count()) + " edges, limit is " +
                         std::to_string(limit) + " for " + exact_method_name(options.method));
  }
  if (options.method == ExactMethod::subset_enum) return detail::exact_subset_enum(inst);
  return detail::BranchAndBound(inst).run();
}

/// Re-enumerates every (A_{<=i}, I_i, I_i)-swap of every recorded interval
/// and reports whether none is improving. Structural mismatches between the
/// trace and the instance raise DomainError.
inline bool verify_local_optimum(const ParityInstance& inst, const SolverTrace& trace) {
  if (trace.edge_count != inst.edge_count()) {
    throw DomainError("trace was recorded on " + std::to_string(trace.edge_count) + " edges, instance has " +
                      std::to_string(inst.edge_count()));
  }
  if (!trace.scheme) {
    if (!trace.intervals.empty()) throw DomainError("trace has intervals but no marker scheme");
    return true;
  }
  const IntervalScheme& s = *trace.scheme;
  if (s.markers.size() != s.L + 2) throw DomainError("trace marker count does not match L");
  if (trace.intervals.size() != s.L + 1) throw DomainError("trace does not cover every interval");

  EdgeSet previous;
  for (std::size_t pos = 0; pos < trace.intervals.size(); ++pos) {
    const IntervalRecord& rec = trace.intervals[pos];
    const std::size_t i = pos + 1;
    if (rec.index != i) throw DomainError("trace intervals out of order");
    const WeightInterval I = s.interval(i);
    if (!(rec.bounds == I)) throw DomainError("trace interval bounds disagree with its markers");
    const EdgeSet& A = rec.solution;
    check_edge_ids(inst, A);
    if (!std::is_sorted(A.begin(), A.end()) || std::adjacent_find(A.begin(), A.end()) != A.end()) {
      throw DomainError("trace solution is not a sorted edge set");
    }
    if (!is_feasible(inst, A)) throw DomainError("trace solution at interval " + std::to_string(i) + " is infeasible");
    for (EdgeId e : A) {
      std::size_t cls = s.index_of(inst.weight(e));
      if (cls == 0 || cls > i) throw DomainError("trace solution holds an edge from a later interval");
    }
    EdgeSet kept;
    std::set_intersection(previous.begin(), previous.end(), A.begin(), A.end(), std::back_inserter(kept));
    if (kept != previous) throw DomainError("trace removed an edge chosen in an earlier interval");
    previous = A;

    std::vector<char> in_a(inst.edge_count(), 0);
    for (EdgeId e : A) in_a[e] = 1;
    EdgeSet outside_in_i, inside;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      if (!I.contains(inst.weight(e))) continue;
      (in_a[e] ? inside : outside_in_i).push_back(e);
    }

    std::vector<EdgeSet> adds;
    for (std::size_t a = 0; a < outside_in_i.size(); ++a) {
      adds.push_back({outside_in_i[a]});
      for (std::size_t b = a + 1; b < outside_in_i.size(); ++b) adds.push_back({outside_in_i[a], outside_in_i[b]});
    }
    const std::size_t cap = std::min(2 * inst.k(), inside.size());
    for (const EdgeSet& S : adds) {
      const Weight ws = inst.weight_of(S);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inside.size()); ++mask) {
        EdgeSet N, next;
        for (std::size_t j = 0; j < inside.size(); ++j) {
          if (mask >> j & 1) N.push_back(inside[j]);
        }
        if (N.size() > cap) continue;
        if (!(ws > inst.weight_of(N))) continue;
        std::set_difference(A.begin(), A.end(), N.begin(), N.end(), std::back_inserter(next));
        next.insert(next.end(), S.begin(), S.end());
        if (is_feasible(inst, next)) return false;
      }
    }
  }
  return true;
}

/// Tail weight w(O \ O_{<=L}) against delta w(O), where O_{<=L} holds the
/// optimum edges of weight at least m_L.
inline bool verify_tail_bound(const ParityInstance& inst, const IntervalScheme& scheme, const Solution& optimum) {
  check_edge_ids(inst, optimum.edges);
  const Weight& mL = scheme.markers.at(scheme.L);
  Weight tail = 0, total = 0;
  for (EdgeId e : optimum.edges) {
    total += inst.weight(e);
    if (inst.weight(e) < mL) tail += inst.weight(e);
  }
  return tail <= scheme.delta * total;
}

}  // namespace mpls
