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
 * @file exchange.hpp
 * @brief Exhaustive matroid exchange finders and the conflict-set
 *        construction used to audit sliding local search runs.
 *
 * Everything here is a search at small scale: exchanges are found by
 * backtracking, not by an efficient constructive algorithm.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mpls/errors.hpp"
#include "mpls/generators.hpp"
#include "mpls/instance.hpp"
#include "mpls/matroid.hpp"
#include "mpls/rational.hpp"
#include "mpls/sliding.hpp"

namespace mpls {

/// Parts S_1..S_m and disjoint T_1..T_m ⊆ T with |S_i| = |T_i| and
/// S_i ∪ (T \ T_i) independent.
struct ExchangeCertificate {
  std::vector<ElementSet> s_parts;
  std::vector<ElementSet> t_parts;
  ElementSet T;
  MatroidOracle matroid;
};

/// Re-checks every certificate condition with fresh oracle calls.
inline bool verify_exchange(const ExchangeCertificate& c) {
  if (c.s_parts.size() != c.t_parts.size()) return false;
  std::vector<Element> used;
  for (std::size_t i = 0; i < c.s_parts.size(); ++i) {
    const ElementSet& Ti = c.t_parts[i];
    if (Ti.size() != c.s_parts[i].size()) return false;
    if (!std::is_sorted(Ti.begin(), Ti.end()) || !is_subset(Ti, c.T)) return false;
    used.insert(used.end(), Ti.begin(), Ti.end());
    if (!c.matroid.is_independent(set_union(c.s_parts[i], set_difference(c.T, Ti)))) return false;
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

namespace detail {

inline ElementSet validate_exchange_input(const MatroidOracle& m, std::vector<ElementSet>& parts, ElementSet& T) {
  if (!m) throw DomainError("exchange: missing matroid");
  for (auto& p : parts) p = make_set(p);
  T = make_set(T);
  ElementSet S;
  std::size_t total = 0;
  for (const auto& p : parts) {
    S = set_union(S, p);
    total += p.size();
  }
  if (S.size() != total) throw DomainError("exchange: parts of S overlap");
  require_subset(m, S, "exchange");
  require_subset(m, T, "exchange");
  if (!m.is_independent(S)) throw DomainError("exchange: S is dependent");
  if (!m.is_independent(T)) throw DomainError("exchange: T is dependent");
  if (S.size() > T.size()) throw DomainError("exchange: |S| exceeds |T|");
  return S;
}

inline void spend(std::uint64_t& budget, std::uint64_t amount = 1) {
  if (budget < amount) throw SizeLimitError("exchange search exceeded its node budget");
  budget -= amount;
}

// One part: greedily extend S by elements of T \ S and keep |T| - |S| of
// them. The extension reaches r(S ∪ T) >= |T|, so this never fails when S and
// T are independent. The returned T_1 contains S ∩ T.
inline std::optional<ElementSet> single_part_exchange(const MatroidOracle& m, const ElementSet& S, const ElementSet& T,
                                                      std::uint64_t& budget) {
  const std::size_t keep_count = T.size() - S.size();
  ElementSet kept;
  std::vector<Element> grown(S.begin(), S.end());
  for (Element t : T) {
    if (kept.size() >= keep_count) break;
    if (std::binary_search(S.begin(), S.end(), t)) continue;
    spend(budget);
    grown.push_back(t);
    if (m.independent_unchecked(grown)) {
      kept.push_back(t);
    } else {
      grown.pop_back();
    }
  }
  if (kept.size() < keep_count) return std::nullopt;
  return set_difference(T, kept);
}

}  // namespace detail

/// Searches for disjoint T_1..T_m ⊆ T realizing the exchange for the given
/// partition of S. Empty when no assignment exists (which would contradict
/// the exchange theorem); SizeLimitError when `budget` oracle calls or
/// search nodes run out.
inline std::optional<ExchangeCertificate> find_rota_exchange(const MatroidOracle& m, std::vector<ElementSet> parts,
                                                             ElementSet T, std::uint64_t budget = 2'000'000) {
  const ElementSet S = detail::validate_exchange_input(m, parts, T);
  ExchangeCertificate cert{parts, std::vector<ElementSet>(parts.size()), T, m};

  std::vector<std::size_t> nonempty;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].empty()) nonempty.push_back(i);
  }
  if (nonempty.empty()) return cert;
  if (nonempty.size() == 1) {
    auto t = detail::single_part_exchange(m, S, T, budget);
    if (!t) return std::nullopt;
    cert.t_parts[nonempty[0]] = std::move(*t);
    return cert;
  }

  // candidates[i]: every X ⊆ T with |X| = |S_i| and S_i ∪ (T \ X) independent.
  std::vector<std::vector<ElementSet>> candidates(parts.size());
  for (std::size_t i : nonempty) {
    detail::for_each_combination(T.size(), parts[i].size(), [&](const std::vector<std::size_t>& pick) {
      detail::spend(budget);
      ElementSet X;
      for (std::size_t p : pick) X.push_back(T[p]);
      if (m.independent_unchecked(set_union(parts[i], set_difference(T, X)))) candidates[i].push_back(std::move(X));
      return false;
    });
    if (candidates[i].empty()) return std::nullopt;
  }
  std::sort(nonempty.begin(), nonempty.end(),
            [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });

  std::vector<char> taken(m.ground().universe(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == nonempty.size()) return true;
    const std::size_t part = nonempty[depth];
    for (const ElementSet& X : candidates[part]) {
      detail::spend(budget);
      if (std::any_of(X.begin(), X.end(), [&](Element e) { return taken[e]; })) continue;
      for (Element e : X) taken[e] = 1;
      cert.t_parts[part] = X;
      if (place(depth + 1)) return true;
      for (Element e : X) taken[e] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return cert;
}

/// Splits a known exchange N_S ⊆ T for S into per-part exchanges by
/// contracting T \ N_S and searching for an exchange between S and N_S. The
/// returned parts partition N_S. S must avoid T \ N_S.
inline ExchangeCertificate refine_laminar(const MatroidOracle& m, std::vector<ElementSet> parts, ElementSet T,
                                          ElementSet N_S, std::uint64_t budget = 2'000'000) {
  const ElementSet S = detail::validate_exchange_input(m, parts, T);
  N_S = make_set(N_S);
  if (!is_subset(N_S, T)) throw DomainError("refine_laminar: N_S is not a subset of T");
  if (N_S.size() != S.size()) throw DomainError("refine_laminar: |N_S| must equal |S|");
  const ElementSet rest = set_difference(T, N_S);
  if (!set_intersection(S, rest).empty()) throw DomainError("refine_laminar: S meets T \\ N_S");
  if (!m.is_independent(set_union(S, rest))) throw DomainError("refine_laminar: S ∪ (T \\ N_S) is dependent");

  auto found = find_rota_exchange(contract(m, rest), parts, N_S, budget);
  if (!found) throw InvariantViolation("refine_laminar: no refinement exists for a valid exchange");
  ExchangeCertificate cert{std::move(parts), std::move(found->t_parts), std::move(T), m};
  if (!verify_exchange(cert)) throw InvariantViolation("refine_laminar: refinement fails in the original matroid");
  return cert;
}

// ---------------------------------------------------------------------------
// Conflict sets

enum class ConflictClass {
  single,            // first blocked in its own interval i <= L, one vertex in T_i
  double_conflict,   // same, two or more vertices in T_i
  anterior_blocked,  // first blocked in an interval before its own
  tail_blocked,      // first blocked in the tail interval L+1, which is its own
  unblocked,         // never blocked; only allowed for zero weight
};

inline std::string conflict_class_name(ConflictClass c) {
  switch (c) {
    case ConflictClass::single: return "single";
    case ConflictClass::double_conflict: return "double";
    case ConflictClass::anterior_blocked: return "anterior-blocked";
    case ConflictClass::tail_blocked: return "tail-blocked";
    case ConflictClass::unblocked: return "unblocked";
  }
  return "?";
}

struct OptimumEdgeReport {
  EdgeId edge = 0;
  Weight weight;
  std::size_t interval = 0;                 // j with w_o in I_j
  std::optional<std::size_t> first_block;   // smallest i with v(o) ∩ T_i nonempty
  std::size_t conflicts = 0;                // |v(o) ∩ T_{first_block}|
  ConflictClass cls = ConflictClass::unblocked;
  Weight closest_marker;                    // m_o
  bool bad = false;
  ElementSet labels;                        // copies of v(o) in the audit matroid
};

/// Audit of one solver run against an optimum. The audit matroid has the
/// instance vertices 0..V-1, then a parallel copy of every optimum vertex,
/// then k coloops per zero-weight padding edge. T sets use copy labels.
struct ConflictTrace {
  MatroidOracle matroid;
  IntervalScheme scheme;
  Rational gamma;
  EdgeSet solution;                      // A
  Weight solution_weight;
  std::vector<ElementSet> added;         // v(A_i), i = 1..L+1 (index 0 unused, empty)
  std::vector<ElementSet> prefix;        // v(A_{<=i}), i = 0..L+1
  ElementSet o_hat;                      // copy labels of v(O) plus padding
  std::size_t padding_edges = 0;
  std::vector<ElementSet> T;             // T_0..T_{L+1}
  std::vector<OptimumEdgeReport> edges;  // one per optimum edge, padding excluded
};

namespace detail {

inline ConflictClass classify_conflict(std::size_t interval, std::optional<std::size_t> first_block,
                                       std::size_t conflicts, std::size_t L) {
  if (!first_block) return ConflictClass::unblocked;
  if (*first_block < interval) return ConflictClass::anterior_blocked;
  if (*first_block == L + 1) return ConflictClass::tail_blocked;
  return conflicts == 1 ? ConflictClass::single : ConflictClass::double_conflict;
}

inline void fill_edge_report(OptimumEdgeReport& r, const ConflictTrace& ct) {
  const std::size_t L = ct.scheme.L;
  r.interval = ct.scheme.index_of(r.weight);
  r.first_block.reset();
  r.conflicts = 0;
  for (std::size_t i = 1; i <= L + 1; ++i) {
    std::size_t hit = set_intersection(r.labels, ct.T[i]).size();
    if (hit > 0) {
      r.first_block = i;
      r.conflicts = hit;
      break;
    }
  }
  r.cls = classify_conflict(r.interval, r.first_block, r.conflicts, L);
  r.closest_marker = ct.scheme.closest_marker(r.weight);
  const bool near_marker = r.weight * (1 + ct.gamma) >= r.closest_marker;
  r.bad = near_marker && r.cls != ConflictClass::single && r.cls != ConflictClass::double_conflict;
}

}  // namespace detail

/// Builds nested sets T_0 ⊆ ... ⊆ T_{L+1} ⊆ Ô for a completed run: T_i adds
/// to T_{i-1} an exchange for v(A_i) inside Ô \ T_{i-1}, taken in the audit
/// matroid contracted on v(A_{<=i-1}). Then classifies every optimum edge.
inline ConflictTrace build_conflict_trace(const ParityInstance& inst, const SolverTrace& trace, const Solution& optimum,
                                          const Rational& gamma, std::uint64_t budget = 2'000'000) {
  detail::require_disjoint(inst);
  if (!trace.scheme) throw PreconditionError("conflict trace: solver trace has no marker scheme");
  if (trace.truncated) throw PreconditionError("conflict trace: solver trace is truncated");
  if (trace.edge_count != inst.edge_count()) throw DomainError("conflict trace: trace does not match instance");
  if (gamma < 0) throw PreconditionError("conflict trace: gamma must be nonnegative");
  check_edge_ids(inst, optimum.edges);
  if (!is_feasible(inst, optimum.edges)) throw PreconditionError("conflict trace: optimum is infeasible");

  const IntervalScheme& scheme = *trace.scheme;
  const std::size_t L = scheme.L;
  if (trace.intervals.size() != L + 1) throw DomainError("conflict trace: trace does not cover every interval");

  ConflictTrace ct;
  ct.scheme = scheme;
  ct.gamma = gamma;
  ct.solution = trace.intervals.back().solution;
  ct.solution_weight = inst.weight_of(ct.solution);

  const std::size_t V = inst.vertex_count();
  std::vector<Element> origin(V);
  std::iota(origin.begin(), origin.end(), Element{0});
  for (EdgeId o : optimum.edges) {
    OptimumEdgeReport r;
    r.edge = o;
    r.weight = inst.weight(o);
    for (Element v : inst.edge(o).verts) {
      r.labels.push_back(static_cast<Element>(origin.size()));
      origin.push_back(v);
    }
    ct.o_hat.insert(ct.o_hat.end(), r.labels.begin(), r.labels.end());
    ct.edges.push_back(std::move(r));
  }
  const std::size_t copies_end = origin.size();
  MatroidOracle audit = project(inst.matroid(), std::move(origin));

  std::size_t a_vertices = 0;
  for (EdgeId e : ct.solution) a_vertices += inst.edge(e).verts.size();
  const std::size_t o_vertices = ct.o_hat.size();
  if (a_vertices > o_vertices) ct.padding_edges = (a_vertices - o_vertices + inst.k() - 1) / inst.k();
  if (ct.padding_edges > 0) {
    const std::size_t coloops = ct.padding_edges * inst.k();
    audit = matroid_union({audit, shift(free_matroid(coloops), static_cast<Element>(copies_end))});
    for (std::size_t c = 0; c < coloops; ++c) ct.o_hat.push_back(static_cast<Element>(copies_end + c));
  }
  ct.matroid = audit;

  ct.added.assign(L + 2, {});
  ct.prefix.assign(L + 2, {});
  for (std::size_t i = 1; i <= L + 1; ++i) {
    const IntervalRecord& rec = trace.intervals[i - 1];
    ct.added[i] = make_set(inst.vertices_of(rec.added));
    ct.prefix[i] = make_set(inst.vertices_of(rec.solution));
  }

  ct.T.assign(L + 2, {});
  for (std::size_t i = 1; i <= L + 1; ++i) {
    ct.T[i] = ct.T[i - 1];
    if (ct.added[i].empty()) continue;
    const MatroidOracle contracted = contract(audit, ct.prefix[i - 1]);
    auto cert = find_rota_exchange(contracted, {ct.added[i]}, set_difference(ct.o_hat, ct.T[i - 1]), budget);
    if (!cert) throw InvariantViolation("conflict trace: no exchange for interval " + std::to_string(i));
    ct.T[i] = set_union(ct.T[i], cert->t_parts[0]);
  }

  for (auto& r : ct.edges) detail::fill_edge_report(r, ct);
  return ct;
}

inline Weight singles_weight(const ConflictTrace& ct) {
  Weight total = 0;
  for (const auto& r : ct.edges) {
    if (r.cls == ConflictClass::single) total += r.weight;
  }
  return total;
}

struct ConflictCheck {
  bool nested = true;        // T_{i-1} ⊆ T_i ⊆ Ô
  bool independent = true;   // v(A_{<=i}) ∪ (Ô \ T_i) independent
  bool growth = true;        // |T_i \ T_{i-1}| = |v(A_i)|
  bool blocking = true;      // positive-weight o in I_j meets some T_i, i <= j
  bool partition = true;     // stored classes match a recomputation
  bool singles_bound = true; // w(O_s) <= w(A)

  bool ok() const { return nested && independent && growth && blocking && partition && singles_bound; }
};

/// Re-derives every invariant of a conflict trace with fresh oracle calls.
inline ConflictCheck verify_conflict_trace(const ConflictTrace& ct) {
  ConflictCheck c;
  const std::size_t L = ct.scheme.L;
  if (ct.T.size() != L + 2 || ct.prefix.size() != L + 2 || ct.added.size() != L + 2) {
    throw DomainError("conflict trace: inconsistent interval count");
  }
  c.nested = ct.T[0].empty();
  for (std::size_t i = 0; i <= L + 1; ++i) {
    if (!is_subset(ct.T[i], ct.o_hat)) c.nested = false;
    if (i > 0 && !is_subset(ct.T[i - 1], ct.T[i])) c.nested = false;
    if (i > 0 && set_difference(ct.T[i], ct.T[i - 1]).size() != ct.added[i].size()) c.growth = false;
    if (!ct.matroid.is_independent(set_union(ct.prefix[i], set_difference(ct.o_hat, ct.T[i])))) c.independent = false;
  }
  for (const auto& r : ct.edges) {
    if (r.weight > 0) {
      const std::size_t j = ct.scheme.index_of(r.weight);
      bool met = false;
      for (std::size_t i = 1; i <= j && !met; ++i) met = !set_intersection(r.labels, ct.T[i]).empty();
      if (!met) c.blocking = false;
    }
    OptimumEdgeReport again = r;
    detail::fill_edge_report(again, ct);
    if (again.cls != r.cls || again.first_block != r.first_block || again.conflicts != r.conflicts ||
        again.bad != r.bad || again.closest_marker != r.closest_marker) {
      c.partition = false;
    }
  }
  c.singles_bound = singles_weight(ct) <= ct.solution_weight;
  return c;
}

// ---------------------------------------------------------------------------
// Marker proximity

struct BadFrequency {
  EdgeId edge = 0;
  Weight weight;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double frequency() const { return samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0; }
};

/// gamma / (eps (1 + gamma)).
inline Rational bad_probability_bound(const Rational& epsilon, const Rational& gamma) {
  return gamma / (epsilon * (1 + gamma));
}

/// For each optimum edge, the fraction of tau draws (tau = eps * u, u from
/// the seeded stream) with w_o >= m_o / (1 + gamma).
inline std::vector<BadFrequency> estimate_bad_probability(const ParityInstance& inst, const Solution& optimum,
                                                          const Rational& epsilon, const Rational& gamma,
                                                          std::uint64_t samples, std::uint64_t seed,
                                                          const Rational& delta = Rational(1, 10000)) {
  if (!(epsilon > 0 && epsilon < Rational(1, 2))) throw PreconditionError("epsilon must lie in (0, 1/2)");
  if (gamma < 0 || gamma > 1 / (1 - epsilon) - 1) {
    throw PreconditionError("gamma must lie in [0, 1/(1-eps) - 1]");
  }
  check_edge_ids(inst, optimum.edges);
  std::vector<BadFrequency> out;
  for (EdgeId o : optimum.edges) out.push_back(BadFrequency{o, inst.weight(o), 0, samples});
  const auto W = max_feasible_weight(inst);
  if (!W || *W == 0) return out;

  // Markers divided by W(1 - tau) do not depend on tau:
  // 1/(1-eps), 1, (1-eps), ..., (1-eps)^(L-1).
  const std::size_t L = interval_count(inst.edge_count(), epsilon, delta);
  std::vector<Rational> unit_markers{1 / (1 - epsilon)};
  Rational p = 1;
  for (std::size_t j = 1; j <= L; ++j) {
    unit_markers.push_back(p);
    p *= 1 - epsilon;
  }
  Rng rng(seed);
  Rational r;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Rational scale = *W * (1 - tau_from_bits(epsilon, rng.next()));
    for (auto& f : out) {
      if (f.weight == 0) continue;
      r = f.weight / scale;
      std::size_t j = 0;
      while (j + 1 < unit_markers.size() && unit_markers[j + 1] >= r) ++j;
      if (r * (1 + gamma) >= unit_markers[j]) ++f.hits;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random exchange inputs

struct ExchangeCase {
  MatroidFamily family = MatroidFamily::uniform;
  MatroidOracle matroid;
  std::vector<ElementSet> parts;  // partition of S
  ElementSet T;
};

/// Random matroid on `n` elements, independent T, independent S with
/// |S| <= |T| (S may meet T), and a random partition of S.
inline ExchangeCase random_exchange_case(Rng& rng, MatroidFamily family, std::size_t n) {
  ExchangeCase c;
  c.family = family;
  c.matroid = random_matroid(rng, family, n);
  const ElementSet& ground = c.matroid.ground().elements();
  c.T = random_independent(rng, c.matroid, ground, rng.between(0, n));
  const ElementSet S = random_independent(rng, c.matroid, ground, rng.between(0, c.T.size()));
  const std::size_t count = S.empty() ? 1 : rng.between(1, S.size());
  c.parts.assign(count, {});
  for (Element e : S) c.parts[rng.below(count)].push_back(e);
  std::erase_if(c.parts, [](const ElementSet& p) { return p.empty(); });
  return c;
}

// ---------------------------------------------------------------------------
// K4 witness

struct K4Witness {
  ParityInstance instance;
  Solution base;  // the current solution A
  SwapMove first;
  SwapMove second;
};

/// Graphic matroid of K4 as a 1-parity instance with unit weights, a
/// spanning tree A, and two swaps that are each feasible from A while their
/// union is not. Found by exhaustive search, smallest swaps first.
inline K4Witness k4_non_composability_witness() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> graph;
  for (std::uint32_t u = 0; u < 4; ++u) {
    for (std::uint32_t v = u + 1; v < 4; ++v) graph.emplace_back(u, v);
  }
  std::vector<Hyperedge> edges;
  for (Element e = 0; e < 6; ++e) edges.push_back(Hyperedge{{e}, 1});
  ParityInstance inst(1, 6, std::move(edges), graphic_matroid(4, graph));

  auto apply = [](const EdgeSet& A, const EdgeSet& add, const EdgeSet& remove) {
    EdgeSet out;
    std::set_difference(A.begin(), A.end(), remove.begin(), remove.end(), std::back_inserter(out));
    out.insert(out.end(), add.begin(), add.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto subsets = [](const EdgeSet& pool, std::size_t max_size) {
    std::vector<EdgeSet> out;
    for (std::size_t t = 1; t <= max_size; ++t) {
      detail::for_each_combination(pool.size(), t, [&](const std::vector<std::size_t>& pick) {
        EdgeSet s;
        for (std::size_t p : pick) s.push_back(pool[p]);
        out.push_back(std::move(s));
        return false;
      });
    }
    return out;
  };
  auto disjoint = [](const EdgeSet& a, const EdgeSet& b) {
    EdgeSet x;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(x));
    return x.empty();
  };

  const EdgeSet all{0, 1, 2, 3, 4, 5};
  for (const EdgeSet& A : subsets(all, 3)) {
    if (A.size() != 3 || !is_feasible(inst, A)) continue;
    EdgeSet outside;
    std::set_difference(all.begin(), all.end(), A.begin(), A.end(), std::back_inserter(outside));
    const auto adds = subsets(outside, 2);
    const auto removes = subsets(A, 2);
    for (const auto& S1 : adds) {
      for (const auto& N1 : removes) {
        if (!is_feasible(inst, apply(A, S1, N1))) continue;
        for (const auto& S2 : adds) {
          if (!disjoint(S1, S2)) continue;
          for (const auto& N2 : removes) {
            if (!disjoint(N1, N2) || !is_feasible(inst, apply(A, S2, N2))) continue;
            EdgeSet S = S1, N = N1;
            S.insert(S.end(), S2.begin(), S2.end());
            N.insert(N.end(), N2.begin(), N2.end());
            std::sort(S.begin(), S.end());
            std::sort(N.begin(), N.end());
            if (is_feasible(inst, apply(A, S, N))) continue;
            auto gain = [&](const EdgeSet& add, const EdgeSet& rem) -> Weight {
              return inst.weight_of(add) - inst.weight_of(rem);
            };
            return K4Witness{inst, make_solution(inst, A), SwapMove{S1, N1, gain(S1, N1)},
                             SwapMove{S2, N2, gain(S2, N2)}};
          }
        }
      }
    }
  }
  throw InvariantViolation("K4 witness search found no non-composable pair");
}

}  // namespace mpls
