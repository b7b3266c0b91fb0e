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
 * @file sliding.hpp
 * @brief Sliding local search for weighted matroid k-parity.
 *
 * The weight range [0, W] is cut into geometric classes by randomly shifted
 * markers
 *
 *     m_0 = W(1 - tau) / (1 - eps),   m_j = W(1 - eps)^(j-1) (1 - tau),  j = 1..L,
 *     m_{L+1} = 0,
 *
 * with I_j = (m_j, m_{j-1}] for j <= L and I_{L+1} = [0, m_L]. Local search
 * then runs class by class in decreasing weight order. Within class I it
 * applies improving swaps (S, N): at most 2 new edges of I in, at most 2k
 * solution edges of I out, w(S) > w(N). Edges chosen in earlier classes are
 * never removed.
 *
 * All arithmetic on weights and markers is exact.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mpls/errors.hpp"
#include "mpls/generators.hpp"
#include "mpls/instance.hpp"
#include "mpls/rational.hpp"

namespace mpls {

enum class SwapRule { first_lex, best_gain };

inline std::string swap_rule_name(SwapRule r) { return r == SwapRule::first_lex ? "first-lex" : "best-gain"; }

inline SwapRule parse_swap_rule(std::string_view s) {
  if (s == "first-lex") return SwapRule::first_lex;
  if (s == "best-gain") return SwapRule::best_gain;
  throw ConstructionError("unknown swap rule '" + std::string(s) + "'");
}

/// (lo, hi], or [lo, hi] when lo_closed.
struct WeightInterval {
  Weight lo;
  Weight hi;
  bool lo_closed = false;

  bool contains(const Weight& w) const { return (lo_closed ? w >= lo : w > lo) && w <= hi; }
  friend bool operator==(const WeightInterval& a, const WeightInterval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed;
  }
};

/// Number of classes above the tail: ceil(-log_{1-eps}(edges / delta)) + 1,
/// evaluated exactly as 1 + min{ j >= 0 : (1 - eps)^j <= delta / edges }.
inline std::size_t interval_count(std::size_t edges, const Rational& epsilon, const Rational& delta) {
  const Rational target = delta / Rational(static_cast<long>(std::max<std::size_t>(edges, 1)));
  const Rational ratio = 1 - epsilon;
  Rational power = 1;
  std::size_t j = 0;
  while (power > target) {
    power *= ratio;
    ++j;
  }
  return j + 1;
}

struct IntervalScheme {
  Weight W;
  Rational epsilon;
  Rational delta;
  Rational tau;
  std::size_t L = 0;
  std::vector<Weight> markers;  // m_0 .. m_{L+1}

  /// I_j for j in 1..L+1.
  WeightInterval interval(std::size_t j) const {
    if (j < 1 || j > L + 1) throw DomainError("interval index " + std::to_string(j) + " out of range");
    return WeightInterval{markers[j], markers[j - 1], j == L + 1};
  }

  /// Class of weight w (1..L+1), or 0 when w exceeds m_0.
  std::size_t index_of(const Weight& w) const {
    if (w > markers[0]) return 0;
    for (std::size_t j = 1; j <= L; ++j) {
      if (w > markers[j]) return j;
    }
    return L + 1;
  }

  /// Smallest positive marker that is >= w.
  const Weight& closest_marker(const Weight& w) const {
    if (w > markers[0]) throw DomainError("weight above the top marker");
    std::size_t j = 0;
    while (j + 1 <= L && markers[j + 1] >= w) ++j;
    return markers[j];
  }
};

inline void check_scheme_params(const Rational& epsilon, const Rational& delta, const Rational& tau) {
  if (!(epsilon > 0 && epsilon < Rational(1, 2))) throw PreconditionError("epsilon must lie in (0, 1/2)");
  if (!(delta > 0 && delta < 1)) throw PreconditionError("delta must lie in (0, 1)");
  if (!(tau >= 0 && tau < epsilon)) throw PreconditionError("tau must lie in [0, epsilon)");
}

/// m_0 = W(1 - tau) / (1 - eps), m_j = W(1 - eps)^{j-1}(1 - tau) for j in
/// 1..L, m_{L+1} = 0. No range checks on the parameters.
inline std::vector<Weight> marker_values(const Weight& W, std::size_t L, const Rational& epsilon,
                                         const Rational& tau) {
  std::vector<Weight> markers;
  markers.reserve(L + 2);
  const Weight top = W * (1 - tau);
  markers.push_back(top / (1 - epsilon));
  Weight m = top;
  for (std::size_t j = 1; j <= L; ++j) {
    markers.push_back(m);
    m *= (1 - epsilon);
  }
  markers.push_back(0);
  return markers;
}

/// Markers for a given top weight W over an instance with `edges` edges.
inline IntervalScheme make_scheme(const Weight& W, std::size_t edges, const Rational& epsilon, const Rational& delta,
                                  const Rational& tau) {
  check_scheme_params(epsilon, delta, tau);
  IntervalScheme s{W, epsilon, delta, tau, interval_count(edges, epsilon, delta), {}};
  s.markers = marker_values(W, s.L, epsilon, tau);
  return s;
}

/// max { w(e) : v(e) independent }, or nothing when no edge is feasible alone.
inline std::optional<Weight> max_feasible_weight(const ParityInstance& inst) {
  std::optional<Weight> best;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const auto& edge = inst.edge(e);
    if (best && edge.weight <= *best) continue;
    if (inst.matroid().independent_unchecked(edge.verts)) best = edge.weight;
  }
  return best;
}

/// Empty result signals a degenerate instance (no edge is feasible on its own).
inline std::optional<IntervalScheme> compute_markers(const ParityInstance& inst, const Rational& epsilon,
                                                     const Rational& delta, const Rational& tau) {
  check_scheme_params(epsilon, delta, tau);
  if (inst.edge_count() == 0) return std::nullopt;
  auto W = max_feasible_weight(inst);
  if (!W) return std::nullopt;
  return make_scheme(*W, inst.edge_count(), epsilon, delta, tau);
}

/// tau = eps * u with u uniform on [0, 1) at 53-bit resolution.
inline Rational tau_from_bits(const Rational& epsilon, std::uint64_t bits) { return epsilon * unit_from_bits(bits); }

inline Rational draw_tau(const Rational& epsilon, std::uint64_t seed) {
  Rng rng(seed);
  return tau_from_bits(epsilon, rng.next());
}

struct SwapMove {
  EdgeSet add;     // S, |S| <= 2
  EdgeSet remove;  // N, |N| <= 2k
  Weight gain;     // w(S) - w(N)

  friend bool operator==(const SwapMove& a, const SwapMove& b) {
    return a.add == b.add && a.remove == b.remove && a.gain == b.gain;
  }
};

struct SolverOptions {
  SwapRule rule = SwapRule::first_lex;
  /// Stop each interval after this many applied swaps (used to produce
  /// deliberately unconverged traces).
  std::optional<std::size_t> max_swaps_per_interval;
};

struct IntervalRecord {
  std::size_t index = 0;
  WeightInterval bounds;
  EdgeSet added;     // A_i: solution edges lying in this interval
  EdgeSet solution;  // A_{<=i}
  std::vector<SwapMove> swaps;
  std::uint64_t oracle_calls = 0;
  bool truncated = false;
};

struct SolverTrace {
  std::uint64_t seed = 0;
  std::size_t edge_count = 0;
  std::optional<IntervalScheme> scheme;  // empty for degenerate instances
  std::vector<IntervalRecord> intervals;
  std::uint64_t oracle_calls = 0;
  std::size_t swaps = 0;
  bool truncated = false;
};

struct SlidingResult {
  Solution solution;
  SolverTrace trace;
};

namespace detail {

/// Calls f(indices) for every t-subset of [0, n) in lexicographic order; stops when f returns true.
template <class F>
bool for_each_combination(std::size_t n, std::size_t t, F&& f) {
  if (t > n) return false;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    if (f(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    if (t == 0) return false;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void require_disjoint(const ParityInstance& inst) {
  if (!inst.is_disjoint()) throw PreconditionError("solver requires a disjoint instance (apply make_disjoint)");
}

}  // namespace detail

/// Searches for an improving (A, I, I)-swap. S ranges over edges outside A
/// with weight in I (all singletons in edge-id order, then all pairs in
/// lexicographic order); for each S, N ranges over subsets of A ∩ I of size
/// 0..2k, smallest first, lexicographic within a size. first-lex returns the
/// first improving feasible pair; best-gain returns one of maximum gain,
/// earliest in that order on ties.
inline std::optional<SwapMove> find_improving_swap(const ParityInstance& inst, const EdgeSet& A,
                                                   const WeightInterval& I, SwapRule rule = SwapRule::first_lex,
                                                   std::uint64_t* calls = nullptr) {
  detail::require_disjoint(inst);
  check_edge_ids(inst, A);
  const MatroidOracle& matroid = inst.matroid();
  std::uint64_t local_calls = 0;
  auto independent = [&](const std::vector<Element>& verts) {
    ++local_calls;
    return matroid.independent_unchecked(verts);
  };

  std::vector<char> in_solution(inst.edge_count(), 0);
  for (EdgeId e : A) in_solution[e] = 1;
  EdgeSet inside, candidates;
  std::vector<Element> base;  // v(A \ I)
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const bool in_interval = I.contains(inst.weight(e));
    if (in_solution[e]) {
      if (in_interval) {
        inside.push_back(e);
      } else {
        const auto& vs = inst.edge(e).verts;
        base.insert(base.end(), vs.begin(), vs.end());
      }
    } else if (in_interval) {
      candidates.push_back(e);
    }
  }

  const std::size_t max_removed = std::min(2 * inst.k(), inside.size());
  std::optional<SwapMove> best;
  std::vector<Element> verts;
  EdgeSet S;

  auto try_add_set = [&](const std::vector<std::size_t>& pick) -> bool {
    S.clear();
    Weight add_weight = 0;
    for (std::size_t p : pick) {
      S.push_back(candidates[p]);
      add_weight += inst.weight(candidates[p]);
    }
    if (add_weight <= 0) return false;

    auto push_added = [&] {
      for (EdgeId e : S) {
        const auto& vs = inst.edge(e).verts;
        verts.insert(verts.end(), vs.begin(), vs.end());
      }
    };
    // Necessary condition: S must fit next to A \ I even with all of A ∩ I removed.
    if (!inside.empty()) {
      verts = base;
      push_added();
      if (!independent(verts)) return false;
    }

    std::vector<char> removed(inside.size(), 0);
    for (std::size_t t = 0; t <= max_removed; ++t) {
      bool stop = detail::for_each_combination(inside.size(), t, [&](const std::vector<std::size_t>& drop) {
        Weight remove_weight = 0;
        for (std::size_t d : drop) remove_weight += inst.weight(inside[d]);
        if (remove_weight >= add_weight) return false;
        Weight gain = add_weight - remove_weight;
        if (rule == SwapRule::best_gain && best && gain <= best->gain) return false;

        std::fill(removed.begin(), removed.end(), 0);
        for (std::size_t d : drop) removed[d] = 1;
        verts = base;
        for (std::size_t i = 0; i < inside.size(); ++i) {
          if (removed[i]) continue;
          const auto& vs = inst.edge(inside[i]).verts;
          verts.insert(verts.end(), vs.begin(), vs.end());
        }
        push_added();
        if (!independent(verts)) return false;

        EdgeSet N;
        for (std::size_t d : drop) N.push_back(inside[d]);
        best = SwapMove{S, std::move(N), std::move(gain)};
        return rule == SwapRule::first_lex;
      });
      if (stop) return true;
    }
    return false;
  };

  bool done = false;
  for (std::size_t size = 1; size <= 2 && !done; ++size) {
    done = detail::for_each_combination(candidates.size(), size, try_add_set);
  }
  if (calls) *calls += local_calls;
  return best;
}

inline Solution apply_swap(const Solution& A, const SwapMove& move) {
  EdgeSet next;
  std::set_difference(A.edges.begin(), A.edges.end(), move.remove.begin(), move.remove.end(),
                      std::back_inserter(next));
  next.insert(next.end(), move.add.begin(), move.add.end());
  std::sort(next.begin(), next.end());
  Weight w = A.weight + move.gain;
  return Solution{std::move(next), std::move(w)};
}

/// Applies improving (A, I, I)-swaps until none is left. Edges of A outside
/// I are never removed. When `record` is given, swaps and oracle calls are
/// appended to it.
inline Solution interval_local_search(const ParityInstance& inst, Solution A, const WeightInterval& I,
                                      const SolverOptions& options = {}, IntervalRecord* record = nullptr) {
  std::uint64_t calls = 0;
  std::size_t applied = 0;
  while (true) {
    if (options.max_swaps_per_interval && applied >= *options.max_swaps_per_interval) {
      if (record) record->truncated = true;
      break;
    }
    auto move = find_improving_swap(inst, A.edges, I, options.rule, &calls);
    if (!move) break;
    A = apply_swap(A, *move);
    ++calls;
    if (move->gain <= 0 || !inst.matroid().independent_unchecked(inst.vertices_of(A.edges))) {
      throw InvariantViolation("interval local search applied a non-improving or infeasible swap");
    }
    ++applied;
    if (record) record->swaps.push_back(std::move(*move));
  }
  if (record) record->oracle_calls += calls;
  return A;
}

/// Sliding local search with a fixed shift tau.
inline SlidingResult sliding_local_search_at(const ParityInstance& inst, const Rational& epsilon,
                                             const Rational& delta, const Rational& tau,
                                             const SolverOptions& options = {}) {
  check_scheme_params(epsilon, delta, tau);
  detail::require_disjoint(inst);
  SlidingResult result;
  result.trace.edge_count = inst.edge_count();
  auto scheme = compute_markers(inst, epsilon, delta, tau);
  result.trace.oracle_calls = inst.edge_count();  // max_feasible_weight
  if (!scheme || scheme->W == 0) return result;

  Solution A;
  for (std::size_t i = 1; i <= scheme->L + 1; ++i) {
    IntervalRecord rec;
    rec.index = i;
    rec.bounds = scheme->interval(i);
    A = interval_local_search(inst, std::move(A), rec.bounds, options, &rec);
    for (EdgeId e : A.edges) {
      if (rec.bounds.contains(inst.weight(e))) rec.added.push_back(e);
    }
    rec.solution = A.edges;
    result.trace.oracle_calls += rec.oracle_calls;
    result.trace.swaps += rec.swaps.size();
    result.trace.truncated = result.trace.truncated || rec.truncated;
    result.trace.intervals.push_back(std::move(rec));
  }
  result.trace.scheme = std::move(scheme);
  result.solution = std::move(A);
  return result;
}

/// Sliding local search; tau is drawn from Uniform[0, eps) using `seed`.
inline SlidingResult sliding_local_search(const ParityInstance& inst, const Rational& epsilon, const Rational& delta,
                                          std::uint64_t seed, const SolverOptions& options = {}) {
  if (!(epsilon > 0 && epsilon < Rational(1, 2))) throw PreconditionError("epsilon must lie in (0, 1/2)");
  auto result = sliding_local_search_at(inst, epsilon, delta, draw_tau(epsilon, seed), options);
  result.trace.seed = seed;
  return result;
}

/// Integer weights floor(M w(e)) with M = n / (eps_scale W), n = |E|.
/// Empty when W is 0 or no edge is feasible alone (nothing to scale).
inline std::optional<ParityInstance> scale_weights(const ParityInstance& inst, const Rational& eps_scale) {
  if (!(eps_scale > 0 && eps_scale < 1)) throw PreconditionError("scaling epsilon must lie in (0, 1)");
  auto W = max_feasible_weight(inst);
  if (!W || *W == 0) return std::nullopt;
  const Rational M = Rational(static_cast<long>(inst.edge_count())) / (eps_scale * *W);
  std::vector<Hyperedge> edges = inst.edges();
  for (auto& e : edges) e.weight = floor_rational(M * e.weight);
  return ParityInstance(inst.k(), inst.vertex_count(), std::move(edges), inst.matroid());
}

/// Decreasing weight (ties by id), keeping every edge that stays feasible.
inline Solution greedy(const ParityInstance& inst) {
  EdgeSet order(inst.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return inst.weight(a) > inst.weight(b); });
  std::vector<char> used(inst.vertex_count(), 0);
  std::vector<Element> verts;
  EdgeSet chosen;
  for (EdgeId e : order) {
    const auto& vs = inst.edge(e).verts;
    if (std::any_of(vs.begin(), vs.end(), [&](Element v) { return used[v]; })) continue;
    verts.insert(verts.end(), vs.begin(), vs.end());
    if (inst.matroid().independent_unchecked(verts)) {
      for (Element v : vs) used[v] = 1;
      chosen.push_back(e);
    } else {
      verts.resize(verts.size() - vs.size());
    }
  }
  return make_solution(inst, std::move(chosen));
}

struct BestOfRuns {
  Solution best;
  std::size_t best_run = 0;
  std::vector<SlidingResult> runs;
  std::uint64_t oracle_calls = 0;
};

/// `runs` independent sliding runs (run r uses derive_seed(seed, r)); keeps
/// the heaviest result, lowest run index on ties. Runs share the immutable
/// instance and execute on up to `threads` workers (0: hardware concurrency).
inline BestOfRuns best_of_runs(const ParityInstance& inst, const Rational& epsilon, const Rational& delta,
                               std::size_t runs, std::uint64_t seed, const SolverOptions& options = {},
                               std::size_t threads = 0) {
  if (runs < 1) throw PreconditionError("best_of_runs needs at least one run");
  BestOfRuns out;
  out.runs.resize(runs);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, runs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        out.runs[r] = sliding_local_search(inst, epsilon, delta, derive_seed(seed, r), options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t r = 0; r < runs; ++r) {
    out.oracle_calls += out.runs[r].trace.oracle_calls;
    if (r == 0 || out.runs[r].solution.weight > out.best.weight) {
      out.best = out.runs[r].solution;
      out.best_run = r;
    }
  }
  return out;
}

/// End-to-end configuration used by the CLI and the benchmark harness.
struct SlidingConfig {
  Rational epsilon{3873, 10000};
  Rational delta{1, 10000};
  std::uint64_t seed = 0;
  std::size_t runs = 1;
  bool scale = true;
  Rational scale_epsilon{1, 10};
  SolverOptions options;
  std::size_t threads = 0;
};

struct SlidingReport {
  Solution solution;  // weights of the input instance
  BestOfRuns detail;  // on the instance actually searched (scaled or not)
  bool scaled = false;
  Rational tau;       // of the best run
  std::size_t swaps = 0;
};

/// Optionally rescales weights, runs best-of-runs, and reports the chosen
/// edges with their original weights.
inline SlidingReport solve_sliding(const ParityInstance& inst, const SlidingConfig& config) {
  SlidingReport report;
  std::optional<ParityInstance> scaled;
  if (config.scale) scaled = scale_weights(inst, config.scale_epsilon);
  const ParityInstance& target = scaled ? *scaled : inst;
  report.scaled = scaled.has_value();
  report.detail = best_of_runs(target, config.epsilon, config.delta, config.runs, config.seed, config.options,
                               config.threads);
  report.solution = make_solution(inst, report.detail.best.edges);
  const auto& best_trace = report.detail.runs[report.detail.best_run].trace;
  if (best_trace.scheme) report.tau = best_trace.scheme->tau;
  report.swaps = best_trace.swaps;
  return report;
}

// ---------------------------------------------------------------------------
// Trace serialization

inline nlohmann::json interval_to_json(const WeightInterval& I) {
  return {{"lo", format_rational(I.lo)}, {"hi", format_rational(I.hi)}, {"lo_closed", I.lo_closed}};
}

inline WeightInterval interval_from_json(const nlohmann::json& j) {
  return WeightInterval{parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>()),
                        j.at("lo_closed").get<bool>()};
}

inline nlohmann::json trace_to_json(const SolverTrace& t) {
  nlohmann::json j;
  j["seed"] = t.seed;
  j["edge_count"] = t.edge_count;
  j["oracle_calls"] = t.oracle_calls;
  j["swaps"] = t.swaps;
  j["truncated"] = t.truncated;
  if (t.scheme) {
    const auto& s = *t.scheme;
    nlohmann::json markers = nlohmann::json::array();
    for (const auto& m : s.markers) markers.push_back(format_rational(m));
    j["scheme"] = {{"W", format_rational(s.W)},         {"epsilon", format_rational(s.epsilon)},
                   {"delta", format_rational(s.delta)}, {"tau", format_rational(s.tau)},
                   {"L", s.L},                          {"markers", markers}};
  } else {
    j["scheme"] = nullptr;
  }
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& r : t.intervals) {
    nlohmann::json swaps = nlohmann::json::array();
    for (const auto& m : r.swaps) {
      swaps.push_back({{"add", m.add}, {"remove", m.remove}, {"gain", format_rational(m.gain)}});
    }
    intervals.push_back({{"index", r.index},
                         {"bounds", interval_to_json(r.bounds)},
                         {"added", r.added},
                         {"solution", r.solution},
                         {"swaps", swaps},
                         {"oracle_calls", r.oracle_calls},
                         {"truncated", r.truncated}});
  }
  j["intervals"] = intervals;
  return j;
}

inline SolverTrace trace_from_json(const nlohmann::json& j) {
  try {
    SolverTrace t;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.edge_count = j.at("edge_count").get<std::size_t>();
    t.oracle_calls = j.at("oracle_calls").get<std::uint64_t>();
    t.swaps = j.at("swaps").get<std::size_t>();
    t.truncated = j.at("truncated").get<bool>();
    if (!j.at("scheme").is_null()) {
      const auto& s = j.at("scheme");
      IntervalScheme scheme;
      scheme.W = parse_rational(s.at("W").get<std::string>());
      scheme.epsilon = parse_rational(s.at("epsilon").get<std::string>());
      scheme.delta = parse_rational(s.at("delta").get<std::string>());
      scheme.tau = parse_rational(s.at("tau").get<std::string>());
      scheme.L = s.at("L").get<std::size_t>();
      for (const auto& m : s.at("markers")) scheme.markers.push_back(parse_rational(m.get<std::string>()));
      t.scheme = std::move(scheme);
    }
    for (const auto& r : j.at("intervals")) {
      IntervalRecord rec;
      rec.index = r.at("index").get<std::size_t>();
      rec.bounds = interval_from_json(r.at("bounds"));
      rec.added = r.at("added").get<EdgeSet>();
      rec.solution = r.at("solution").get<EdgeSet>();
      for (const auto& m : r.at("swaps")) {
        rec.swaps.push_back(SwapMove{m.at("add").get<EdgeSet>(), m.at("remove").get<EdgeSet>(),
                                     parse_rational(m.at("gain").get<std::string>())});
      }
      rec.oracle_calls = r.at("oracle_calls").get<std::uint64_t>();
      rec.truncated = r.at("truncated").get<bool>();
      t.intervals.push_back(std::move(rec));
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed solver trace: ") + ex.what());
  }
}

}  // namespace mpls
