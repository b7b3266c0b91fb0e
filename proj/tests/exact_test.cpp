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

#include <gtest/gtest.h>

#include <cstdlib>

#include "mpls/mpls.hpp"
#include "reference.hpp"

namespace {

using namespace mpls;

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

ParityInstance trap(std::size_t k, const Rational& rho) {
  GenParams p;
  p.family = Family::greedy_trap;
  p.k = k;
  p.rho = rho;
  return generate(p, 0);
}

ParityInstance free_singletons(const std::vector<Weight>& w) {
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < w.size(); ++i) edges.push_back({{static_cast<Element>(i)}, w[i]});
  return ParityInstance(1, w.size(), std::move(edges), free_matroid(w.size()));
}

/// Sets an environment variable for one scope.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_) {
      ::setenv(name_, old_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

TEST(Exact, MethodsAgreeWithEachOtherAndReference) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    GenParams p;
    p.family = static_cast<Family>(trial % 3);
    p.k = rng.between(2, 4);
    p.n = rng.between(1, 10);
    p.weight_levels = 5;  // frequent ties
    auto raw = generate(p, rng.next());
    for (const auto& inst : {raw, make_disjoint(raw)}) {
      auto a = brute_force_optimum(inst, {ExactMethod::subset_enum, std::nullopt});
      auto b = brute_force_optimum(inst, {ExactMethod::branch_and_bound, std::nullopt});
      ASSERT_EQ(a.optimum, b.optimum) << trial;
      ASSERT_EQ(a.optimum.weight, ref::optimum_weight(inst)) << trial;
      ASSERT_TRUE(is_feasible(inst, a.optimum.edges));
      EXPECT_EQ(a.method, ExactMethod::subset_enum);
      EXPECT_EQ(b.method, ExactMethod::branch_and_bound);
      EXPECT_EQ(a.explored, std::uint64_t{1} << inst.edge_count());
      EXPECT_LE(b.explored, a.explored);
    }
  }
}

TEST(Exact, GreedyTrapOptimum) {
  auto inst = trap(3, q(1, 10));
  auto r = brute_force_optimum(inst);
  EXPECT_EQ(r.optimum.weight, q(27, 10));
  EXPECT_EQ(r.optimum.edges, (EdgeSet{1, 2, 3}));
}

TEST(Exact, TiesGoToLexicographicallySmallest) {
  auto inst = free_singletons({1, 1, 2});
  // Uniform rank 1: {2} beats both singletons of weight 1.
  ParityInstance one(1, 3, inst.edges(), uniform_matroid(3, 1));
  EXPECT_EQ(brute_force_optimum(one).optimum.edges, EdgeSet{2});
  ParityInstance tie(1, 3, {{{0}, 2}, {{1}, 1}, {{2}, 1}}, uniform_matroid(3, 2));
  for (auto m : {ExactMethod::subset_enum, ExactMethod::branch_and_bound}) {
    EXPECT_EQ(brute_force_optimum(tie, {m, std::nullopt}).optimum.edges, (EdgeSet{0, 1}));
  }
  ParityInstance zero(1, 2, {{{0}, 0}, {{1}, 0}}, free_matroid(2));
  EXPECT_TRUE(brute_force_optimum(zero).optimum.edges.empty());
}

TEST(Exact, SizeLimits) {
  EXPECT_EQ(default_exact_limit(ExactMethod::subset_enum), 14u);
  EXPECT_EQ(default_exact_limit(ExactMethod::branch_and_bound), 20u);
  auto fifteen = free_singletons(std::vector<Weight>(15, 1));
  auto twenty_one = free_singletons(std::vector<Weight>(21, 1));
  EXPECT_THROW(brute_force_optimum(fifteen, {ExactMethod::subset_enum, std::nullopt}), SizeLimitError);
  EXPECT_EQ(brute_force_optimum(fifteen).optimum.weight, 15);
  EXPECT_THROW(brute_force_optimum(twenty_one), SizeLimitError);
  EXPECT_EQ(brute_force_optimum(twenty_one, {ExactMethod::branch_and_bound, 21}).optimum.weight, 21);
  EXPECT_THROW(brute_force_optimum(free_singletons({1, 2, 3}), {ExactMethod::branch_and_bound, 2}), SizeLimitError);
  try {
    brute_force_optimum(twenty_one);
    FAIL();
  } catch (const SizeLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("21 edges"), std::string::npos);
  }
}

TEST(Exact, LimitFromEnvironment) {
  auto inst = free_singletons({1, 2, 3, 4});
  {
    ScopedEnv env("MPLS_EXACT_LIMIT", "3");
    EXPECT_EQ(exact_limit_from_env(), 3u);
    EXPECT_THROW(brute_force_optimum(inst), SizeLimitError);
    EXPECT_EQ(brute_force_optimum(inst, {ExactMethod::branch_and_bound, 4}).optimum.weight, 10);
  }
  {
    ScopedEnv env("MPLS_EXACT_LIMIT", "zero");
    EXPECT_THROW(exact_limit_from_env(), ConstructionError);
  }
  {
    ScopedEnv env("MPLS_EXACT_LIMIT", "");
    EXPECT_FALSE(exact_limit_from_env());
  }
}

TEST(LocalOptimum, CompletedTracesVerify) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.family = static_cast<Family>(trial % 3);
    p.k = rng.between(2, 4);
    p.n = rng.between(1, 9);
    auto inst = make_disjoint(generate(p, rng.next()));
    auto rule = trial % 2 ? SwapRule::best_gain : SwapRule::first_lex;
    auto r = sliding_local_search(inst, q(3873, 10000), q(1, 10000), rng.next(), {rule, std::nullopt});
    EXPECT_TRUE(verify_local_optimum(inst, r.trace)) << trial;
    // Sanity bracket: sliding <= optimum <= k * sliding.
    auto opt = brute_force_optimum(inst).optimum.weight;
    EXPECT_LE(r.solution.weight, opt);
    EXPECT_LE(opt, Rational(static_cast<long>(inst.k())) * r.solution.weight);
  }
}

TEST(LocalOptimum, TruncatedTraceFails) {
  auto inst = trap(3, q(3, 10));
  SolverOptions stop_early{SwapRule::first_lex, 0};
  auto r = sliding_local_search_at(inst, q(3873, 10000), q(1, 10000), 0, stop_early);
  EXPECT_FALSE(verify_local_optimum(inst, r.trace));
  auto full = sliding_local_search_at(inst, q(3873, 10000), q(1, 10000), 0);
  EXPECT_TRUE(verify_local_optimum(inst, full.trace));
}

TEST(LocalOptimum, EmptyInstance) {
  ParityInstance empty(2, 0, {}, free_matroid(0));
  auto r = sliding_local_search(empty, q(1, 4), q(1, 10), 0);
  EXPECT_TRUE(verify_local_optimum(empty, r.trace));
}

TEST(LocalOptimum, MismatchedTracesAreRejected) {
  auto inst = trap(3, q(3, 10));
  auto r = sliding_local_search_at(inst, q(3873, 10000), q(1, 10000), q(1, 10));
  ASSERT_TRUE(verify_local_optimum(inst, r.trace));

  auto other = trap(2, q(3, 10));
  EXPECT_THROW(verify_local_optimum(other, r.trace), DomainError);

  auto dropped = r.trace;
  dropped.intervals.pop_back();
  EXPECT_THROW(verify_local_optimum(inst, dropped), DomainError);

  auto shifted = r.trace;
  shifted.intervals[1].bounds.hi += 1;
  EXPECT_THROW(verify_local_optimum(inst, shifted), DomainError);

  // The heavy edge chosen in I_1 vanishes later.
  auto removed = r.trace;
  ASSERT_EQ(removed.intervals[0].solution, EdgeSet{0});
  removed.intervals[1].solution.clear();
  EXPECT_THROW(verify_local_optimum(inst, removed), DomainError);

  auto infeasible = r.trace;
  infeasible.intervals.back().solution = {0, 1};
  EXPECT_THROW(verify_local_optimum(inst, infeasible), DomainError);

  auto early = r.trace;
  early.intervals[0].solution = {1};
  EXPECT_THROW(verify_local_optimum(inst, early), DomainError);
}

TEST(TailBound, AllAboveLastMarker) {
  auto inst = free_singletons({1, q(9, 10), q(1, 2)});
  auto s = make_scheme(1, inst.edge_count(), q(1, 4), q(1, 10), 0);
  auto opt = brute_force_optimum(inst).optimum;
  for (EdgeId e : opt.edges) ASSERT_GE(inst.weight(e), s.markers[s.L]);
  EXPECT_TRUE(verify_tail_bound(inst, s, opt));
}

TEST(TailBound, DetectsHeavyTail) {
  // A scheme built for one edge but applied to four: m_L = (3/4)^5 and the
  // three light edges carry more than a quarter of the optimum.
  auto inst = free_singletons({1, q(1, 5), q(1, 5), q(1, 5)});
  auto s = make_scheme(1, 1, q(1, 4), q(1, 4), 0);
  EXPECT_EQ(s.markers[s.L], q(243, 1024));
  EXPECT_FALSE(verify_tail_bound(inst, s, brute_force_optimum(inst).optimum));
}

TEST(TailBound, RandomInstancesAndLargeDelta) {
  Rng rng(50);
  for (int seed = 0; seed < 50; ++seed) {
    GenParams p;
    p.family = static_cast<Family>(seed % 3);
    p.n = rng.between(1, 10);
    p.weight_levels = 1000;
    auto inst = make_disjoint(generate(p, static_cast<std::uint64_t>(seed)));
    auto opt = brute_force_optimum(inst).optimum;
    for (const auto& delta : {q(1, 10000), q(1, 10), q(99, 100)}) {
      Rational tau = q(3873, 10000) * q(static_cast<long>(rng.below(1000)), 1000);
      auto s = compute_markers(inst, q(3873, 10000), delta, tau);
      if (!s) continue;
      EXPECT_TRUE(verify_tail_bound(inst, *s, opt)) << seed;
      // The proof bound: every tail edge weighs at most m_L <= delta W / |E|.
      Rational bound = delta * s->W / Rational(static_cast<long>(inst.edge_count()));
      EXPECT_LE(s->markers[s->L], bound);
    }
  }
}

}  // namespace
