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

#include "mpls/mpls.hpp"
#include "reference.hpp"

namespace {

using namespace mpls;

MatroidOracle k4() {
  // e(0,1)=0 e(0,2)=1 e(0,3)=2 e(1,2)=3 e(1,3)=4 e(2,3)=5
  return graphic_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST(Matroid, UniformExamples) {
  auto m = uniform_matroid(4, 2);
  EXPECT_TRUE(m.is_independent({0, 1}));
  EXPECT_FALSE(m.is_independent({0, 1, 2}));
  EXPECT_EQ(rank(m, {0, 1, 2, 3}), 2u);
}

TEST(Matroid, GraphicTriangleIsDependent) {
  auto m = k4();
  EXPECT_FALSE(m.is_independent({0, 1, 3}));
  EXPECT_TRUE(m.is_independent({0, 1, 2}));
  EXPECT_EQ(rank(m, {0, 1, 2, 3, 4, 5}), 3u);
}

TEST(Matroid, EmptySetIsIndependentEverywhere) {
  std::vector<Element> none;
  for (const auto& m : {uniform_matroid(3, 0), free_matroid(2), k4(), partition_matroid({{0, 1}}, {0}),
                        linear_matroid(2, {{0}, {0}})}) {
    EXPECT_TRUE(m.is_independent(none));
  }
}

TEST(Matroid, RejectsForeignAndRepeatedElements) {
  auto m = uniform_matroid(3, 2);
  EXPECT_THROW(m.is_independent({3}), DomainError);
  EXPECT_THROW(m.is_independent({1, 1}), DomainError);
  EXPECT_THROW(rank(m, {7}), DomainError);
}

TEST(Matroid, ConstructionErrors) {
  EXPECT_THROW(partition_matroid({{0, 1}, {1}}, {1, 1}), ConstructionError);
  EXPECT_THROW(partition_matroid({{0}}, {1, 1}), ConstructionError);
  EXPECT_THROW(graphic_matroid(2, {{0, 2}}), ConstructionError);
  EXPECT_THROW(linear_matroid(4, {{1}}), ConstructionError);
  EXPECT_THROW(linear_matroid(2, {{1}, {1, 0}}), ConstructionError);
}

TEST(Matroid, LinearOverGf2) {
  // columns (1,0), (0,1), (1,1): any two independent, all three dependent.
  auto m = linear_matroid(2, {{1, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(m.is_independent({0, 1}));
  EXPECT_TRUE(m.is_independent({1, 2}));
  EXPECT_FALSE(m.is_independent({0, 1, 2}));
  // Over GF(3) the same columns are still rank 2.
  EXPECT_FALSE(linear_matroid(3, {{1, 0}, {0, 1}, {1, 1}}).is_independent({0, 1, 2}));
  // Negative entries reduce mod p.
  EXPECT_FALSE(linear_matroid(3, {{1}, {-2}}).is_independent({0, 1}));
}

TEST(Matroid, FamiliesAgreeWithReferencePredicates) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& family = ref::families()[trial % 4];
    const std::size_t n = rng.between(1, 7);
    auto m = ref::random_paired(rng, family, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ref::from_mask(mask);
      ASSERT_EQ(m.lib.is_independent(s), m.ref(s)) << family << " n=" << n << " mask=" << mask;
    }
  }
}

TEST(Matroid, RankMatchesExhaustiveOnRandomGf2) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.between(1, 7), rows = rng.between(1, 4);
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(rows));
    for (auto& c : cols) {
      for (auto& x : c) x = static_cast<std::int64_t>(rng.below(2));
    }
    auto m = linear_matroid(2, cols);
    ElementSet s = ref::from_mask(rng.below(std::uint64_t{1} << n));
    EXPECT_EQ(rank(m, s), ref::rank([&](const ElementSet& x) { return ref::linear_independent(2, cols, x); }, s));
  }
}

// Empty set, downward closure and exchange on every subset pair.
void expect_matroid_axioms(const MatroidOracle& m) {
  const ElementSet& ground = m.ground().elements();
  const std::size_t n = ground.size();
  std::vector<char> indep(std::size_t{1} << n);
  auto subset = [&](std::uint64_t mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(ground[i]);
    }
    return s;
  };
  for (std::uint64_t mask = 0; mask < indep.size(); ++mask) indep[mask] = m.is_independent(subset(mask));
  ASSERT_TRUE(indep[0]);
  for (std::uint64_t t = 0; t < indep.size(); ++t) {
    if (!indep[t]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (t >> i & 1) ASSERT_TRUE(indep[t & ~(std::uint64_t{1} << i)]) << "downward closure";
    }
    for (std::uint64_t s = 0; s < indep.size(); ++s) {
      if (!indep[s] || std::popcount(s) >= std::popcount(t)) continue;
      bool extended = false;
      for (std::size_t i = 0; i < n && !extended; ++i) {
        if ((t >> i & 1) && !(s >> i & 1)) extended = indep[s | (std::uint64_t{1} << i)];
      }
      ASSERT_TRUE(extended) << "exchange axiom";
    }
  }
}

TEST(Matroid, AxiomsHoldForFamiliesAndCombinators) {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& family = ref::families()[trial % 4];
    const std::size_t n = rng.between(1, 7);
    auto m = ref::random_paired(rng, family, n).lib;
    expect_matroid_axioms(m);

    ElementSet keep = ref::from_mask(rng.below(std::uint64_t{1} << n));
    expect_matroid_axioms(restrict(m, keep));

    ElementSet away = random_independent(rng, m, m.ground().elements(), rng.between(0, 2));
    expect_matroid_axioms(contract(m, away));

    std::vector<Element> origin(rng.between(1, 7));
    for (auto& o : origin) o = static_cast<Element>(rng.below(n));
    expect_matroid_axioms(project(m, origin));
  }
}

TEST(Matroid, RestrictKeepsIndependence) {
  auto r = restrict(uniform_matroid(4, 2), {0, 1});
  EXPECT_TRUE(r.is_independent({0, 1}));
  EXPECT_THROW(r.is_independent({2}), DomainError);
  EXPECT_FALSE(restrict(k4(), {0, 1, 3}).is_independent({0, 1, 3}));

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.between(1, 7);
    auto m = ref::random_paired(rng, ref::families()[trial % 4], n);
    std::uint64_t keep = rng.below(std::uint64_t{1} << n);
    auto r2 = restrict(m.lib, ref::from_mask(keep));
    for (std::uint64_t s = keep;; s = (s - 1) & keep) {
      ASSERT_EQ(r2.is_independent(ref::from_mask(s)), m.ref(ref::from_mask(s)));
      if (s == 0) break;
    }
  }
}

TEST(Matroid, ContractExamples) {
  auto c = contract(k4(), {0});
  EXPECT_EQ(rank(c, c.ground().elements()), 2u);
  EXPECT_FALSE(c.ground().contains(0));
  auto same = contract(k4(), {});
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    EXPECT_EQ(same.is_independent(ref::from_mask(mask)), k4().is_independent(ref::from_mask(mask)));
  }
  EXPECT_THROW(contract(k4(), {0, 1, 3}), PreconditionError);
}

TEST(Matroid, ContractRankIdentity) {
  Rng rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.between(1, 7);
    auto m = ref::random_paired(rng, ref::families()[trial % 4], n);
    ElementSet away = random_independent(rng, m.lib, m.lib.ground().elements(), rng.between(0, 3));
    auto c = contract(m.lib, away);
    const std::size_t base = ref::rank(m.ref, away);
    const ElementSet& rest = c.ground().elements();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      ElementSet R;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) R.push_back(rest[i]);
      }
      ASSERT_EQ(rank(c, R), ref::rank(m.ref, set_union(R, away)) - base);
    }
  }
}

TEST(Matroid, RestrictContractCompose) {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.between(1, 7);
    auto m = ref::random_paired(rng, ref::families()[trial % 4], n).lib;
    ElementSet K = ref::from_mask(rng.below(std::uint64_t{1} << n));
    ElementSet C = random_independent(rng, m, K, rng.between(0, 2));
    auto a = contract(restrict(m, K), C);
    auto b = restrict(contract(m, C), set_difference(K, C));
    ASSERT_EQ(a.ground().elements(), b.ground().elements());
    const ElementSet& g = a.ground().elements();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
      ElementSet s;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (mask >> i & 1) s.push_back(g[i]);
      }
      ASSERT_EQ(a.is_independent(s), b.is_independent(s));
    }
  }
}

TEST(Matroid, RankMonotoneAndSubmodular) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.between(1, 6);
    auto m = ref::random_paired(rng, ref::families()[trial % 4], n).lib;
    std::vector<std::size_t> r(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < r.size(); ++mask) r[mask] = rank(m, ref::from_mask(mask));
    for (std::uint64_t a = 0; a < r.size(); ++a) {
      for (std::uint64_t b = 0; b < r.size(); ++b) {
        if ((a & b) == a) ASSERT_LE(r[a], r[b]);
        ASSERT_LE(r[a | b] + r[a & b], r[a] + r[b]);
      }
    }
  }
}

TEST(Matroid, UnionOfDisjointCopies) {
  auto u = matroid_union({free_matroid(2), shift(free_matroid(3), 2)});
  EXPECT_TRUE(u.is_independent({0, 1, 2, 3, 4}));

  auto w = matroid_union({uniform_matroid(2, 1), shift(uniform_matroid(2, 1), 2)});
  EXPECT_TRUE(w.is_independent({0, 2}));
  EXPECT_FALSE(w.is_independent({0, 1}));
  EXPECT_THROW(matroid_union({free_matroid(2), free_matroid(3)}), ConstructionError);
  EXPECT_THROW(matroid_union({}), ConstructionError);
}

TEST(Matroid, UnionMatchesPartitionSearch) {
  // Brute force: S is independent iff some assignment of its elements to the
  // two copies gives independent parts, each part inside its own copy.
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n1 = rng.between(1, 6), n2 = rng.between(1, 6);
    auto a = ref::random_paired(rng, ref::families()[trial % 4], n1);
    auto b = ref::random_paired(rng, ref::families()[(trial + 1) % 4], n2);
    auto u = matroid_union({a.lib, shift(b.lib, static_cast<Element>(n1))});
    const std::size_t n = n1 + n2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ref::from_mask(mask);
      bool any = false;
      for (std::uint64_t side = 0; side < (std::uint64_t{1} << s.size()) && !any; ++side) {
        ElementSet p1, p2;
        bool valid = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (side >> i & 1) {
            if (s[i] < n1) valid = false;
            p2.push_back(s[i] - static_cast<Element>(n1));
          } else {
            if (s[i] >= n1) valid = false;
            p1.push_back(s[i]);
          }
        }
        any = valid && a.ref(p1) && b.ref(p2);
      }
      ASSERT_EQ(u.is_independent(s), any);
    }
  }
}

TEST(Matroid, ProjectCapsCopies) {
  auto p = project(uniform_matroid(3, 2), {0, 0, 1, 2});
  EXPECT_FALSE(p.is_independent({0, 1}));  // two copies of 0
  EXPECT_TRUE(p.is_independent({0, 2}));
  EXPECT_FALSE(p.is_independent({0, 2, 3}));  // rank 2 in the base
}

TEST(Matroid, CallCounterIsShared) {
  auto m = uniform_matroid(3, 1);
  auto copy = m;
  m.reset_calls();
  m.is_independent({0});
  copy.independent_unchecked(std::vector<Element>{1});
  EXPECT_EQ(m.calls(), 2u);
}

TEST(Matroid, JsonRoundTrip) {
  for (const auto& m : {uniform_matroid(4, 2), free_matroid(3), partition_matroid({{0, 2}, {1}}, {1, 1}), k4(),
                        linear_matroid(3, {{1, 2}, {0, 1}, {2, 2}}),
                        matroid_union({free_matroid(2), shift(uniform_matroid(2, 1), 2)})}) {
    auto desc = m.describe();
    ASSERT_TRUE(desc.has_value()) << m.kind();
    auto back = matroid_from_json(*desc);
    ASSERT_EQ(back.ground().elements(), m.ground().elements());
    const std::size_t n = m.ground().size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      EXPECT_EQ(back.is_independent(ref::from_mask(mask)), m.is_independent(ref::from_mask(mask)));
    }
  }
  EXPECT_FALSE(restrict(k4(), {0, 1}).describe().has_value());
  EXPECT_THROW(matroid_from_json(nlohmann::json{{"kind", "nope"}}), ConstructionError);
}

}  // namespace
