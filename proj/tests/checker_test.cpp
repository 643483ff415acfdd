// Copyright 2026 The llpt Authors.
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

#include "fixtures.hpp"
#include "llpt/checker.hpp"
#include "llpt/error.hpp"
#include "llpt/generators.hpp"
#include "llpt/relation.hpp"

using namespace llpt;

namespace {

const Carrier kSwitch = Carrier::atom("X", {"m", "p"});

StateSet set_of(const Carrier& c, std::initializer_list<std::size_t> members) {
  StateSet s(c);
  for (auto m : members) s.insert(m);
  return s;
}

/// { (p m) (m p) }: the swap, read as a relation from switch to switch.
Relation swap_relation() {
  Relation r(kSwitch, kSwitch);
  r.insert(0, 1);
  r.insert(1, 0);
  return r;
}

}  // namespace

TEST(Seeds, EmptySetIsAlwaysASeed) {
  for (const auto& t : all_monotone_tables(kSwitch)) EXPECT_TRUE(is_seed(Interface(t), StateSet(kSwitch)));
}

TEST(Seeds, Switch) {
  const Interface sw = switch_atom();
  EXPECT_FALSE(is_seed(sw, set_of(kSwitch, {1})));
  EXPECT_TRUE(is_seed(sw, StateSet::full(kSwitch)));
  EXPECT_EQ(seed_counterexample(sw, set_of(kSwitch, {1})), std::optional<std::size_t>(1));
  const auto seeds = enumerate_seeds(sw);
  ASSERT_EQ(seeds.size(), 2u);
  EXPECT_EQ(seeds[0].to_string(), "{}");
  EXPECT_EQ(seeds[1].to_string(), "{m p}");
}

TEST(Seeds, UnitAndIdentityArrow) {
  const auto unit_seeds = enumerate_seeds(units().one);
  ASSERT_EQ(unit_seeds.size(), 2u);
  EXPECT_EQ(unit_seeds[1].to_string(), "{*}");
  const Interface sw = switch_atom();
  const Interface arrow(linear_arrow(sw.transformer(), sw.transformer()));
  EXPECT_TRUE(is_seed(arrow, Relation::identity(kSwitch).as_state_set()));
}

TEST(Seeds, UnionsOfSeedsAreSeeds) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const Interface x(random_monotone_table(numbered_atom("R", 3), rng));
    const auto seeds = enumerate_seeds(x);
    for (const auto& a : seeds) {
      for (const auto& b : seeds) EXPECT_TRUE(is_seed(x, a | b));
    }
  }
}

TEST(Seeds, CapsAndCarrierChecks) {
  const Interface big(Transformer::identity(numbered_atom("B", 13)));
  EXPECT_THROW(enumerate_seeds(big), CarrierTooLarge);
  EXPECT_THROW(is_seed(switch_atom(), StateSet(numbered_atom("Y", 2))), CarrierMismatch);
}

TEST(Simulation, IdentityAndSwap) {
  const Interface sw = switch_atom();
  EXPECT_TRUE(is_forward_simulation(Relation::identity(kSwitch), sw, sw));
  EXPECT_TRUE(is_forward_simulation(swap_relation(), sw, sw));
  Relation half(kSwitch, kSwitch);
  half.insert(0, 0);
  EXPECT_FALSE(is_forward_simulation(half, sw, sw));
  EXPECT_TRUE(simulation_counterexample(half, sw, sw).has_value());
}

TEST(Simulation, AgreesWithArrowSeedsOnTwoStates) {
  const auto pool = all_monotone_tables(kSwitch);
  for (std::size_t i = 0; i < pool.size(); i += 3) {
    for (std::size_t j = 0; j < pool.size(); j += 4) {
      const Interface x(pool[i]);
      const Interface y(pool[j]);
      const Interface arrow(linear_arrow(pool[i], pool[j]));
      for (const auto& s : all_subsets(arrow.carrier())) {
        const Relation r = Relation::from_state_set(s);
        EXPECT_EQ(is_forward_simulation(r, x, y), is_seed(arrow, s));
      }
    }
  }
}

TEST(Transport, IdentityAndSwitch) {
  const Interface sw = switch_atom();
  const StateSet full = StateSet::full(kSwitch);
  EXPECT_EQ(seed_transport(Relation::identity(kSwitch), sw, sw, full), full);
  EXPECT_EQ(seed_transport(swap_relation(), sw, sw, full), full);
  EXPECT_EQ(seed_transport(swap_relation(), sw, sw, StateSet(kSwitch)), StateSet(kSwitch));
  EXPECT_EQ(antiseed_transport(swap_relation(), sw, sw, full), full);
}

TEST(Transport, RejectsBrokenHypotheses) {
  const Interface sw = switch_atom();
  Relation half(kSwitch, kSwitch);
  half.insert(0, 0);
  EXPECT_THROW(seed_transport(half, sw, sw, StateSet::full(kSwitch)), PreconditionViolation);
  EXPECT_THROW(seed_transport(swap_relation(), sw, sw, set_of(kSwitch, {0})), PreconditionViolation);
}

TEST(Determinism, Examples) {
  EXPECT_TRUE(is_deterministic(Transformer::identity(kSwitch)));
  EXPECT_EQ(as_point_map(Transformer::identity(kSwitch)), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(as_point_map(switch_atom().transformer()), (std::vector<std::size_t>{1, 0}));
  const Carrier three = numbered_atom("M", 3);
  EXPECT_FALSE(is_deterministic(Transformer::magic(three)));
  EXPECT_FALSE(as_point_map(Transformer::magic(three)).has_value());
  EXPECT_FALSE(is_deterministic(Transformer::magic(numbered_atom("M", 1))));
}

TEST(Determinism, MinimalPreimageRouteMatchesPairwiseCheck) {
  for (const auto& t : all_monotone_tables(kSwitch)) EXPECT_EQ(is_deterministic(t), is_deterministic_by_pairs(t)) << t.describe();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const Transformer t = random_monotone_table(numbered_atom("R", 3), rng);
    EXPECT_EQ(is_deterministic(t), is_deterministic_by_pairs(t));
  }
  for (const auto& f : {std::vector<std::size_t>{2, 0, 1}, std::vector<std::size_t>{0, 0, 1}}) {
    const Transformer t = point_map(numbered_atom("R", 3), f);
    EXPECT_EQ(is_deterministic(t), is_deterministic_by_pairs(t));
  }
}

TEST(Determinism, NonInjectivePointMapIsNotDeterministic) {
  // Two states with the same image break intersections: {a} and {b} are
  // disjoint, their images are not.
  const Transformer t = point_map(numbered_atom("R", 3), {0, 0, 1});
  EXPECT_FALSE(is_deterministic(t));
}

TEST(MagicStrictness, Values) {
  const auto one = magic_strictness(numbered_atom("M", 1));
  EXPECT_EQ(one.verdict, Strictness::kFails);
  EXPECT_TRUE(one.contains_identity);
  EXPECT_EQ(one.image.to_string(), "{(s0 s0)}");

  const auto two = magic_strictness(numbered_atom("M", 2));
  EXPECT_EQ(two.verdict, Strictness::kHolds);
  EXPECT_EQ(two.image.count(), 4u);

  EXPECT_EQ(magic_strictness(Carrier::empty()).verdict, Strictness::kVacuous);
  EXPECT_STREQ(to_string(Strictness::kVacuous), "vacuous");
}
