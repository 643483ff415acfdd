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
#include "llpt/formula.hpp"
#include "llpt/relation.hpp"

using namespace llpt;
using fixtures::switch_env;

namespace {

using F = Formula;

std::vector<Formula> sample_formulas() {
  const F x = F::pos("X");
  const F y = F::neg("Y");
  return {x,
          y,
          F::one(),
          F::top(),
          F::tensor(x, y),
          F::par(F::bot(), x),
          F::with(F::zero(), F::plus(x, y)),
          F::bang(F::quest(F::tensor(x, F::one()))),
          F::quest(F::with(y, F::bang(x)))};
}

void expect_identity(const Interface& x) {
  for (const auto& s : all_subsets(x.carrier())) EXPECT_EQ(x.transformer().eval(s), s) << s.to_string();
}

void expect_same_images(const Transformer& a, const Transformer& b) {
  ASSERT_EQ(a.carrier(), b.carrier());
  for (const auto& s : all_subsets(a.carrier())) EXPECT_EQ(a.eval(s), b.eval(s)) << s.to_string();
}

}  // namespace

TEST(Negate, Involutive) {
  for (const auto& f : sample_formulas()) EXPECT_EQ(negate(negate(f)), f) << to_string(f);
}

TEST(Negate, SwapsDualConnectives) {
  const F a = F::pos("A");
  const F b = F::pos("B");
  EXPECT_EQ(negate(F::tensor(a, b)), F::par(F::neg("A"), F::neg("B")));
  EXPECT_EQ(negate(F::with(a, b)), F::plus(F::neg("A"), F::neg("B")));
  EXPECT_EQ(negate(F::bang(a)), F::quest(F::neg("A")));
  EXPECT_EQ(negate(F::one()), F::bot());
  EXPECT_EQ(negate(F::zero()), F::top());
  EXPECT_EQ(negate(F::neg("A")), a);
}

TEST(Negate, ArrowIsParOfNegation) {
  EXPECT_EQ(linear_arrow(F::pos("X"), F::one()), F::par(F::neg("X"), F::one()));
  EXPECT_EQ(to_string(linear_arrow(F::pos("X"), F::one())), "(par (neg X) one)");
}

TEST(Semantics, AtomFreeFormulasDenoteIdentity) {
  Environment env;
  env.degree = 2;
  for (const auto& f : {F::one(), F::top(), F::tensor(F::one(), F::bot()), F::with(F::one(), F::plus(F::one(), F::bot())),
                        F::bang(F::one()), F::quest(F::par(F::one(), F::one())), F::bang(F::with(F::one(), F::top()))}) {
    SCOPED_TRACE(to_string(f));
    expect_identity(semantics(f, env));
  }
}

TEST(Semantics, NegatedSwitchBehavesAsSwitch) {
  const Environment env = switch_env();
  expect_same_images(semantics(F::neg("X"), env).transformer(), semantics(F::pos("X"), env).transformer());
}

TEST(Semantics, IdentityIsASeedOfTheArrow) {
  for (const auto& env : {switch_env(), fixtures::magic_env(), fixtures::random_env(3)}) {
    const Interface arrow = semantics(linear_arrow(F::pos("X"), F::pos("X")), env);
    const Relation id = Relation::identity(env.atom("X").carrier());
    EXPECT_TRUE(is_seed(arrow, id.as_state_set()));
  }
}

TEST(Semantics, CarriersFollowTheFormula) {
  const Environment env = switch_env(2);
  EXPECT_EQ(carrier_of(F::tensor(F::pos("X"), F::one()), env).size(), 2u);
  EXPECT_EQ(carrier_of(F::plus(F::pos("X"), F::neg("X")), env).size(), 4u);
  EXPECT_EQ(carrier_of(F::bang(F::pos("X")), env).size(), 6u);
  EXPECT_EQ(carrier_of(F::zero(), env).size(), 0u);
  EXPECT_EQ(semantics(F::bang(F::pos("X")), env).carrier(), Carrier::bag(env.atom("X").carrier(), 2));
}

TEST(Semantics, UnboundAtomIsNamed) {
  const Environment env = switch_env();
  try {
    semantics(F::tensor(F::pos("X"), F::neg("Y")), env);
    FAIL() << "expected UnboundAtom";
  } catch (const UnboundAtom& e) {
    EXPECT_EQ(e.name(), "Y");
  }
}

TEST(SequentInterface, SingletonIsTheFormula) {
  const Environment env = switch_env();
  const F f = F::with(F::pos("X"), F::one());
  expect_same_images(sequent_interface({f}, env).transformer(), semantics(f, env).transformer());
}

TEST(SequentInterface, AxiomSequentOverSwitch) {
  const Environment env = switch_env();
  const Interface x = sequent_interface({F::neg("X"), F::pos("X")}, env);
  const Transformer& sw = env.atom("X").transformer();
  EXPECT_EQ(x.carrier(), Carrier::product(sw.carrier(), sw.carrier()));
  expect_same_images(x.transformer(), par(sw, sw));
  EXPECT_TRUE(is_seed(x, Relation::identity(sw.carrier()).as_state_set()));
}

TEST(SequentInterface, ParAssociatesToTheRight) {
  const Environment env = switch_env();
  const Sequent g = {F::pos("X"), F::one(), F::neg("X")};
  const Interface x = sequent_interface(g, env);
  const Interface nested = semantics(F::par(g[0], F::par(g[1], g[2])), env);
  EXPECT_EQ(x.carrier(), nested.carrier());
  EXPECT_EQ(sequent_carrier(g, env), nested.carrier());
  expect_same_images(x.transformer(), nested.transformer());
}

TEST(SequentInterface, EmptySequentIsRejected) {
  EXPECT_THROW(sequent_interface({}, switch_env()), Error);
  EXPECT_THROW(sequent_carrier({}, switch_env()), Error);
}

TEST(ArrowCharacterization, MatchesTheSimulationCondition) {
  const Environment env = fixtures::random_env(11, 3);
  const Transformer a = env.atom("X").transformer();
  const Transformer b = switch_atom().transformer();
  const Transformer arrow = linear_arrow(a, b);
  for (const auto& r : all_subsets(arrow.carrier())) {
    const Relation rel = Relation::from_state_set(r);
    StateSet expected(arrow.carrier());
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t t = 0; t < 2; ++t) {
        bool ok = true;
        for (const auto& x : all_subsets(a.carrier())) {
          if (a.eval(x).contains(s) && !b.eval(direct_image(rel, x)).contains(t)) ok = false;
        }
        if (ok) expected.insert(s * 2 + t);
      }
    }
    ASSERT_EQ(arrow.eval(r), expected) << r.to_string();
  }
}

TEST(Determinism, SwitchFormulasArePermutations) {
  const Environment env = switch_env(2);
  const F x = F::pos("X");
  for (const auto& f : {x, F::neg("X"), F::tensor(x, F::neg("X")), F::with(F::par(x, x), F::one()),
                        F::plus(F::bang(x), F::quest(F::neg("X")))}) {
    SCOPED_TRACE(to_string(f));
    const Transformer t = semantics(f, env).transformer();
    ASSERT_TRUE(is_deterministic(t));
    auto map = as_point_map(t);
    ASSERT_TRUE(map.has_value());
    std::vector<bool> hit(map->size());
    for (std::size_t a = 0; a < map->size(); ++a) {
      EXPECT_FALSE(hit[(*map)[a]]);
      hit[(*map)[a]] = true;
      EXPECT_EQ(t.eval(StateSet(t.carrier()).insert(a)), StateSet(t.carrier()).insert((*map)[a]));
    }
  }
}
