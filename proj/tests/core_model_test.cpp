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

#include <random>

#include "llpt/carrier.hpp"
#include "llpt/error.hpp"
#include "llpt/generators.hpp"
#include "llpt/relation.hpp"
#include "llpt/state_set.hpp"
#include "llpt/transformer.hpp"
#include "oracles.hpp"

using namespace llpt;

namespace {

StateSet set_of(const Carrier& c, std::initializer_list<std::size_t> members) {
  StateSet s(c);
  for (auto m : members) s.insert(m);
  return s;
}

std::vector<Transformer> two_state_pool() { return all_monotone_tables(Carrier::atom("A", {"a", "b"})); }

}  // namespace

TEST(Carrier, EnumeratesInCanonicalOrder) {
  const Carrier a = Carrier::atom("A", {"a", "b"});
  const Carrier b = Carrier::atom("B", {"x", "y", "z"});
  const Carrier prod = Carrier::product(a, b);
  ASSERT_EQ(prod.size(), 6u);
  EXPECT_EQ(prod.element(4), Element::pair(Element::atom(1), Element::atom(1)));
  const Carrier sum = Carrier::sum(a, b);
  EXPECT_EQ(sum.element(1), Element::inl(Element::atom(1)));
  EXPECT_EQ(sum.element(2), Element::inr(Element::atom(0)));
  for (const Carrier& c : {prod, sum, Carrier::bag(a, 3)}) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_LT(c.element(i), c.element(i + 1));
  }
}

TEST(Carrier, BagSizesMatchMultisetCounts) {
  const Carrier a = Carrier::atom("A", {"a", "b"});
  EXPECT_EQ(Carrier::bag(a, 0).size(), 1u);
  EXPECT_EQ(Carrier::bag(a, 2).size(), 6u);
  EXPECT_EQ(Carrier::bag(a, 3).size(), 10u);
  EXPECT_EQ(Carrier::bag(Carrier::atom("C", {"a", "b", "c"}), 3).size(), 20u);
  EXPECT_EQ(bag_count(4, 2), 15u);
  EXPECT_EQ(Carrier::bag(Carrier::empty(), 3).size(), 1u);
}

TEST(Carrier, BagElementsAreSortedMultisets) {
  const Element b1 = Element::bag({Element::atom(1), Element::atom(0)});
  const Element b2 = Element::bag({Element::atom(0), Element::atom(1)});
  EXPECT_EQ(b1, b2);
  const Carrier bags = Carrier::bag(Carrier::atom("A", {"a", "b"}), 2);
  EXPECT_TRUE(bags.is_member(b1));
  EXPECT_FALSE(bags.is_member(Element::bag({Element::atom(0), Element::atom(0), Element::atom(0)})));
}

TEST(Carrier, StructuralEquality) {
  const Carrier a = Carrier::atom("A", {"a", "b"});
  EXPECT_EQ(Carrier::product(a, Carrier::unit()), Carrier::product(Carrier::atom("A", {"a", "b"}), Carrier::unit()));
  EXPECT_FALSE(Carrier::product(a, a) == Carrier::sum(a, a));
  EXPECT_FALSE(Carrier::bag(a, 2) == Carrier::bag(a, 3));
}

TEST(Carrier, RejectsBadAtoms) {
  EXPECT_THROW(Carrier::atom("A", {"a", "a"}), Error);
  EXPECT_THROW(Carrier::atom("A", {""}), Error);
}

TEST(Carrier, FormatsElements) {
  const Carrier a = Carrier::atom("A", {"m", "p"});
  const Carrier c = Carrier::product(Carrier::sum(a, Carrier::unit()), Carrier::bag(a, 2));
  const Element e = Element::pair(Element::inr(Element::star()), Element::bag({Element::atom(1), Element::atom(0)}));
  EXPECT_EQ(format_element(c, e), "((r *) [m p])");
}

TEST(StateSet, ComplementIsInvolutive) {
  const Carrier c = Carrier::product(Carrier::atom("A", {"a", "b"}), Carrier::atom("B", {"x", "y"}));
  for (const auto& s : all_subsets(c)) EXPECT_EQ(s.complement().complement(), s);
}

TEST(StateSet, CarrierMismatchNamesBothCarriers) {
  const Carrier a = Carrier::atom("A", {"a", "b"});
  const Carrier b = Carrier::atom("B", {"a", "b"});
  try {
    Transformer::identity(a).eval(StateSet(b));
    FAIL() << "expected CarrierMismatch";
  } catch (const CarrierMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("A"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("B"), std::string::npos);
  }
}

TEST(Eval, Examples) {
  const Carrier ab = Carrier::atom("A", {"a", "b"});
  EXPECT_EQ(Transformer::identity(ab).eval(set_of(ab, {0})), set_of(ab, {0}));
  const Interface sw = switch_atom();
  const Carrier& x = sw.carrier();
  EXPECT_EQ(sw.transformer().eval(set_of(x, {1})), set_of(x, {0}));  // p -> m
  EXPECT_EQ(Transformer::magic(ab).eval(StateSet(ab)), StateSet::full(ab));
}

TEST(Table, RejectsNonMonotonicTableWithCoveringPair) {
  const Carrier ab = Carrier::atom("A", {"a", "b"});
  std::vector<Bits> images = {Bits(2, 1), Bits(2, 0), Bits(2, 1), Bits(2, 3)};
  try {
    Transformer::table(ab, images);
    FAIL() << "expected NonMonotonicTable";
  } catch (const NonMonotonicTable& e) {
    EXPECT_EQ(e.smaller(), "{}");
    EXPECT_EQ(e.larger(), "{a}");
  }
}

TEST(Table, EnforcesStateCap) {
  const Carrier c = numbered_atom("C", 4);
  std::vector<Bits> images(16, Bits(4));
  EXPECT_THROW(Transformer::table(c, images, 3), CarrierTooLarge);
}

TEST(Generators, MonotonePoolSizes) {
  EXPECT_EQ(all_monotone_tables(numbered_atom("A", 1)).size(), 3u);
  EXPECT_EQ(all_monotone_tables(numbered_atom("A", 2)).size(), 36u);
}

TEST(Generators, RandomTablesAreReproducible) {
  const Carrier c = numbered_atom("R", 3);
  std::mt19937_64 r1(42), r2(42);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(random_monotone_table(c, r1).table_images(), random_monotone_table(c, r2).table_images());
  }
}

TEST(Dual, InvolutionAndDefinition) {
  for (const auto& t : two_state_pool()) {
    const Transformer d = dual(t);
    EXPECT_EQ(dual(d).id(), t.id());
    for (const auto& s : all_subsets(t.carrier())) {
      EXPECT_EQ(d.eval(s), t.eval(s.complement()).complement());
    }
  }
}

TEST(Dual, SwitchIsSelfDual) {
  const Interface sw = switch_atom();
  for (const auto& s : all_subsets(sw.carrier())) EXPECT_EQ(dual(sw.transformer()).eval(s), sw.transformer().eval(s));
}

TEST(Tensor, MatchesRectangleOracleOnTwoByTwo) {
  const auto pool = two_state_pool();
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      const Transformer t = tensor(p, q);
      for (std::uint64_t r = 0; r < 16; ++r) {
        const Bits rb(4, r);
        ASSERT_EQ(t.image(rb), oracle::tensor_by_rectangles(p, q, rb));
      }
    }
  }
}

TEST(Tensor, AllSubsetsRouteAgreesOnThreeByTwo) {
  std::mt19937_64 rng(7);
  const Carrier c3 = numbered_atom("C", 3);
  const auto pool = two_state_pool();
  for (int i = 0; i < 6; ++i) {
    const Transformer p = random_monotone_table(c3, rng);
    for (std::size_t j = 0; j < pool.size(); j += 5) {
      const Transformer t = tensor(p, pool[j]);
      for (const auto& r : all_subsets(t.carrier())) {
        const StateSet expected(t.carrier(), oracle::tensor_by_rectangles(p, pool[j], r.bits()));
        ASSERT_EQ(t.eval(r), expected);
        ASSERT_EQ(tensor_image_all_subsets(p, pool[j], r), expected);
      }
    }
  }
}

namespace {

// P(x) * Q(y) plus the contributions of the degenerate rectangles X * {} and {} * Y.
StateSet rectangle_image(const Transformer& p, const Transformer& q, const StateSet& x, const StateSet& y) {
  const StateSet none_x(p.carrier());
  const StateSet none_y(q.carrier());
  return cartesian(p.eval(x), q.eval(y)) | cartesian(p.eval(StateSet::full(p.carrier())), q.eval(none_y)) |
         cartesian(p.eval(none_x), q.eval(StateSet::full(q.carrier())));
}

bool is_strict(const Transformer& t) { return t.eval(StateSet(t.carrier())).empty(); }

}  // namespace

TEST(Tensor, RectanglesIncludingDegenerateOnes) {
  const auto pool = two_state_pool();
  for (std::size_t i = 0; i < pool.size(); i += 3) {
    for (std::size_t j = 0; j < pool.size(); j += 4) {
      const Transformer t = tensor(pool[i], pool[j]);
      const Transformer u = par(pool[i], pool[j]);
      for (const auto& x : all_subsets(pool[i].carrier())) {
        for (const auto& y : all_subsets(pool[j].carrier())) {
          const StateSet rect = cartesian(x, y);
          EXPECT_EQ(t.eval(rect), rectangle_image(pool[i], pool[j], x, y));
          if (is_strict(pool[i]) && is_strict(pool[j])) {
            EXPECT_EQ(t.eval(rect), cartesian(pool[i].eval(x), pool[j].eval(y)));
          }
          EXPECT_TRUE(cartesian(pool[i].eval(x), pool[j].eval(y)).is_subset_of(u.eval(rect)));
        }
      }
    }
  }
}

TEST(Tensor, RectangleEqualityFailsWithoutStrictness) {
  const Carrier ab = Carrier::atom("A", {"a", "b"});
  const Carrier cd = Carrier::atom("B", {"c", "d"});
  const Transformer p = Transformer::identity(ab);
  const Transformer q = Transformer::magic(cd);
  const StateSet x = set_of(ab, {0});
  const StateSet y = set_of(cd, {0});
  const StateSet image = tensor(p, q).eval(cartesian(x, y));
  EXPECT_EQ(image, StateSet::full(image.carrier()));
  EXPECT_NE(image, cartesian(p.eval(x), q.eval(y)));
}

TEST(Tensor, EmptyArgument) {
  const Carrier ab = Carrier::atom("A", {"a", "b"});
  const StateSet none(Carrier::product(ab, ab));
  EXPECT_TRUE(tensor(Transformer::identity(ab), Transformer::identity(ab)).eval(none).empty());
  EXPECT_EQ(tensor(Transformer::identity(ab), Transformer::magic(ab)).eval(none), StateSet::full(none.carrier()));
}

TEST(Par, DeMorganOnTwoByTwo) {
  const auto pool = two_state_pool();
  for (std::size_t i = 0; i < pool.size(); i += 2) {
    for (std::size_t j = 1; j < pool.size(); j += 3) {
      const Transformer u = par(pool[i], pool[j]);
      for (std::uint64_t r = 0; r < 16; ++r) {
        const Bits rb(4, r);
        EXPECT_EQ(u.image(rb), ~oracle::tensor_by_rectangles(dual(pool[i]), dual(pool[j]), ~rb));
      }
    }
  }
}

TEST(With, ComponentwiseAndEqualToPlus) {
  const auto pool = two_state_pool();
  for (std::size_t i = 0; i < pool.size(); i += 2) {
    for (std::size_t j = 0; j < pool.size(); j += 3) {
      const Transformer w = with(pool[i], pool[j]);
      const Transformer p = plus(pool[i], pool[j]);
      for (std::uint64_t s = 0; s < 16; ++s) {
        const Bits sb(4, s);
        const Bits left = pool[i].image(Bits(2, s & 3));
        const Bits right = pool[j].image(Bits(2, s >> 2));
        const Bits expected(4, left.to_ulong() | right.to_ulong() << 2);
        EXPECT_EQ(w.image(sb), expected);
        EXPECT_EQ(p.image(sb), expected);
      }
    }
  }
}

TEST(Units, BottomIsOneAndTopIsZero) {
  const Units u = units();
  for (const auto& s : all_subsets(u.one.carrier())) {
    EXPECT_EQ(u.bottom.transformer().eval(s), u.one.transformer().eval(s));
    EXPECT_EQ(u.one.transformer().eval(s), s);
  }
  EXPECT_EQ(u.top.transformer().eval(StateSet(Carrier::empty())), StateSet(Carrier::empty()));
  EXPECT_EQ(u.zero.carrier().size(), 0u);
}

TEST(Routes, ContainsAndMinimalPreimagesAgreeWithEval) {
  std::mt19937_64 rng(3);
  const Carrier c2 = numbered_atom("B", 2);
  const Carrier c1 = numbered_atom("A", 1);
  for (int i = 0; i < 12; ++i) {
    const Transformer p = random_monotone_table(c2, rng);
    const Transformer q = random_monotone_table(c1, rng);
    const std::vector<Transformer> trees = {tensor(p, q), par(p, q), with(p, q), plus(p, dual(q)),
                                            bang(p, 2), quest(q, 3), par(bang(q, 1), p)};
    for (const auto& t : trees) {
      // Fresh copies of the same tree so that no route reuses another's memo.
      const Transformer t2 = t.kind() == Transformer::Kind::kDual ? dual(t.operand()) : t;
      for (std::size_t b = 0; b < t.carrier().size(); ++b) {
        ASSERT_EQ(t.minimal_preimages(b), oracle::minimal_preimages(t2, b)) << t.describe();
      }
      for (const auto& s : all_subsets(t.carrier())) {
        const StateSet img = t.eval(s);
        for (std::size_t b = 0; b < t.carrier().size(); ++b) ASSERT_EQ(t2.contains(s, b), img.contains(b));
      }
    }
  }
}

TEST(Monotonicity, CombinatorsPreserveIt) {
  const auto pool = two_state_pool();
  const Carrier one = numbered_atom("U", 1);
  const auto small = all_monotone_tables(one);
  for (std::size_t i = 0; i < pool.size(); i += 5) {
    for (const auto& q : small) {
      for (const auto& t : {tensor(pool[i], q), par(q, pool[i]), with(pool[i], q), plus(q, pool[i])}) {
        const auto subsets = all_subsets(t.carrier());
        for (const auto& s : subsets) {
          for (const auto& s2 : subsets) {
            if (s.is_subset_of(s2)) ASSERT_TRUE(t.eval(s).is_subset_of(t.eval(s2)));
          }
        }
      }
    }
  }
}

TEST(Relation, DirectImageExamples) {
  const Carrier a = Carrier::atom("A", {"a"});
  const Carrier b = Carrier::atom("B", {"b1", "b2"});
  const Relation r(a, b, {{Element::atom(0), Element::atom(0)}, {Element::atom(0), Element::atom(1)}});
  EXPECT_EQ(direct_image(r, StateSet::full(a)), StateSet::full(b));
  EXPECT_TRUE(direct_image(r, StateSet(a)).empty());
  const StateSet s = set_of(b, {1});
  EXPECT_EQ(direct_image(Relation::identity(b), s), s);
}

TEST(Relation, ConverseAndComposition) {
  const Carrier a = Carrier::atom("A", {"a", "b"});
  const Carrier b = Carrier::atom("B", {"x", "y", "z"});
  const Relation r(a, b, {{Element::atom(0), Element::atom(2)}});
  const Relation rc = converse(r);
  EXPECT_TRUE(rc.contains(2, 0));
  EXPECT_EQ(rc.count(), 1u);
  EXPECT_EQ(converse(rc), r);
  EXPECT_EQ(compose(r, Relation::identity(a)), r);
  EXPECT_EQ(compose(Relation::identity(b), r), r);
  EXPECT_THROW(compose(r, r), CarrierMismatch);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Relation r1(a, b, Bits(6, rng() % 64));
    const Relation r2(b, a, Bits(6, rng() % 64));
    const Relation r3(a, b, Bits(6, rng() % 64));
    EXPECT_EQ(compose(r3, compose(r2, r1)), compose(compose(r3, r2), r1));
  }
}
