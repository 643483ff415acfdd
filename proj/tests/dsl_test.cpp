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

#include <fstream>
#include <sstream>

#include "llpt/dsl.hpp"
#include "llpt/generators.hpp"

using namespace llpt;
using dsl::ParseError;

namespace {

const char* kSwitchAtom = "(atom X (states m p) (table (() ()) ((p) (m)) ((m) (p)) ((m p) (m p))))";

std::string corpus(const std::string& name) {
  std::ifstream in(std::string(LLPT_CORPUS_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ParseError parse_error(const std::string& text) {
  try {
    dsl::parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError(ParseError::Kind::kSyntax, {}, "");
}

}  // namespace

TEST(Parse, SwitchAtomIsTheSwitch) {
  const dsl::Document doc = dsl::parse(kSwitchAtom);
  const Environment env = doc.environment();
  const Transformer& t = env.atom("X").transformer();
  const Transformer sw = switch_atom().transformer();
  for (std::uint64_t m = 0; m < 4; ++m) EXPECT_EQ(t.image(Bits(2, m)), sw.image(Bits(2, m)));
  EXPECT_TRUE(doc.notes.empty());
  EXPECT_EQ(env.degree, 3u);
}

TEST(Parse, MagicBuiltin) {
  const dsl::Document doc = dsl::parse("(atom M (states a b) (builtin magic))");
  const Transformer& t = doc.environment().atom("M").transformer();
  EXPECT_EQ(t.kind(), Transformer::Kind::kMagic);
  EXPECT_EQ(t.image(Bits(2)), Bits(2, 3));
}

TEST(Parse, DegreeDirectiveAndOverride) {
  const dsl::Document doc = dsl::parse("(degree 2)\n(atom I (states u) (builtin identity))");
  EXPECT_EQ(doc.degree(), std::optional<std::size_t>(2));
  EXPECT_EQ(doc.environment().degree, 2u);
  EXPECT_EQ(doc.environment(5).degree, 5u);
}

TEST(Parse, UnboundAtomIsReported) {
  const ParseError e = parse_error("(formula F (par (neg X) (pos X)))");
  EXPECT_EQ(e.kind(), ParseError::Kind::kUnbound);
  EXPECT_EQ(e.where().line, 1u);
  EXPECT_EQ(e.where().column, 22u);
  EXPECT_EQ(e.detail(), "unbound atom X");
}

TEST(Parse, ForwardReferencesAreRejected) {
  EXPECT_EQ(parse_error(std::string(kSwitchAtom) + "(proof a b)\n(proof b (axiom (pos X)))").kind(),
            ParseError::Kind::kUnbound);
  EXPECT_EQ(parse_error("(formula F G)\n(formula G one)").kind(), ParseError::Kind::kUnbound);
}

TEST(Parse, DuplicatesAreRejected) {
  const std::string twice = std::string(kSwitchAtom) + "\n" + kSwitchAtom;
  const ParseError e = parse_error(twice);
  EXPECT_EQ(e.kind(), ParseError::Kind::kDuplicate);
  EXPECT_EQ(e.where().line, 2u);
  EXPECT_EQ(parse_error("(formula F one) (formula F bot)").kind(), ParseError::Kind::kDuplicate);
  EXPECT_EQ(parse_error("(degree 2) (degree 3)").kind(), ParseError::Kind::kDuplicate);
  EXPECT_EQ(parse_error("(atom X (states a a) (builtin magic))").kind(), ParseError::Kind::kDuplicate);
  // Different kinds may share a name.
  EXPECT_NO_THROW(dsl::parse(std::string(kSwitchAtom) + "(formula X (pos X)) (proof X (axiom X))"));
}

TEST(Parse, NonMonotonicTableNamesThePair) {
  const ParseError e = parse_error("(atom X (states m p) (table (() (m)) ((m) ()) ((p) (m)) ((m p) (m))))");
  EXPECT_EQ(e.kind(), ParseError::Kind::kNonMonotonic);
  EXPECT_EQ(e.detail(), "table for X is not monotone: () is inside (m) but its image (m) is not inside ()");
}

TEST(Parse, IncompleteOrRepeatedTables) {
  EXPECT_EQ(parse_error("(atom X (states m) (table (() ())))").kind(), ParseError::Kind::kTable);
  EXPECT_EQ(parse_error("(atom X (states m) (table (() ()) (() ()) ((m) (m))))").kind(), ParseError::Kind::kTable);
  EXPECT_EQ(parse_error("(atom X (states m) (table (() ()) ((q) (m))))").kind(), ParseError::Kind::kTable);
}

TEST(Parse, NotesForUnusualTables) {
  const dsl::Document doc = dsl::parse("(atom K (states a b) (table (() (a)) ((a) (a)) ((b) (a)) ((a b) (a))))");
  ASSERT_EQ(doc.notes.size(), 2u);
  EXPECT_EQ(doc.notes[0], "atom K maps () to (a)");
  EXPECT_EQ(doc.notes[1], "atom K maps the full set to (a)");
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  ParseError e = parse_error("(atom X\n  (states m p)");
  EXPECT_EQ(e.kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(e.where().line, 1u);
  EXPECT_EQ(e.where().column, 1u);
  e = parse_error("(formula F one))");
  EXPECT_EQ(e.where().column, 16u);
  e = parse_error(std::string(kSwitchAtom) + "\n(proof P (frobnicate))");
  EXPECT_EQ(e.where().line, 2u);
  EXPECT_EQ(e.where().column, 11u);
  EXPECT_EQ(parse_error("(formula F (tensor one))").kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(parse_error("(widget W)").kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(parse_error("(proof P (cut (one-intro) (one-intro)))").kind(), ParseError::Kind::kSyntax);
}

TEST(Parse, InvalidProofsAreRejected) {
  const ParseError e = parse_error(std::string(kSwitchAtom) + "(proof P (promote (axiom (pos X))))");
  EXPECT_EQ(e.kind(), ParseError::Kind::kProof);
  EXPECT_EQ(parse_error(std::string(kSwitchAtom) + "(proof P (axiom (neg X)))").kind(), ParseError::Kind::kProof);
  EXPECT_EQ(parse_error("(proof P (tensor-intro (one-intro) (one-intro) :split 3))").kind(), ParseError::Kind::kProof);
}

TEST(Parse, FormulaSugar) {
  const dsl::Document doc =
      dsl::parse(std::string(kSwitchAtom) + "(formula A (lolli (pos X) one)) (formula B (not (tensor A bot)))");
  EXPECT_EQ(doc.formula("A")->formula, Formula::par(Formula::neg("X"), Formula::one()));
  EXPECT_EQ(dsl::print(doc.formula("B")->formula), "(par (tensor (pos X) bot) one)");
}

TEST(Parse, ProofSyntaxBuildsTheTree) {
  const dsl::Document doc = dsl::parse(std::string(kSwitchAtom) +
                                       "(proof a (axiom (pos X)))"
                                       "(proof t (tensor-intro a a :split 1))"
                                       "(proof c (cut a (exch a :perm (1 0)) :formula (pos X)))");
  const Proof a = Proof::axiom(Formula::pos("X"));
  EXPECT_EQ(doc.proof("t")->proof, Proof::tensor_intro(a, a, 1));
  EXPECT_EQ(doc.proof("c")->proof, Proof::cut(a, Proof::exchange(a, {1, 0}), Formula::pos("X")));
  EXPECT_EQ(doc.proofs().size(), 3u);
}

TEST(Print, RoundTripsTheCorpus) {
  for (const char* name : {"switch.llpt", "magic.llpt", "random.llpt"}) {
    SCOPED_TRACE(name);
    const dsl::Document doc = dsl::parse(corpus(name));
    const std::string text = dsl::print(doc);
    const dsl::Document again = dsl::parse(text);
    EXPECT_EQ(again, doc);
    EXPECT_EQ(dsl::print(again), text);
  }
}

TEST(Print, ProofsUseRuleNames) {
  const Proof p = Proof::promotion(Proof::exchange(Proof::weakening(Proof::one_intro(), Formula::pos("X")), {1, 0}));
  EXPECT_EQ(dsl::print(p), "(promote (exch (weaken (one-intro) :formula (pos X)) :perm (1 0)))");
  EXPECT_EQ(dsl::print(Proof::tensor_intro(Proof::one_intro(), Proof::one_intro())), "(tensor-intro (one-intro) (one-intro))");
}

TEST(Elements, LiteralsResolveAgainstCarriers) {
  const Carrier x = Carrier::atom("X", {"m", "p"});
  const Carrier sum = Carrier::sum(x, Carrier::unit());
  const Carrier bags = Carrier::bag(x, 2);
  const Carrier prod = Carrier::product(sum, bags);
  const Element e = dsl::parse_element("((r *) [p m])", prod);
  EXPECT_EQ(format_element(prod, e), "((r *) [m p])");
  EXPECT_EQ(dsl::parse_element("(l p)", sum), Element::inl(Element::atom(1)));
  EXPECT_THROW(dsl::parse_element("[m m m]", bags), Error);
  EXPECT_THROW(dsl::parse_element("q", x), Error);
  EXPECT_THROW(dsl::parse_element("(m p)", sum), Error);
}

TEST(Elements, RelationsFromPairs) {
  const dsl::Document doc = dsl::parse("(relation R (pairs (m p) (p m)))");
  const Carrier x = Carrier::atom("X", {"m", "p"});
  const Relation r = dsl::relation_of(*doc.relation("R"), x, x);
  EXPECT_TRUE(r.contains(0, 1));
  EXPECT_TRUE(r.contains(1, 0));
  EXPECT_EQ(r.count(), 2u);
  EXPECT_THROW(dsl::relation_of(*doc.relation("R"), x, Carrier::unit()), Error);
}
