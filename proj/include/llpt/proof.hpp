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

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "llpt/formula.hpp"
#include "llpt/state_set.hpp"

namespace llpt {

/// A sequent-calculus proof tree.
///
/// The active formula of every rule is the last formula of each premise and
/// of the conclusion; Exchange reorders. Conclusions are never stored: they
/// are recomputed (and validated) by conclusion().
struct Proof {
  enum class Rule {
    kOneIntro,     // |- 1
    kTopIntro,     // |- G, top              (context = G)
    kBotIntro,     // |- G  =>  |- G, bot
    kParIntro,     // |- G, A, B  =>  |- G, A par B
    kTensorIntro,  // |- G, A   |- D, B  =>  |- G, D, A tensor B
    kPlusL,        // |- G, A  =>  |- G, A plus B   (formula = B)
    kPlusR,        // |- G, B  =>  |- G, A plus B   (formula = A)
    kWithIntro,    // |- G, A   |- G, B  =>  |- G, A with B
    kCut,          // |- G, A   |- D, A^  =>  |- G, D   (formula = A)
    kDereliction,  // |- G, A  =>  |- G, ?A
    kWeakening,    // |- G  =>  |- G, ?A             (formula = A)
    kContraction,  // |- G, ?A, ?A  =>  |- G, ?A
    kPromotion,    // |- ?G, A  =>  |- ?G, !A
    kAxiom,        // |- X^, X                       (formula = X, an atom)
    kExchange,     // |- G  =>  |- G[perm[0]], ..., G[perm[n-1]]
  };

  Rule rule = Rule::kOneIntro;
  std::vector<Proof> premises;
  Formula formula;
  Sequent context;
  std::optional<std::size_t> split;
  std::vector<std::size_t> permutation;

  static Proof one_intro() { return {}; }
  static Proof top_intro(Sequent context);
  static Proof bot_intro(Proof p);
  static Proof par_intro(Proof p);
  static Proof tensor_intro(Proof p1, Proof p2, std::optional<std::size_t> split = std::nullopt);
  static Proof plus_l(Proof p, Formula b);
  static Proof plus_r(Proof p, Formula a);
  static Proof with_intro(Proof p1, Proof p2);
  static Proof cut(Proof p1, Proof p2, Formula a);
  static Proof dereliction(Proof p);
  static Proof weakening(Proof p, Formula a);
  static Proof contraction(Proof p);
  static Proof promotion(Proof p);
  static Proof axiom(Formula x);
  static Proof exchange(Proof p, std::vector<std::size_t> permutation);

  bool operator==(const Proof&) const = default;
};

const char* rule_name(Proof::Rule rule);

class ProofError : public Error {
 public:
  enum class Code {
    kPromotionContextNotQuest,
    kTensorSplitOutOfRange,
    kCutFormulaMismatch,
    kPermutationInvalid,
    kContextMismatch,
    kWrongShape,
    kAxiomNotAtomic,
    kEmptySequent,
  };

  ProofError(Code code, const std::string& message) : Error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class DegreeBoundTooSmall : public Error {
 public:
  DegreeBoundTooSmall(std::size_t needed, std::size_t configured)
      : Error("proof needs degree bound " + std::to_string(needed) + " but the configured bound is " +
              std::to_string(configured)),
        needed_(needed),
        configured_(configured) {}
  std::size_t needed() const { return needed_; }
  std::size_t configured() const { return configured_; }

 private:
  std::size_t needed_;
  std::size_t configured_;
};

/// The sequent proved by `p`. Throws ProofError when a side condition fails.
Sequent conclusion(const Proof& p);

/// Smallest degree bound for which every multiset produced by a dereliction,
/// weakening, contraction or promotion in `p` fits in its carrier.
std::size_t required_degree(const Proof& p);

/// A proof denotation as tuples of carrier indices, one per sequent formula.
/// Tuples are ordered lexicographically, which is the canonical element order.
struct Denotation {
  Sequent sequent;
  std::vector<Carrier> carriers;
  std::set<std::vector<std::size_t>> tuples;
};

/// Tuple-level interpretation. Multisets above the degree bound are dropped,
/// which is exact for every rule except a Cut whose cut formula contains
/// exponentials (witnesses are then searched up to the bound only).
Denotation denote(const Proof& p, const Environment& env);

/// Tuples encoded as right-nested pairs over sequent_carrier(d.sequent).
StateSet encode(const Denotation& d, const Environment& env);
/// Inverse of encode.
Denotation decode(const Sequent& g, const StateSet& s, const Environment& env);

/// interpret(p) = encode(denote(p)). Throws DegreeBoundTooSmall.
StateSet interpret(const Proof& p, const Environment& env);

struct SoundnessReport {
  bool seed = false;
  Sequent sequent;
  StateSet denotation;
  /// Smallest member of the denotation missing from its image.
  std::optional<Element> counterexample;
  std::string counterexample_text;
};

/// Checks that `d` is a seed of the interface of `g`.
SoundnessReport check_seed_of_sequent(const Sequent& g, const StateSet& d, const Environment& env);

/// Interprets `p` and checks that the result is a seed of its conclusion.
SoundnessReport check_soundness(const Proof& p, const Environment& env);

}  // namespace llpt
