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

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "llpt/formula.hpp"
#include "llpt/generators.hpp"
#include "llpt/proof.hpp"

namespace fixtures {

using namespace llpt;

inline Environment switch_env(std::size_t degree = 3) {
  Environment env;
  env.atoms.emplace("X", switch_atom("X"));
  env.degree = degree;
  return env;
}

inline Environment magic_env(std::size_t degree = 3) {
  Environment env;
  env.atoms.emplace("X", Interface(Transformer::magic(Carrier::atom("X", {"a", "b"}))));
  env.degree = degree;
  return env;
}

inline Environment random_env(std::uint64_t seed, std::size_t states = 3, std::size_t degree = 3) {
  std::mt19937_64 rng(seed);
  Environment env;
  env.atoms.emplace("X", Interface(random_monotone_table(numbered_atom("X", states), rng)));
  env.degree = degree;
  return env;
}

inline const Formula& X() {
  static const Formula f = Formula::pos("X");
  return f;
}

inline Proof ax() { return Proof::axiom(X()); }

/// |- ?X^, X
inline Proof derelicted_ax() {
  return Proof::exchange(Proof::dereliction(Proof::exchange(ax(), {1, 0})), {1, 0});
}

/// |- ?X^, ?X^, X tensor X
inline Proof two_context_tensor() { return Proof::tensor_intro(derelicted_ax(), derelicted_ax(), 1); }

/// Proofs covering every rule; names are stable for test output.
inline std::vector<std::pair<std::string, Proof>> sample_proofs() {
  using P = Proof;
  std::vector<std::pair<std::string, Proof>> out;
  out.emplace_back("axiom", ax());
  out.emplace_back("par_axiom", P::par_intro(ax()));
  out.emplace_back("one", P::one_intro());
  out.emplace_back("top", P::top_intro({X(), Formula::neg("X")}));
  out.emplace_back("bot", P::bot_intro(ax()));
  out.emplace_back("tensor", P::tensor_intro(ax(), ax(), 1));
  out.emplace_back("plus_l", P::plus_l(ax(), Formula::one()));
  out.emplace_back("plus_r", P::plus_r(ax(), Formula::bot()));
  out.emplace_back("with", P::with_intro(ax(), P::plus_l(ax(), Formula::one())));
  out.emplace_back("cut", P::cut(ax(), P::exchange(ax(), {1, 0}), X()));
  out.emplace_back("cut_tensor", P::cut(P::tensor_intro(ax(), ax(), 1),
                                        P::par_intro(P::exchange(P::tensor_intro(ax(), ax(), 1), {2, 0, 1})),
                                        Formula::tensor(X(), X())));
  out.emplace_back("derelict", P::dereliction(ax()));
  out.emplace_back("weaken", P::weakening(ax(), X()));
  out.emplace_back("contract", P::contraction(P::exchange(two_context_tensor(), {2, 0, 1})));
  out.emplace_back("promote0", P::promotion(P::one_intro()));
  out.emplace_back("promote1", P::promotion(derelicted_ax()));
  out.emplace_back("promote2", P::promotion(two_context_tensor()));
  out.emplace_back("promote2_weak",
                   P::promotion(P::exchange(P::weakening(derelicted_ax(), Formula::one()), {2, 0, 1})));
  return out;
}

}  // namespace fixtures
