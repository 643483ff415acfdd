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

#include "llpt/formula.hpp"

#include <algorithm>
#include <set>

namespace llpt {

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  const std::size_t n = std::min(a.args.size(), b.args.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  }
  return a.args.size() <=> b.args.size();
}

Formula negate(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kPosAtom:
      return Formula::neg(f.atom);
    case K::kNegAtom:
      return Formula::pos(f.atom);
    case K::kOne:
      return Formula::bot();
    case K::kBot:
      return Formula::one();
    case K::kZero:
      return Formula::top();
    case K::kTop:
      return Formula::zero();
    case K::kTensor:
      return Formula::par(negate(f.left()), negate(f.right()));
    case K::kPar:
      return Formula::tensor(negate(f.left()), negate(f.right()));
    case K::kWith:
      return Formula::plus(negate(f.left()), negate(f.right()));
    case K::kPlus:
      return Formula::with(negate(f.left()), negate(f.right()));
    case K::kBang:
      return Formula::quest(negate(f.body()));
    case K::kQuest:
      return Formula::bang(negate(f.body()));
  }
  return f;
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kPosAtom:
      return "(pos " + f.atom + ")";
    case K::kNegAtom:
      return "(neg " + f.atom + ")";
    case K::kOne:
      return "one";
    case K::kBot:
      return "bot";
    case K::kZero:
      return "zero";
    case K::kTop:
      return "top";
    case K::kTensor:
      return "(tensor " + to_string(f.left()) + " " + to_string(f.right()) + ")";
    case K::kPar:
      return "(par " + to_string(f.left()) + " " + to_string(f.right()) + ")";
    case K::kWith:
      return "(with " + to_string(f.left()) + " " + to_string(f.right()) + ")";
    case K::kPlus:
      return "(plus " + to_string(f.left()) + " " + to_string(f.right()) + ")";
    case K::kBang:
      return "(bang " + to_string(f.body()) + ")";
    case K::kQuest:
      return "(quest " + to_string(f.body()) + ")";
  }
  return "?";
}

std::string to_string(const Sequent& g) {
  std::string out = "|-";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(g[i]);
  }
  return out;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) out.insert(f.atom);
  for (const auto& a : f.args) collect_atoms(a, out);
}

}  // namespace

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

const Interface& Environment::atom(const std::string& name) const {
  auto it = atoms.find(name);
  if (it == atoms.end()) throw UnboundAtom(name);
  return it->second;
}

Carrier carrier_of(const Formula& f, const Environment& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kPosAtom:
    case K::kNegAtom:
      return env.atom(f.atom).carrier();
    case K::kOne:
    case K::kBot:
      return Carrier::unit();
    case K::kZero:
    case K::kTop:
      return Carrier::empty();
    case K::kTensor:
    case K::kPar:
      return Carrier::product(carrier_of(f.left(), env), carrier_of(f.right(), env));
    case K::kWith:
    case K::kPlus:
      return Carrier::sum(carrier_of(f.left(), env), carrier_of(f.right(), env));
    case K::kBang:
    case K::kQuest:
      return Carrier::bag(carrier_of(f.body(), env), env.degree);
  }
  return Carrier::unit();
}

namespace {

Transformer denote(const Formula& f, const Environment& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kPosAtom:
      return env.atom(f.atom).transformer();
    case K::kNegAtom:
      return dual(env.atom(f.atom).transformer());
    case K::kOne:
      return units().one.transformer();
    case K::kBot:
      return units().bottom.transformer();
    case K::kZero:
      return units().zero.transformer();
    case K::kTop:
      return units().top.transformer();
    case K::kTensor:
      return tensor(denote(f.left(), env), denote(f.right(), env));
    case K::kPar:
      return par(denote(f.left(), env), denote(f.right(), env));
    case K::kWith:
      return with(denote(f.left(), env), denote(f.right(), env));
    case K::kPlus:
      return plus(denote(f.left(), env), denote(f.right(), env));
    case K::kBang:
      return bang(denote(f.body(), env), env.degree);
    case K::kQuest:
      return quest(denote(f.body(), env), env.degree);
  }
  return Transformer();
}

}  // namespace

Interface semantics(const Formula& f, const Environment& env) { return Interface(denote(f, env)); }

Interface sequent_interface(const Sequent& g, const Environment& env) {
  if (g.empty()) throw Error("the empty sequent has no interpretation");
  Transformer t = denote(g.back(), env);
  for (std::size_t i = g.size() - 1; i-- > 0;) t = par(denote(g[i], env), t);
  return Interface(std::move(t));
}

Carrier sequent_carrier(const Sequent& g, const Environment& env) {
  if (g.empty()) throw Error("the empty sequent has no interpretation");
  Carrier c = carrier_of(g.back(), env);
  for (std::size_t i = g.size() - 1; i-- > 0;) c = Carrier::product(carrier_of(g[i], env), c);
  return c;
}

}  // namespace llpt
