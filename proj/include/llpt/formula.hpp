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

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "llpt/carrier.hpp"
#include "llpt/error.hpp"
#include "llpt/transformer.hpp"

namespace llpt {

/// A linear-logic formula in negation normal form.
struct Formula {
  enum class Kind {
    kPosAtom,
    kNegAtom,
    kOne,
    kBot,
    kZero,
    kTop,
    kTensor,
    kPar,
    kWith,
    kPlus,
    kBang,
    kQuest,
  };

  Kind kind = Kind::kOne;
  std::string atom;
  std::vector<Formula> args;

  static Formula pos(std::string name) { return {Kind::kPosAtom, std::move(name), {}}; }
  static Formula neg(std::string name) { return {Kind::kNegAtom, std::move(name), {}}; }
  static Formula one() { return {Kind::kOne, {}, {}}; }
  static Formula bot() { return {Kind::kBot, {}, {}}; }
  static Formula zero() { return {Kind::kZero, {}, {}}; }
  static Formula top() { return {Kind::kTop, {}, {}}; }
  static Formula tensor(Formula a, Formula b) { return binary(Kind::kTensor, std::move(a), std::move(b)); }
  static Formula par(Formula a, Formula b) { return binary(Kind::kPar, std::move(a), std::move(b)); }
  static Formula with(Formula a, Formula b) { return binary(Kind::kWith, std::move(a), std::move(b)); }
  static Formula plus(Formula a, Formula b) { return binary(Kind::kPlus, std::move(a), std::move(b)); }
  static Formula bang(Formula a) { return {Kind::kBang, {}, {std::move(a)}}; }
  static Formula quest(Formula a) { return {Kind::kQuest, {}, {std::move(a)}}; }

  bool is_atom() const { return kind == Kind::kPosAtom || kind == Kind::kNegAtom; }
  const Formula& left() const { return args.at(0); }
  const Formula& right() const { return args.at(1); }
  const Formula& body() const { return args.at(0); }

  bool operator==(const Formula&) const = default;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  static Formula binary(Kind k, Formula a, Formula b) {
    Formula f{k, {}, {}};
    f.args.reserve(2);
    f.args.push_back(std::move(a));
    f.args.push_back(std::move(b));
    return f;
  }
};

/// Linear negation, pushed to the atoms.
Formula negate(const Formula& f);

/// `A -o B` as `par(negate A, B)`.
inline Formula linear_arrow(const Formula& a, const Formula& b) { return Formula::par(negate(a), b); }

/// Surface syntax: `(pos X)`, `(neg X)`, `one`, `(tensor A B)`, ...
std::string to_string(const Formula& f);

/// Atoms occurring in `f`.
std::vector<std::string> atoms_of(const Formula& f);

using Sequent = std::vector<Formula>;

std::string to_string(const Sequent& g);

/// An atom name was not bound by the environment.
class UnboundAtom : public Error {
 public:
  explicit UnboundAtom(std::string name) : Error("unbound atom " + name), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Valuation of atoms plus the degree bound used for exponentials.
struct Environment {
  std::map<std::string, Interface> atoms;
  std::size_t degree = 3;

  const Interface& atom(const std::string& name) const;
};

/// State space of `f` (Prod for tensor/par, Sum for with/plus, Bag for !/?).
Carrier carrier_of(const Formula& f, const Environment& env);

/// The interface denoted by `f`. Throws UnboundAtom.
Interface semantics(const Formula& f, const Environment& env);

/// The interface of `A1, ..., An`, i.e. A1 par (A2 par (... An)). Throws on an
/// empty sequent.
Interface sequent_interface(const Sequent& g, const Environment& env);

/// Carrier of the right-nested sequent product.
Carrier sequent_carrier(const Sequent& g, const Environment& env);

}  // namespace llpt
