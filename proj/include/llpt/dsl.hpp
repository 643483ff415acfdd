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
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "llpt/carrier.hpp"
#include "llpt/error.hpp"
#include "llpt/formula.hpp"
#include "llpt/proof.hpp"
#include "llpt/relation.hpp"
#include "llpt/state_set.hpp"

namespace llpt::dsl {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kDuplicate, kUnbound, kTable, kNonMonotonic, kProof };

  ParseError(Kind kind, Position at, const std::string& detail);

  Kind kind() const { return kind_; }
  Position where() const { return at_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  Position at_;
  std::string detail_;
};

/// An element literal before it meets a carrier. `(x y)` reads as a pair over
/// a product and as an injection over a sum (`l` / `r` head).
struct Literal {
  enum class Kind { kName, kStar, kList, kBag };
  Kind kind = Kind::kStar;
  std::string name;
  std::vector<Literal> items;

  bool operator==(const Literal&) const = default;
};

std::string to_string(const Literal& lit);

/// Types a literal. Throws Error when it does not denote a member of `c`.
Element resolve(const Literal& lit, const Carrier& c);

/// Parses one element literal such as `(m [p p])` against `c`.
Element parse_element(std::string_view text, const Carrier& c);

struct DegreeDecl {
  std::size_t degree = 3;
  bool operator==(const DegreeDecl&) const = default;
};

struct AtomDecl {
  enum class Body { kTable, kMagic, kIdentity };
  std::string name;
  std::vector<std::string> states;
  Body body = Body::kTable;
  /// images[mask] for kTable; empty otherwise.
  std::vector<Bits> images;

  Carrier carrier() const;
  /// Throws CarrierTooLarge when a table has more than `max_states` states.
  Interface interface(std::size_t max_states = Transformer::kDefaultMaxTableStates) const;
  bool operator==(const AtomDecl&) const = default;
};

struct FormulaDecl {
  std::string name;
  Formula formula;
  bool operator==(const FormulaDecl&) const = default;
};

struct ProofDecl {
  std::string name;
  Proof proof;
  bool operator==(const ProofDecl&) const = default;
};

/// A relation given by its pairs; its carriers come from the command using it.
struct RelationDecl {
  std::string name;
  std::vector<Literal> pairs;
  bool operator==(const RelationDecl&) const = default;
};

using Declaration = std::variant<DegreeDecl, AtomDecl, FormulaDecl, ProofDecl, RelationDecl>;

struct Document {
  std::vector<Declaration> declarations;
  /// Remarks about well-formed but unusual input. Not part of equality.
  std::vector<std::string> notes;

  std::optional<std::size_t> degree() const;
  const AtomDecl* atom(const std::string& name) const;
  const FormulaDecl* formula(const std::string& name) const;
  const ProofDecl* proof(const std::string& name) const;
  const RelationDecl* relation(const std::string& name) const;
  std::vector<const ProofDecl*> proofs() const;

  /// Degree: `degree_override`, else the file directive, else 3.
  Environment environment(std::optional<std::size_t> degree_override = std::nullopt,
                          std::size_t max_states = Transformer::kDefaultMaxTableStates) const;

  bool operator==(const Document& other) const { return declarations == other.declarations; }
};

/// Parses a whole file. Names are unique per kind and must be declared before
/// use. Atom tables list every subset once and must be monotone.
Document parse(std::string_view text);

/// Canonical text; parse(print(d)) == d.
std::string print(const Document& doc);
std::string print(const Formula& f);
std::string print(const Proof& p);

/// Reads `pairs` as a relation between `source` and `target`.
Relation relation_of(const RelationDecl& decl, const Carrier& source, const Carrier& target);

}  // namespace llpt::dsl
