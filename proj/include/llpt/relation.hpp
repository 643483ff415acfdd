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

#include <utility>
#include <vector>

#include "llpt/carrier.hpp"
#include "llpt/state_set.hpp"

namespace llpt {

/// A binary relation between two carriers, stored as a subset of their product.
class Relation {
 public:
  Relation(Carrier source, Carrier target);
  /// `pairs` must be over Prod(source, target).
  Relation(Carrier source, Carrier target, Bits pairs);
  /// Throws CarrierMismatch if a pair is ill-typed.
  Relation(Carrier source, Carrier target, const std::vector<std::pair<Element, Element>>& pairs);
  /// Reads a subset of a product carrier as a relation between its factors.
  static Relation from_state_set(const StateSet& s);
  static Relation identity(const Carrier& c);

  const Carrier& source() const { return source_; }
  const Carrier& target() const { return target_; }
  const Bits& bits() const { return pairs_; }

  bool contains(std::size_t a, std::size_t b) const { return pairs_.test(a * target_.size() + b); }
  void insert(std::size_t a, std::size_t b) { pairs_.set(a * target_.size() + b); }
  std::size_t count() const { return pairs_.count(); }
  /// Targets related to `a`, as bits over the target carrier.
  Bits row(std::size_t a) const;

  /// The relation as a subset of Prod(source, target).
  StateSet as_state_set() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  Carrier source_;
  Carrier target_;
  Bits pairs_;
};

/// { b | exists a in s, (a, b) in r }.
StateSet direct_image(const Relation& r, const StateSet& s);
Bits direct_image_bits(const Relation& r, const Bits& s);

Relation converse(const Relation& r);

/// r2 . r1 = { (a, c) | exists b, (a, b) in r1 and (b, c) in r2 }.
/// Throws CarrierMismatch unless r1.target() == r2.source().
Relation compose(const Relation& r2, const Relation& r1);

}  // namespace llpt
