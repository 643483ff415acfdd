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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace llpt {

/// A state of some carrier.
///
/// Elements are plain values; which carrier they belong to is not recorded.
/// Bags keep their children sorted, so two bags are equal iff they denote the
/// same multiset. The total order is the canonical order used everywhere for
/// enumeration and printing: first by kind (Star is minimal), then by atom
/// index, then lexicographically on children.
struct Element {
  enum class Kind : unsigned char { kStar, kAtom, kPair, kInL, kInR, kBag };

  Kind kind = Kind::kStar;
  std::size_t index = 0;
  std::vector<Element> children;

  static Element star() { return {}; }
  static Element atom(std::size_t i) { return {Kind::kAtom, i, {}}; }
  static Element pair(Element a, Element b);
  static Element inl(Element a);
  static Element inr(Element b);
  /// Sorts `items` into canonical order.
  static Element bag(std::vector<Element> items);

  const Element& first() const { return children.at(0); }
  const Element& second() const { return children.at(1); }
  const Element& payload() const { return children.at(0); }

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
};

/// A finite state space.
///
/// Carriers are immutable and cheap to copy (shared structure). Every carrier
/// enumerates its elements eagerly at construction; the position of an element
/// in that enumeration is its *index*, and indices follow the canonical
/// Element order. For products the index of (a, b) is `ia * |B| + ib`, for
/// sums the right injections follow all left injections.
class Carrier {
 public:
  enum class Kind { kAtom, kUnit, kVoid, kProd, kSum, kBag };

  /// Hard limit on the number of enumerated elements of any carrier.
  static constexpr std::size_t kMaxElements = std::size_t{1} << 20;

  /// Throws llpt::Error on empty or duplicate state names.
  static Carrier atom(std::string name, std::vector<std::string> states);
  static Carrier unit();
  static Carrier empty();
  static Carrier product(const Carrier& left, const Carrier& right);
  static Carrier sum(const Carrier& left, const Carrier& right);
  /// Multisets over `base` of size at most `max_degree`.
  static Carrier bag(const Carrier& base, std::size_t max_degree);

  Carrier();  // the unit carrier

  Kind kind() const;
  std::size_t size() const;
  const Element& element(std::size_t i) const;
  const std::vector<Element>& elements() const;
  std::optional<std::size_t> index_of(const Element& e) const;
  bool is_member(const Element& e) const { return index_of(e).has_value(); }

  // Atom
  const std::string& name() const;
  const std::vector<std::string>& states() const;
  std::optional<std::size_t> state_index(const std::string& state) const;

  // Prod / Sum
  const Carrier& left() const;
  const Carrier& right() const;

  // Bag
  const Carrier& base() const;
  std::size_t max_degree() const;
  /// Sorted base indices of the bag with index `i`.
  std::span<const std::size_t> bag_contents(std::size_t i) const;
  /// Index of the bag with the given (sorted) base indices, if within degree.
  std::optional<std::size_t> bag_index(std::span<const std::size_t> sorted_contents) const;
  /// Number of elements of the bag with index `i`.
  std::size_t bag_size(std::size_t i) const { return bag_contents(i).size(); }

  std::string to_string() const;

  friend bool operator==(const Carrier& a, const Carrier& b);

 private:
  struct Node;
  explicit Carrier(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Renders an element in the text syntax: atom states by name, `*`, `(a b)`
/// for pairs, `(l e)` / `(r e)` for injections, `[e1 e2]` for bags.
std::string format_element(const Carrier& carrier, const Element& e);

/// Number of multisets of size <= `degree` over `n` base elements.
std::size_t bag_count(std::size_t n, std::size_t degree);

}  // namespace llpt
