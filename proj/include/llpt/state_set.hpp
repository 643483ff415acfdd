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
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "llpt/carrier.hpp"

namespace llpt {

/// Subset of a carrier, one bit per carrier index.
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Calls `f(i)` for every set bit, in increasing index order.
template <class F>
void for_each_bit(const Bits& bits, F&& f) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) f(i);
}

/// Bits of a given size with exactly the listed indices set.
Bits make_bits(std::size_t size, std::initializer_list<std::size_t> members);

/// The rectangle `x * y` inside a product of sizes |x| * |y|.
Bits rectangle_bits(const Bits& x, const Bits& y);

/// Keeps only the inclusion-minimal sets of `family` (duplicates removed).
/// Result is sorted by (popcount, bits) so it is deterministic.
std::vector<Bits> minimize(std::vector<Bits> family);

/// Minimal sets hitting every member of `family`, over a universe of `universe` bits.
/// An empty family yields {empty set}; a family containing the empty set yields {}.
std::vector<Bits> minimal_transversals(const std::vector<Bits>& family, std::size_t universe);

/// A finite subset of a carrier.
///
/// Values are immutable in spirit: the mutating helpers exist for building
/// sets and are not used on sets shared with transformers.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(Carrier carrier);
  StateSet(Carrier carrier, Bits bits);
  /// Throws CarrierMismatch if some element is not a member of `carrier`.
  StateSet(Carrier carrier, const std::vector<Element>& elements);

  static StateSet full(const Carrier& carrier);

  const Carrier& carrier() const { return carrier_; }
  const Bits& bits() const { return bits_; }

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t index) const { return index < bits_.size() && bits_.test(index); }
  bool contains(const Element& e) const;

  StateSet& insert(std::size_t index);
  StateSet& insert(const Element& e);

  /// Members in canonical order.
  std::vector<Element> members() const;
  std::vector<std::size_t> indices() const;

  StateSet complement() const;
  bool is_subset_of(const StateSet& other) const;

  friend StateSet operator|(const StateSet& a, const StateSet& b);
  friend StateSet operator&(const StateSet& a, const StateSet& b);
  friend StateSet operator-(const StateSet& a, const StateSet& b);
  friend bool operator==(const StateSet& a, const StateSet& b);

  /// `{e1 e2 ...}` in canonical order.
  std::string to_string() const;

 private:
  Carrier carrier_;
  Bits bits_;
};

/// Throws CarrierMismatch unless `a == b`.
void require_same_carrier(const Carrier& expected, const Carrier& actual);

/// Product set `x * y` over `Prod(x.carrier, y.carrier)`.
StateSet cartesian(const StateSet& x, const StateSet& y);

/// Every subset of `carrier` (2^n of them) in increasing bitmask order.
/// Throws CarrierTooLarge if `carrier.size() > cap`.
std::vector<StateSet> all_subsets(const Carrier& carrier, std::size_t cap = 16);

}  // namespace llpt
