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
#include <span>
#include <vector>

#include "llpt/carrier.hpp"
#include "llpt/state_set.hpp"
#include "llpt/transformer.hpp"

namespace llpt {

/// Bag product of `factors` (all over `bags.base()`), as a subset of `bags`:
/// every multiset obtained by picking one element from each factor. With n
/// factors only bags of size exactly n occur; no factors gives {[]}.
/// Throws DegreeOverflow if there are more factors than `bags.max_degree()`.
StateSet bag_product(const Carrier& bags, std::span<const StateSet> factors);

/// Set-lifted product U * V = { u + v } over the same bag carrier; sums
/// larger than the degree bound are dropped.
Bits bag_set_product(const Carrier& bags, const Bits& u, const Bits& v);

/// Index of l + l' when it stays within the degree bound.
std::optional<std::size_t> bag_sum(const Carrier& bags, std::size_t l, std::size_t l2);

/// Ordered ways of writing the multiset `bag` (sorted indices) as
/// l_1 + ... + l_parts. Each tuple is a list of sorted index vectors.
/// Deterministic order: lexicographic in the multiplicity given to l_1, l_2, ...
std::vector<std::vector<std::vector<std::size_t>>> bag_splits(std::span<const std::size_t> bag,
                                                              std::size_t parts);
/// Element-level variant over a bag carrier.
std::vector<std::vector<Element>> bag_splits(const Carrier& bags, const Element& bag, std::size_t parts);

/// Bits over `bags` of the bags with exactly `size` elements.
Bits bag_slice(const Carrier& bags, std::size_t size);

/// Checks the splitting law for `bang(t, k)`:
///   l + l' in !t(U)  iff  some V * V' inside U has l in !t(V) and l' in !t(V').
/// The right side is decided by brute force over V inside the |l|-slice and V'
/// inside the |l'|-slice, which is exact because membership of a size-n bag
/// only depends on the size-n slice of the argument. Returns whether both sides agree.
bool bang_split_law(const Transformer& bang_t, std::size_t l, std::size_t l2, const Bits& u);

/// The canonical bijection between multisets over X + Y and pairs of
/// multisets (tag filtering), restricted to total size <= k.
class SumBagIsomorphism {
 public:
  SumBagIsomorphism(const Carrier& x, const Carrier& y, std::size_t k);

  /// Bag(X + Y, k).
  const Carrier& sum_bags() const { return sum_bags_; }
  /// Bag(X, k) x Bag(Y, k).
  const Carrier& pair_carrier() const { return pair_carrier_; }

  std::size_t to_pair(std::size_t sum_bag) const { return forward_[sum_bag]; }
  /// Inverse on pairs of total size <= k.
  std::optional<std::size_t> to_sum(std::size_t pair_index) const;
  /// Image of a subset; pairs of total size > k are never hit.
  Bits to_pair(const Bits& s) const;
  /// Preimage; pairs outside the bijection are ignored.
  Bits to_sum(const Bits& s) const;
  /// Pairs of total size <= k.
  const Bits& domain() const { return domain_; }

 private:
  Carrier sum_bags_;
  Carrier pair_carrier_;
  std::vector<std::size_t> forward_;
  std::vector<std::optional<std::size_t>> backward_;
  Bits domain_;
};

}  // namespace llpt
