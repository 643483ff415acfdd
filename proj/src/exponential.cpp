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

#include "llpt/exponential.hpp"

#include <algorithm>

#include "llpt/error.hpp"

namespace llpt {

StateSet bag_product(const Carrier& bags, std::span<const StateSet> factors) {
  if (bags.kind() != Carrier::Kind::kBag) throw CarrierMismatch("a bag carrier", bags.to_string());
  if (factors.size() > bags.max_degree()) throw DegreeOverflow(factors.size(), bags.max_degree());
  for (const auto& f : factors) require_same_carrier(bags.base(), f.carrier());

  StateSet out(bags);
  std::vector<std::size_t> picks(factors.size());
  std::vector<std::size_t> sorted(factors.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == factors.size()) {
      std::copy(picks.begin(), picks.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      out.insert(*bags.bag_index(sorted));
      return;
    }
    for_each_bit(factors[i].bits(), [&](std::size_t b) {
      picks[i] = b;
      self(self, i + 1);
    });
  };
  rec(rec, 0);
  return out;
}

std::optional<std::size_t> bag_sum(const Carrier& bags, std::size_t l, std::size_t l2) {
  auto a = bags.bag_contents(l);
  auto b = bags.bag_contents(l2);
  if (a.size() + b.size() > bags.max_degree()) return std::nullopt;
  std::vector<std::size_t> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return bags.bag_index(merged);
}

Bits bag_set_product(const Carrier& bags, const Bits& u, const Bits& v) {
  Bits out(bags.size());
  for_each_bit(u, [&](std::size_t a) {
    for_each_bit(v, [&](std::size_t b) {
      if (auto s = bag_sum(bags, a, b)) out.set(*s);
    });
  });
  return out;
}

std::vector<std::vector<std::vector<std::size_t>>> bag_splits(std::span<const std::size_t> bag,
                                                              std::size_t parts) {
  using Split = std::vector<std::vector<std::size_t>>;
  if (parts == 0) {
    if (bag.empty()) return {Split{}};
    return {};
  }
  // Distinct values with multiplicities (bag is sorted).
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t v : bag) {
    if (!groups.empty() && groups.back().first == v) {
      ++groups.back().second;
    } else {
      groups.emplace_back(v, 1);
    }
  }

  // Compositions of each multiplicity into `parts` slots, first slot largest first.
  std::vector<Split> out;
  Split current(parts);
  auto compose_group = [&](auto&& self, std::size_t g, std::size_t slot, std::size_t left) -> void {
    if (g == groups.size()) {
      out.push_back(current);
      return;
    }
    const std::size_t value = groups[g].first;
    const std::size_t lo = (slot + 1 == parts) ? left : 0;
    for (std::size_t take = left + 1; take-- > lo;) {
      current[slot].insert(current[slot].end(), take, value);
      if (slot + 1 == parts) {
        self(self, g + 1, 0, g + 1 < groups.size() ? groups[g + 1].second : 0);
      } else {
        self(self, g, slot + 1, left - take);
      }
      current[slot].resize(current[slot].size() - take);
    }
  };
  compose_group(compose_group, 0, 0, groups.empty() ? 0 : groups[0].second);
  return out;
}

std::vector<std::vector<Element>> bag_splits(const Carrier& bags, const Element& bag, std::size_t parts) {
  auto index = bags.index_of(bag);
  if (!index) throw CarrierMismatch(bags.to_string(), "an element outside it");
  std::vector<std::vector<Element>> out;
  for (const auto& split : bag_splits(bags.bag_contents(*index), parts)) {
    std::vector<Element> tuple;
    tuple.reserve(split.size());
    for (const auto& part : split) tuple.push_back(bags.element(*bags.bag_index(part)));
    out.push_back(std::move(tuple));
  }
  return out;
}

Bits bag_slice(const Carrier& bags, std::size_t size) {
  Bits out(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (bags.bag_size(i) == size) out.set(i);
  }
  return out;
}

namespace {

std::vector<Bits> subsets_of(const Bits& within) {
  std::vector<std::size_t> members;
  for_each_bit(within, [&](std::size_t i) { members.push_back(i); });
  if (members.size() > 16) throw CarrierTooLarge(members.size(), 16);
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
    Bits s(within.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (mask >> j & 1) s.set(members[j]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

bool bang_split_law(const Transformer& bang_t, std::size_t l, std::size_t l2, const Bits& u) {
  if (bang_t.kind() != Transformer::Kind::kBang) throw Error("bang_split_law needs a bang transformer");
  const Carrier& bags = bang_t.carrier();
  auto whole = bag_sum(bags, l, l2);
  if (!whole) throw DegreeOverflow(bags.bag_size(l) + bags.bag_size(l2), bags.max_degree());
  const bool lhs = bang_t.contains_bits(u, *whole);

  bool rhs = false;
  const auto vs = subsets_of(bag_slice(bags, bags.bag_size(l)));
  const auto ws = subsets_of(bag_slice(bags, bags.bag_size(l2)));
  for (const auto& v : vs) {
    if (!bang_t.contains_bits(v, l)) continue;
    for (const auto& w : ws) {
      if (!bang_t.contains_bits(w, l2)) continue;
      if (bag_set_product(bags, v, w).is_subset_of(u)) {
        rhs = true;
        break;
      }
    }
    if (rhs) break;
  }
  return lhs == rhs;
}

SumBagIsomorphism::SumBagIsomorphism(const Carrier& x, const Carrier& y, std::size_t k)
    : sum_bags_(Carrier::bag(Carrier::sum(x, y), k)),
      pair_carrier_(Carrier::product(Carrier::bag(x, k), Carrier::bag(y, k))) {
  const Carrier& bx = pair_carrier_.left();
  const Carrier& by = pair_carrier_.right();
  const std::size_t nx = x.size();
  forward_.resize(sum_bags_.size());
  backward_.assign(pair_carrier_.size(), std::nullopt);
  domain_.resize(pair_carrier_.size());
  for (std::size_t i = 0; i < sum_bags_.size(); ++i) {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t v : sum_bags_.bag_contents(i)) {
      if (v < nx) {
        left.push_back(v);
      } else {
        right.push_back(v - nx);
      }
    }
    const std::size_t p = *bx.bag_index(left) * by.size() + *by.bag_index(right);
    forward_[i] = p;
    backward_[p] = i;
    domain_.set(p);
  }
}

std::optional<std::size_t> SumBagIsomorphism::to_sum(std::size_t pair_index) const {
  return backward_.at(pair_index);
}

Bits SumBagIsomorphism::to_pair(const Bits& s) const {
  Bits out(pair_carrier_.size());
  for_each_bit(s, [&](std::size_t i) { out.set(forward_[i]); });
  return out;
}

Bits SumBagIsomorphism::to_sum(const Bits& s) const {
  Bits out(sum_bags_.size());
  for_each_bit(s, [&](std::size_t p) {
    if (backward_[p]) out.set(*backward_[p]);
  });
  return out;
}

}  // namespace llpt
