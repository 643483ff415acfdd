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

#include "llpt/state_set.hpp"

#include <algorithm>

#include "llpt/error.hpp"

namespace llpt {

Bits make_bits(std::size_t size, std::initializer_list<std::size_t> members) {
  Bits b(size);
  for (std::size_t i : members) b.set(i);
  return b;
}

Bits rectangle_bits(const Bits& x, const Bits& y) {
  const std::size_t ny = y.size();
  Bits out(x.size() * ny);
  for_each_bit(x, [&](std::size_t i) {
    for_each_bit(y, [&](std::size_t j) { out.set(i * ny + j); });
  });
  return out;
}

namespace {

bool by_size_then_bits(const Bits& a, const Bits& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace

std::vector<Bits> minimize(std::vector<Bits> family) {
  std::sort(family.begin(), family.end(), by_size_then_bits);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Bits> out;
  out.reserve(family.size());
  for (auto& candidate : family) {
    // Sorted by size, so only earlier entries can be proper subsets.
    bool dominated = std::any_of(out.begin(), out.end(),
                                 [&](const Bits& m) { return m.is_subset_of(candidate); });
    if (!dominated) out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<Bits> minimal_transversals(const std::vector<Bits>& family, std::size_t universe) {
  // Berge's incremental algorithm.
  std::vector<Bits> current{Bits(universe)};
  for (const auto& edge : family) {
    std::vector<Bits> next;
    for (const auto& t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      for_each_bit(edge, [&](std::size_t e) {
        Bits grown = t;
        grown.set(e);
        next.push_back(std::move(grown));
      });
    }
    current = minimize(std::move(next));
    if (current.empty()) break;
  }
  return current;
}

void require_same_carrier(const Carrier& expected, const Carrier& actual) {
  if (!(expected == actual)) throw CarrierMismatch(expected.to_string(), actual.to_string());
}

StateSet::StateSet(Carrier carrier) : carrier_(std::move(carrier)), bits_(carrier_.size()) {}

StateSet::StateSet(Carrier carrier, Bits bits) : carrier_(std::move(carrier)), bits_(std::move(bits)) {
  if (bits_.size() != carrier_.size()) {
    throw Error("state set over " + carrier_.to_string() + " built from " +
                std::to_string(bits_.size()) + " bits");
  }
}

StateSet::StateSet(Carrier carrier, const std::vector<Element>& elements)
    : StateSet(std::move(carrier)) {
  for (const auto& e : elements) insert(e);
}

StateSet StateSet::full(const Carrier& carrier) {
  StateSet s(carrier);
  s.bits_.set();
  return s;
}

bool StateSet::contains(const Element& e) const {
  auto i = carrier_.index_of(e);
  return i && bits_.test(*i);
}

StateSet& StateSet::insert(std::size_t index) {
  bits_.set(index);
  return *this;
}

StateSet& StateSet::insert(const Element& e) {
  auto i = carrier_.index_of(e);
  if (!i) throw CarrierMismatch(carrier_.to_string(), "an element outside it");
  bits_.set(*i);
  return *this;
}

std::vector<Element> StateSet::members() const {
  std::vector<Element> out;
  out.reserve(bits_.count());
  for_each_bit(bits_, [&](std::size_t i) { out.push_back(carrier_.element(i)); });
  return out;
}

std::vector<std::size_t> StateSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for_each_bit(bits_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

StateSet StateSet::complement() const { return StateSet(carrier_, ~bits_); }

bool StateSet::is_subset_of(const StateSet& other) const {
  require_same_carrier(carrier_, other.carrier_);
  return bits_.is_subset_of(other.bits_);
}

StateSet operator|(const StateSet& a, const StateSet& b) {
  require_same_carrier(a.carrier_, b.carrier_);
  return StateSet(a.carrier_, a.bits_ | b.bits_);
}

StateSet operator&(const StateSet& a, const StateSet& b) {
  require_same_carrier(a.carrier_, b.carrier_);
  return StateSet(a.carrier_, a.bits_ & b.bits_);
}

StateSet operator-(const StateSet& a, const StateSet& b) {
  require_same_carrier(a.carrier_, b.carrier_);
  return StateSet(a.carrier_, a.bits_ - b.bits_);
}

bool operator==(const StateSet& a, const StateSet& b) {
  return a.carrier_ == b.carrier_ && a.bits_ == b.bits_;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_bit(bits_, [&](std::size_t i) {
    if (!first) out += ' ';
    first = false;
    out += format_element(carrier_, carrier_.element(i));
  });
  return out + "}";
}

StateSet cartesian(const StateSet& x, const StateSet& y) {
  return StateSet(Carrier::product(x.carrier(), y.carrier()), rectangle_bits(x.bits(), y.bits()));
}

std::vector<StateSet> all_subsets(const Carrier& carrier, std::size_t cap) {
  const std::size_t n = carrier.size();
  if (n > cap || n >= 63) throw CarrierTooLarge(n, std::min<std::size_t>(cap, 62));
  std::vector<StateSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.emplace_back(carrier, Bits(n, mask));
  }
  return out;
}

}  // namespace llpt
