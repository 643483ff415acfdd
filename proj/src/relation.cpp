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

#include "llpt/relation.hpp"

#include "llpt/error.hpp"

namespace llpt {

Relation::Relation(Carrier source, Carrier target)
    : source_(std::move(source)), target_(std::move(target)), pairs_(source_.size() * target_.size()) {}

Relation::Relation(Carrier source, Carrier target, Bits pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
  if (pairs_.size() != source_.size() * target_.size()) {
    throw Error("relation bits do not match " + source_.to_string() + " x " + target_.to_string());
  }
}

Relation::Relation(Carrier source, Carrier target,
                   const std::vector<std::pair<Element, Element>>& pairs)
    : Relation(std::move(source), std::move(target)) {
  for (const auto& [a, b] : pairs) {
    auto ia = source_.index_of(a);
    if (!ia) throw CarrierMismatch(source_.to_string(), "an element outside it");
    auto ib = target_.index_of(b);
    if (!ib) throw CarrierMismatch(target_.to_string(), "an element outside it");
    insert(*ia, *ib);
  }
}

Relation Relation::from_state_set(const StateSet& s) {
  const Carrier& c = s.carrier();
  if (c.kind() != Carrier::Kind::kProd) throw CarrierMismatch("a product carrier", c.to_string());
  return Relation(c.left(), c.right(), s.bits());
}

Relation Relation::identity(const Carrier& c) {
  Relation r(c, c);
  for (std::size_t i = 0; i < c.size(); ++i) r.insert(i, i);
  return r;
}

Bits Relation::row(std::size_t a) const {
  Bits out = pairs_ >> (a * target_.size());
  out.resize(target_.size());
  return out;
}

StateSet Relation::as_state_set() const {
  return StateSet(Carrier::product(source_, target_), pairs_);
}

bool operator==(const Relation& a, const Relation& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.pairs_ == b.pairs_;
}

Bits direct_image_bits(const Relation& r, const Bits& s) {
  Bits out(r.target().size());
  for_each_bit(s, [&](std::size_t a) { out |= r.row(a); });
  return out;
}

StateSet direct_image(const Relation& r, const StateSet& s) {
  require_same_carrier(r.source(), s.carrier());
  return StateSet(r.target(), direct_image_bits(r, s.bits()));
}

Relation converse(const Relation& r) {
  Relation out(r.target(), r.source());
  const std::size_t nt = r.target().size();
  for_each_bit(r.bits(), [&](std::size_t i) { out.insert(i % nt, i / nt); });
  return out;
}

Relation compose(const Relation& r2, const Relation& r1) {
  require_same_carrier(r1.target(), r2.source());
  Relation out(r1.source(), r2.target());
  for (std::size_t a = 0; a < r1.source().size(); ++a) {
    for_each_bit(direct_image_bits(r2, r1.row(a)), [&](std::size_t c) { out.insert(a, c); });
  }
  return out;
}

}  // namespace llpt
