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

#include "llpt/checker.hpp"

namespace llpt {

bool is_seed(const Interface& x, const StateSet& s) { return !seed_counterexample(x, s).has_value(); }

std::optional<std::size_t> seed_counterexample(const Interface& x, const StateSet& s) {
  require_same_carrier(x.carrier(), s.carrier());
  const Transformer& t = x.transformer();
  for (auto i = s.bits().find_first(); i != Bits::npos; i = s.bits().find_next(i)) {
    if (!t.contains_bits(s.bits(), i)) return i;
  }
  return std::nullopt;
}

std::vector<StateSet> enumerate_seeds(const Interface& x, std::size_t cap) {
  std::vector<StateSet> out;
  for (auto& s : all_subsets(x.carrier(), cap)) {
    if (s.is_subset_of(x.transformer().eval(s))) out.push_back(std::move(s));
  }
  return out;
}

namespace {

void require_typed(const Relation& r, const Interface& x, const Interface& y) {
  require_same_carrier(x.carrier(), r.source());
  require_same_carrier(y.carrier(), r.target());
}

}  // namespace

std::optional<StateSet> simulation_counterexample(const Relation& r, const Interface& x, const Interface& y,
                                                  std::size_t cap) {
  require_typed(r, x, y);
  for (auto& s : all_subsets(x.carrier(), cap)) {
    const StateSet lhs = direct_image(r, x.transformer().eval(s));
    if (!lhs.is_subset_of(y.transformer().eval(direct_image(r, s)))) return s;
  }
  return std::nullopt;
}

bool is_forward_simulation(const Relation& r, const Interface& x, const Interface& y, std::size_t cap) {
  return !simulation_counterexample(r, x, y, cap).has_value();
}

StateSet seed_transport(const Relation& r, const Interface& x, const Interface& y, const StateSet& s) {
  require_typed(r, x, y);
  if (!is_seed(Interface(linear_arrow(x.transformer(), y.transformer())), r.as_state_set())) {
    throw PreconditionViolation("seed_transport: relation is not a seed of the linear arrow");
  }
  if (!is_seed(x, s)) throw PreconditionViolation("seed_transport: argument is not a seed of the source");
  StateSet out = direct_image(r, s);
  if (!is_seed(y, out)) throw Error("seed_transport: image is not a seed of the target");
  return out;
}

StateSet antiseed_transport(const Relation& r, const Interface& x, const Interface& y, const StateSet& t) {
  require_typed(r, x, y);
  if (!is_seed(Interface(linear_arrow(x.transformer(), y.transformer())), r.as_state_set())) {
    throw PreconditionViolation("antiseed_transport: relation is not a seed of the linear arrow");
  }
  if (!is_seed(dual(y), t)) throw PreconditionViolation("antiseed_transport: argument is not an antiseed of the target");
  StateSet out = direct_image(converse(r), t);
  if (!is_seed(dual(x), out)) throw Error("antiseed_transport: image is not an antiseed of the source");
  return out;
}

bool is_deterministic(const Transformer& t) {
  for (std::size_t b = 0; b < t.carrier().size(); ++b) {
    const auto& mins = t.minimal_preimages(b);
    if (mins.size() > 1 || (mins.size() == 1 && mins.front().count() != 1)) return false;
  }
  return true;
}

bool is_deterministic_by_pairs(const Transformer& t, std::size_t cap) {
  const auto subsets = all_subsets(t.carrier(), cap);
  std::vector<Bits> images;
  images.reserve(subsets.size());
  for (const auto& s : subsets) images.push_back(t.image(s.bits()));
  if (images.front().any()) return false;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (images[i | j] != (images[i] | images[j])) return false;
      if (images[i & j] != (images[i] & images[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> as_point_map(const Transformer& t) {
  if (!is_deterministic(t)) return std::nullopt;
  const std::size_t n = t.carrier().size();
  std::vector<std::size_t> f(n);
  for (std::size_t a = 0; a < n; ++a) {
    Bits single(n);
    single.set(a);
    const Bits image = t.image(single);
    if (image.count() != 1) return std::nullopt;
    f[a] = image.find_first();
  }
  return f;
}

MagicStrictnessResult magic_strictness(const Carrier& c) {
  MagicStrictnessResult out;
  const Transformer m = Transformer::magic(c);
  const Relation id = Relation::identity(c);
  out.image = linear_arrow(m, m).eval(id.as_state_set());
  if (c.size() == 0) return out;
  const StateSet diagonal = id.as_state_set();
  out.contains_identity = diagonal.is_subset_of(out.image);
  out.strict = out.contains_identity && !(out.image == diagonal);
  out.verdict = out.strict ? Strictness::kHolds : Strictness::kFails;
  return out;
}

const char* to_string(Strictness s) {
  switch (s) {
    case Strictness::kHolds: return "holds";
    case Strictness::kFails: return "fails";
    case Strictness::kVacuous: return "vacuous";
  }
  return "?";
}

}  // namespace llpt
