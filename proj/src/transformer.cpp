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

#include "llpt/transformer.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "llpt/error.hpp"

namespace llpt {

struct Transformer::Node {
  Kind kind = Kind::kIdentity;
  Carrier carrier;
  std::vector<Transformer> operands;
  std::vector<Bits> table;
  std::size_t degree = 0;

  mutable std::mutex mutex;
  mutable std::unordered_map<Bits, Bits> images;
  mutable std::unordered_map<std::size_t, std::vector<Bits>> minimal;
};

namespace {

using Node = Transformer::Node;

std::shared_ptr<Node> make_node(Transformer::Kind kind, Carrier carrier) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->carrier = std::move(carrier);
  return n;
}

Bits slice(const Bits& s, std::size_t offset, std::size_t length) {
  Bits out = s >> offset;
  out.resize(length);
  return out;
}

Bits row_of(const Bits& r, std::size_t a, std::size_t width) { return slice(r, a * width, width); }

std::string mask_string(const Carrier& c, std::uint64_t mask) {
  return StateSet(c, Bits(c.size(), mask)).to_string();
}

}  // namespace

Bits max_fiber(const Bits& x, const Bits& r, std::size_t right_size) {
  Bits y(right_size);
  y.set();
  for_each_bit(x, [&](std::size_t a) { y &= row_of(r, a, right_size); });
  return y;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_monotonicity_violation(
    const std::vector<Bits>& images, std::size_t n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint64_t bit = std::uint64_t{1} << a;
      if (mask & bit) continue;
      if (!images[mask].is_subset_of(images[mask | bit])) return std::make_pair(mask, mask | bit);
    }
  }
  return std::nullopt;
}

Transformer Transformer::table(const Carrier& carrier, std::vector<Bits> images,
                               std::size_t max_states) {
  const std::size_t n = carrier.size();
  if (n > max_states || n >= 63) throw CarrierTooLarge(n, std::min<std::size_t>(max_states, 62));
  if (images.size() != (std::size_t{1} << n)) {
    throw Error("table for " + carrier.to_string() + " needs " + std::to_string(std::size_t{1} << n) +
                " entries, got " + std::to_string(images.size()));
  }
  for (const auto& img : images) {
    if (img.size() != n) throw Error("table image over the wrong number of states");
  }
  if (auto bad = find_monotonicity_violation(images, n)) {
    throw NonMonotonicTable(mask_string(carrier, bad->first), mask_string(carrier, bad->second));
  }
  auto node = make_node(Kind::kTable, carrier);
  node->table = std::move(images);
  return Transformer(std::move(node));
}

Transformer Transformer::identity(const Carrier& carrier) {
  return Transformer(make_node(Kind::kIdentity, carrier));
}

Transformer Transformer::magic(const Carrier& carrier) {
  return Transformer(make_node(Kind::kMagic, carrier));
}

Transformer::Transformer() : Transformer(make_node(Kind::kIdentity, Carrier::unit())) {}

Transformer::Kind Transformer::kind() const { return node_->kind; }
const Carrier& Transformer::carrier() const { return node_->carrier; }
const Transformer& Transformer::operand(std::size_t i) const { return node_->operands.at(i); }
std::size_t Transformer::degree() const { return node_->degree; }
const std::vector<Bits>& Transformer::table_images() const { return node_->table; }

Transformer dual(const Transformer& t) {
  if (t.kind() == Transformer::Kind::kDual) return t.operand();
  auto node = make_node(Transformer::Kind::kDual, t.carrier());
  node->operands.push_back(t);
  return Transformer(std::move(node));
}

Transformer tensor(const Transformer& p, const Transformer& q) {
  auto node = make_node(Transformer::Kind::kTensor, Carrier::product(p.carrier(), q.carrier()));
  node->operands = {p, q};
  return Transformer(std::move(node));
}

Transformer par(const Transformer& p, const Transformer& q) { return dual(tensor(dual(p), dual(q))); }

Transformer with(const Transformer& p, const Transformer& q) {
  auto node = make_node(Transformer::Kind::kWith, Carrier::sum(p.carrier(), q.carrier()));
  node->operands = {p, q};
  return Transformer(std::move(node));
}

Transformer plus(const Transformer& p, const Transformer& q) { return dual(with(dual(p), dual(q))); }

Transformer bang(const Transformer& t, std::size_t max_degree) {
  auto node = make_node(Transformer::Kind::kBang, Carrier::bag(t.carrier(), max_degree));
  node->operands.push_back(t);
  node->degree = max_degree;
  return Transformer(std::move(node));
}

Transformer quest(const Transformer& t, std::size_t max_degree) {
  return dual(bang(dual(t), max_degree));
}

Transformer linear_arrow(const Transformer& a, const Transformer& b) { return par(dual(a), b); }

// ---------------------------------------------------------------------------
// Exponential helpers

namespace {

/// Calls `visit(bag_index)` for each bag in the product of `factors` (one pick
/// per factor). Stops and returns false as soon as `visit` returns false.
template <class Visit>
bool for_each_product_bag(const Carrier& bags, const std::vector<const Bits*>& factors, Visit&& visit) {
  const std::size_t n = factors.size();
  std::vector<std::size_t> picks(n);
  std::vector<std::size_t> sorted(n);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      std::copy(picks.begin(), picks.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      auto idx = bags.bag_index(sorted);
      return visit(*idx);
    }
    const Bits& f = *factors[i];
    for (auto b = f.find_first(); b != Bits::npos; b = f.find_next(b)) {
      picks[i] = b;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

/// Enumerates one minimal preimage per bag position, skipping permutations of
/// equal positions. `visit(choice)` returns false to stop early.
template <class Visit>
bool for_each_minimal_choice(std::span<const std::size_t> contents,
                             const std::vector<const std::vector<Bits>*>& families, Visit&& visit) {
  const std::size_t n = contents.size();
  std::vector<std::size_t> pick(n, 0);
  std::vector<const Bits*> chosen(n, nullptr);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return visit(chosen);
    const auto& fam = *families[i];
    std::size_t start = (i > 0 && contents[i] == contents[i - 1]) ? pick[i - 1] : 0;
    for (std::size_t j = start; j < fam.size(); ++j) {
      pick[i] = j;
      chosen[i] = &fam[j];
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

bool bang_contains(const Node& node, const Bits& u, std::size_t bag) {
  const Carrier& bags = node.carrier;
  auto contents = bags.bag_contents(bag);
  if (contents.empty()) return u.test(bag);
  const Transformer& base = node.operands[0];
  std::vector<const std::vector<Bits>*> families;
  families.reserve(contents.size());
  for (std::size_t a : contents) {
    const auto& fam = base.minimal_preimages(a);
    if (fam.empty()) return false;
    families.push_back(&fam);
  }
  bool found = false;
  for_each_minimal_choice(contents, families, [&](const std::vector<const Bits*>& xs) {
    bool inside = for_each_product_bag(bags, xs, [&](std::size_t b) { return u.test(b); });
    if (inside) found = true;
    return !found;
  });
  return found;
}

std::vector<Bits> bang_minimal(const Node& node, std::size_t bag) {
  const Carrier& bags = node.carrier;
  auto contents = bags.bag_contents(bag);
  if (contents.empty()) return {make_bits(bags.size(), {bag})};
  const Transformer& base = node.operands[0];
  std::vector<const std::vector<Bits>*> families;
  for (std::size_t a : contents) {
    const auto& fam = base.minimal_preimages(a);
    if (fam.empty()) return {};
    families.push_back(&fam);
  }
  std::vector<Bits> out;
  for_each_minimal_choice(contents, families, [&](const std::vector<const Bits*>& xs) {
    Bits product(bags.size());
    for_each_product_bag(bags, xs, [&](std::size_t b) {
      product.set(b);
      return true;
    });
    out.push_back(std::move(product));
    return true;
  });
  return minimize(std::move(out));
}

// ---------------------------------------------------------------------------
// Tensor helpers

/// Intersections of every subfamily of `rows` (the empty subfamily gives the
/// full set). These are exactly the y = max_fiber(x, r) for Galois-closed x.
std::vector<Bits> closed_fibers(const std::vector<Bits>& rows, std::size_t width) {
  Bits full(width);
  full.set();
  std::vector<Bits> list{full};
  std::unordered_set<Bits> seen{full};
  for (const auto& row : rows) {
    const std::size_t m = list.size();
    for (std::size_t j = 0; j < m; ++j) {
      Bits c = list[j] & row;
      if (seen.insert(c).second) list.push_back(std::move(c));
    }
  }
  return list;
}

Bits tensor_image(const Node& node, const Bits& r) {
  const Transformer& p = node.operands[0];
  const Transformer& q = node.operands[1];
  const std::size_t na = p.carrier().size();
  const std::size_t nb = q.carrier().size();
  std::vector<Bits> rows;
  rows.reserve(na);
  for (std::size_t a = 0; a < na; ++a) rows.push_back(row_of(r, a, nb));

  Bits out(na * nb);
  for (const Bits& y : closed_fibers(rows, nb)) {
    Bits x(na);
    for (std::size_t a = 0; a < na; ++a) {
      if (y.is_subset_of(rows[a])) x.set(a);
    }
    Bits px = p.image(x);
    if (px.none()) continue;
    Bits qy = q.image(y);
    if (qy.none()) continue;
    out |= rectangle_bits(px, qy);
  }
  return out;
}

Bits with_image(const Node& node, const Bits& s) {
  const Transformer& p = node.operands[0];
  const Transformer& q = node.operands[1];
  const std::size_t na = p.carrier().size();
  const std::size_t nb = q.carrier().size();
  Bits left = p.image(slice(s, 0, na));
  Bits right = q.image(slice(s, na, nb));
  right.resize(na + nb);
  right <<= na;
  left.resize(na + nb);
  return left | right;
}

}  // namespace

// ---------------------------------------------------------------------------
// Evaluation

Bits Transformer::image(const Bits& s) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kIdentity:
      return s;
    case Kind::kMagic: {
      Bits all(s.size());
      all.set();
      return all;
    }
    case Kind::kTable:
      return n.table[s.to_ulong()];
    default:
      break;
  }
  {
    std::lock_guard lock(n.mutex);
    if (auto it = n.images.find(s); it != n.images.end()) return it->second;
  }
  Bits out;
  switch (n.kind) {
    case Kind::kDual:
      out = ~n.operands[0].image(~s);
      break;
    case Kind::kTensor:
      out = tensor_image(n, s);
      break;
    case Kind::kWith:
      out = with_image(n, s);
      break;
    case Kind::kBang: {
      out = Bits(s.size());
      for (std::size_t l = 0; l < s.size(); ++l) {
        if (bang_contains(n, s, l)) out.set(l);
      }
      break;
    }
    default:
      break;
  }
  std::lock_guard lock(n.mutex);
  return n.images.emplace(s, std::move(out)).first->second;
}

bool Transformer::contains_bits(const Bits& s, std::size_t index) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kIdentity:
      return s.test(index);
    case Kind::kMagic:
      return true;
    case Kind::kTable:
      return n.table[s.to_ulong()].test(index);
    default:
      break;
  }
  {
    std::lock_guard lock(n.mutex);
    if (auto it = n.images.find(s); it != n.images.end()) return it->second.test(index);
  }
  switch (n.kind) {
    case Kind::kDual:
      return !n.operands[0].contains_bits(~s, index);
    case Kind::kTensor: {
      // (a, b) is in the image iff some minimal x with a in p(x) has
      // b in q(max_fiber(x, r)): shrinking x keeps x * y inside r, and the
      // largest admissible y is the max fiber.
      const Transformer& p = n.operands[0];
      const Transformer& q = n.operands[1];
      const std::size_t nb = q.carrier().size();
      const std::size_t a = index / nb;
      const std::size_t b = index % nb;
      for (const Bits& x : p.minimal_preimages(a)) {
        if (q.contains_bits(max_fiber(x, s, nb), b)) return true;
      }
      return false;
    }
    case Kind::kWith: {
      const Transformer& p = n.operands[0];
      const Transformer& q = n.operands[1];
      const std::size_t na = p.carrier().size();
      if (index < na) return p.contains_bits(slice(s, 0, na), index);
      return q.contains_bits(slice(s, na, q.carrier().size()), index - na);
    }
    case Kind::kBang:
      return bang_contains(n, s, index);
    default:
      return false;
  }
}

const std::vector<Bits>& Transformer::minimal_preimages(std::size_t index) const {
  const Node& n = *node_;
  {
    std::lock_guard lock(n.mutex);
    if (auto it = n.minimal.find(index); it != n.minimal.end()) return it->second;
  }
  const std::size_t size = n.carrier.size();
  std::vector<Bits> out;
  switch (n.kind) {
    case Kind::kIdentity:
      out.push_back(make_bits(size, {index}));
      break;
    case Kind::kMagic:
      out.push_back(Bits(size));
      break;
    case Kind::kTable: {
      // Masks by increasing popcount; keep those not above an earlier one.
      std::vector<std::uint64_t> masks(n.table.size());
      for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
      std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
      });
      std::vector<std::uint64_t> found;
      for (std::uint64_t m : masks) {
        if (!n.table[m].test(index)) continue;
        bool above = std::any_of(found.begin(), found.end(), [&](std::uint64_t f) { return (f & m) == f; });
        if (!above) found.push_back(m);
      }
      for (std::uint64_t m : found) out.emplace_back(size, m);
      out = minimize(std::move(out));
      break;
    }
    case Kind::kDual:
      // a in dual(P)(x) iff every minimal preimage of a under P meets x.
      out = minimal_transversals(n.operands[0].minimal_preimages(index), size);
      break;
    case Kind::kTensor: {
      const Transformer& p = n.operands[0];
      const Transformer& q = n.operands[1];
      const std::size_t nb = q.carrier().size();
      for (const Bits& x : p.minimal_preimages(index / nb)) {
        for (const Bits& y : q.minimal_preimages(index % nb)) out.push_back(rectangle_bits(x, y));
      }
      out = minimize(std::move(out));
      break;
    }
    case Kind::kWith: {
      const Transformer& p = n.operands[0];
      const Transformer& q = n.operands[1];
      const std::size_t na = p.carrier().size();
      if (index < na) {
        for (Bits x : p.minimal_preimages(index)) {
          x.resize(size);
          out.push_back(std::move(x));
        }
      } else {
        for (Bits y : q.minimal_preimages(index - na)) {
          y.resize(size);
          y <<= na;
          out.push_back(std::move(y));
        }
      }
      break;
    }
    case Kind::kBang:
      out = bang_minimal(n, index);
      break;
  }
  std::lock_guard lock(n.mutex);
  return n.minimal.emplace(index, std::move(out)).first->second;
}

StateSet Transformer::eval(const StateSet& s) const {
  require_same_carrier(carrier(), s.carrier());
  return StateSet(carrier(), image(s.bits()));
}

bool Transformer::contains(const StateSet& s, std::size_t index) const {
  require_same_carrier(carrier(), s.carrier());
  return contains_bits(s.bits(), index);
}

bool Transformer::contains(const StateSet& s, const Element& e) const {
  require_same_carrier(carrier(), s.carrier());
  auto i = carrier().index_of(e);
  if (!i) throw CarrierMismatch(carrier().to_string(), "an element outside it");
  return contains_bits(s.bits(), *i);
}

std::string Transformer::describe() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kTable:
      return "table[" + n.carrier.to_string() + "]";
    case Kind::kIdentity:
      return "id[" + n.carrier.to_string() + "]";
    case Kind::kMagic:
      return "magic[" + n.carrier.to_string() + "]";
    case Kind::kDual:
      return "dual(" + n.operands[0].describe() + ")";
    case Kind::kTensor:
      return "tensor(" + n.operands[0].describe() + ", " + n.operands[1].describe() + ")";
    case Kind::kWith:
      return "with(" + n.operands[0].describe() + ", " + n.operands[1].describe() + ")";
    case Kind::kBang:
      return "bang<=" + std::to_string(n.degree) + "(" + n.operands[0].describe() + ")";
  }
  return "?";
}

StateSet tensor_image_all_subsets(const Transformer& p, const Transformer& q, const StateSet& r) {
  const Carrier prod = Carrier::product(p.carrier(), q.carrier());
  require_same_carrier(prod, r.carrier());
  const std::size_t na = p.carrier().size();
  const std::size_t nb = q.carrier().size();
  if (na >= 63) throw CarrierTooLarge(na, 62);
  Bits out(na * nb);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << na); ++mask) {
    Bits x(na, mask);
    Bits px = p.image(x);
    if (px.none()) continue;
    out |= rectangle_bits(px, q.image(max_fiber(x, r.bits(), nb)));
  }
  return StateSet(prod, std::move(out));
}

Interface::Interface(const Carrier& carrier, Transformer t) : transformer_(std::move(t)) {
  require_same_carrier(carrier, transformer_.carrier());
}

Units units() {
  Interface zero(Transformer::identity(Carrier::empty()));
  Interface one(Transformer::identity(Carrier::unit()));
  return Units{zero, dual(zero), one, dual(one)};
}

}  // namespace llpt
