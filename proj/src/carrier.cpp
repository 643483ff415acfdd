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

#include "llpt/carrier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "llpt/error.hpp"

namespace llpt {

Element Element::pair(Element a, Element b) {
  Element e{Kind::kPair, 0, {}};
  e.children.reserve(2);
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

Element Element::inl(Element a) {
  Element e{Kind::kInL, 0, {}};
  e.children.push_back(std::move(a));
  return e;
}

Element Element::inr(Element b) {
  Element e{Kind::kInR, 0, {}};
  e.children.push_back(std::move(b));
  return e;
}

Element Element::bag(std::vector<Element> items) {
  std::sort(items.begin(), items.end());
  return Element{Kind::kBag, 0, std::move(items)};
}

bool operator==(const Element& a, const Element& b) {
  return a.kind == b.kind && a.index == b.index && a.children == b.children;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

std::size_t bag_count(std::size_t n, std::size_t degree) {
  // sum_{j<=degree} C(n + j - 1, j), saturating at kMaxElements + 1.
  const std::size_t cap = Carrier::kMaxElements + 1;
  std::size_t total = 0;
  std::size_t term = 1;  // C(n-1+j, j) for j = 0
  for (std::size_t j = 0; j <= degree; ++j) {
    if (j > 0) {
      if (n == 0) break;
      // term *= (n - 1 + j) / j, computed exactly in a wider type.
      unsigned __int128 next = static_cast<unsigned __int128>(term) * (n - 1 + j) / j;
      term = next > cap ? cap : static_cast<std::size_t>(next);
    }
    total = std::min(cap, total + term);
  }
  return total;
}

struct Carrier::Node {
  Kind kind = Kind::kUnit;
  std::string name;
  std::vector<std::string> states;
  Carrier left;
  Carrier right;
  std::size_t degree = 0;
  std::vector<Element> elements;
  std::vector<std::vector<std::size_t>> bags;
  std::map<std::vector<std::size_t>, std::size_t> bag_lookup;
};

// Node holds Carrier members, so those are built from a null node rather than
// through the default constructor.
Carrier::Carrier() : Carrier(unit()) {}

Carrier Carrier::unit() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::shared_ptr<Node>(new Node{Kind::kUnit, {}, {}, Carrier(std::shared_ptr<const Node>()),
                                            Carrier(std::shared_ptr<const Node>()), 0, {}, {}, {}});
    n->elements.push_back(Element::star());
    return std::shared_ptr<const Node>(n);
  }();
  return Carrier(node);
}

Carrier Carrier::empty() {
  auto n = std::make_shared<Node>(Node{Kind::kVoid, {}, {}, Carrier(std::shared_ptr<const Node>()),
                                       Carrier(std::shared_ptr<const Node>()), 0, {}, {}, {}});
  return Carrier(std::shared_ptr<const Node>(std::move(n)));
}

Carrier Carrier::atom(std::string name, std::vector<std::string> states) {
  if (name.empty()) throw Error("atom name must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : states) {
    if (s.empty()) throw Error("atom " + name + ": state names must be nonempty");
    if (!seen.insert(s).second) throw Error("atom " + name + ": duplicate state " + s);
  }
  if (states.size() > kMaxElements) throw CarrierTooLarge(states.size(), kMaxElements);
  auto n = std::make_shared<Node>(Node{Kind::kAtom, std::move(name), std::move(states),
                                       Carrier(std::shared_ptr<const Node>()),
                                       Carrier(std::shared_ptr<const Node>()), 0, {}, {}, {}});
  n->elements.reserve(n->states.size());
  for (std::size_t i = 0; i < n->states.size(); ++i) n->elements.push_back(Element::atom(i));
  return Carrier(std::shared_ptr<const Node>(std::move(n)));
}

Carrier Carrier::product(const Carrier& left, const Carrier& right) {
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  if (nr != 0 && nl > kMaxElements / nr) throw CarrierTooLarge(kMaxElements + 1, kMaxElements);
  auto n = std::make_shared<Node>(Node{Kind::kProd, {}, {}, left, right, 0, {}, {}, {}});
  n->elements.reserve(nl * nr);
  for (const auto& a : left.elements()) {
    for (const auto& b : right.elements()) n->elements.push_back(Element::pair(a, b));
  }
  return Carrier(std::shared_ptr<const Node>(std::move(n)));
}

Carrier Carrier::sum(const Carrier& left, const Carrier& right) {
  const std::size_t total = left.size() + right.size();
  if (total > kMaxElements) throw CarrierTooLarge(total, kMaxElements);
  auto n = std::make_shared<Node>(Node{Kind::kSum, {}, {}, left, right, 0, {}, {}, {}});
  n->elements.reserve(total);
  for (const auto& a : left.elements()) n->elements.push_back(Element::inl(a));
  for (const auto& b : right.elements()) n->elements.push_back(Element::inr(b));
  return Carrier(std::shared_ptr<const Node>(std::move(n)));
}

Carrier Carrier::bag(const Carrier& base, std::size_t max_degree) {
  const std::size_t count = bag_count(base.size(), max_degree);
  if (count > kMaxElements) throw CarrierTooLarge(count, kMaxElements);
  auto n = std::make_shared<Node>(
      Node{Kind::kBag, {}, {}, base, Carrier(std::shared_ptr<const Node>()), max_degree, {}, {}, {}});

  // Non-decreasing index sequences of length <= max_degree.
  std::vector<std::vector<std::size_t>> bags;
  bags.reserve(count);
  std::vector<std::size_t> current;
  const std::size_t nb = base.size();
  auto extend = [&](auto&& self, std::size_t from) -> void {
    bags.push_back(current);
    if (current.size() == max_degree) return;
    for (std::size_t i = from; i < nb; ++i) {
      current.push_back(i);
      self(self, i);
      current.pop_back();
    }
  };
  extend(extend, 0);
  // Pre-order generation is already lexicographic, which is the canonical order.
  n->bags = std::move(bags);
  n->elements.reserve(n->bags.size());
  for (std::size_t i = 0; i < n->bags.size(); ++i) {
    std::vector<Element> items;
    items.reserve(n->bags[i].size());
    for (std::size_t b : n->bags[i]) items.push_back(base.element(b));
    n->elements.push_back(Element{Element::Kind::kBag, 0, std::move(items)});
    n->bag_lookup.emplace(n->bags[i], i);
  }
  return Carrier(std::shared_ptr<const Node>(std::move(n)));
}

Carrier::Kind Carrier::kind() const { return node_->kind; }
std::size_t Carrier::size() const { return node_->elements.size(); }
const Element& Carrier::element(std::size_t i) const { return node_->elements.at(i); }
const std::vector<Element>& Carrier::elements() const { return node_->elements; }

std::optional<std::size_t> Carrier::index_of(const Element& e) const {
  switch (node_->kind) {
    case Kind::kUnit:
      if (e.kind == Element::Kind::kStar && e.children.empty()) return 0;
      return std::nullopt;
    case Kind::kVoid:
      return std::nullopt;
    case Kind::kAtom:
      if (e.kind == Element::Kind::kAtom && e.children.empty() && e.index < size()) return e.index;
      return std::nullopt;
    case Kind::kProd: {
      if (e.kind != Element::Kind::kPair || e.children.size() != 2) return std::nullopt;
      auto a = left().index_of(e.children[0]);
      auto b = right().index_of(e.children[1]);
      if (!a || !b) return std::nullopt;
      return *a * right().size() + *b;
    }
    case Kind::kSum: {
      if (e.children.size() != 1) return std::nullopt;
      if (e.kind == Element::Kind::kInL) return left().index_of(e.children[0]);
      if (e.kind == Element::Kind::kInR) {
        auto b = right().index_of(e.children[0]);
        if (!b) return std::nullopt;
        return left().size() + *b;
      }
      return std::nullopt;
    }
    case Kind::kBag: {
      if (e.kind != Element::Kind::kBag || e.children.size() > node_->degree) return std::nullopt;
      std::vector<std::size_t> contents;
      contents.reserve(e.children.size());
      for (const auto& c : e.children) {
        auto i = base().index_of(c);
        if (!i) return std::nullopt;
        contents.push_back(*i);
      }
      std::sort(contents.begin(), contents.end());
      return bag_index(contents);
    }
  }
  return std::nullopt;
}

const std::string& Carrier::name() const { return node_->name; }
const std::vector<std::string>& Carrier::states() const { return node_->states; }

std::optional<std::size_t> Carrier::state_index(const std::string& state) const {
  const auto& s = node_->states;
  auto it = std::find(s.begin(), s.end(), state);
  if (it == s.end()) return std::nullopt;
  return static_cast<std::size_t>(it - s.begin());
}

const Carrier& Carrier::left() const { return node_->left; }
const Carrier& Carrier::right() const { return node_->right; }
const Carrier& Carrier::base() const { return node_->left; }
std::size_t Carrier::max_degree() const { return node_->degree; }

std::span<const std::size_t> Carrier::bag_contents(std::size_t i) const {
  return node_->bags.at(i);
}

std::optional<std::size_t> Carrier::bag_index(std::span<const std::size_t> sorted_contents) const {
  if (sorted_contents.size() > node_->degree) return std::nullopt;
  std::vector<std::size_t> key(sorted_contents.begin(), sorted_contents.end());
  auto it = node_->bag_lookup.find(key);
  if (it == node_->bag_lookup.end()) return std::nullopt;
  return it->second;
}

std::string Carrier::to_string() const {
  switch (node_->kind) {
    case Kind::kUnit:
      return "1";
    case Kind::kVoid:
      return "0";
    case Kind::kAtom: {
      std::string out = node_->name + "{";
      for (std::size_t i = 0; i < node_->states.size(); ++i) {
        if (i) out += ' ';
        out += node_->states[i];
      }
      return out + "}";
    }
    case Kind::kProd:
      return "(" + left().to_string() + " * " + right().to_string() + ")";
    case Kind::kSum:
      return "(" + left().to_string() + " + " + right().to_string() + ")";
    case Kind::kBag:
      return "Bag<=" + std::to_string(node_->degree) + "(" + base().to_string() + ")";
  }
  return "?";
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Carrier::Kind::kUnit:
    case Carrier::Kind::kVoid:
      return true;
    case Carrier::Kind::kAtom:
      return x.name == y.name && x.states == y.states;
    case Carrier::Kind::kProd:
    case Carrier::Kind::kSum:
      return x.left == y.left && x.right == y.right;
    case Carrier::Kind::kBag:
      return x.degree == y.degree && x.left == y.left;
  }
  return false;
}

std::string format_element(const Carrier& carrier, const Element& e) {
  switch (carrier.kind()) {
    case Carrier::Kind::kUnit:
      return "*";
    case Carrier::Kind::kVoid:
      return "?";
    case Carrier::Kind::kAtom:
      return e.index < carrier.states().size() ? carrier.states()[e.index] : "?";
    case Carrier::Kind::kProd:
      return "(" + format_element(carrier.left(), e.first()) + " " +
             format_element(carrier.right(), e.second()) + ")";
    case Carrier::Kind::kSum:
      if (e.kind == Element::Kind::kInL) return "(l " + format_element(carrier.left(), e.payload()) + ")";
      return "(r " + format_element(carrier.right(), e.payload()) + ")";
    case Carrier::Kind::kBag: {
      std::string out = "[";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ' ';
        out += format_element(carrier.base(), e.children[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

}  // namespace llpt
