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
#include <memory>
#include <string>
#include <vector>

#include "llpt/carrier.hpp"
#include "llpt/state_set.hpp"

namespace llpt {

/// A monotonic predicate transformer on a finite carrier.
///
/// Atoms are explicit tables over all subsets; everything else is a lazy
/// combinator tree evaluated on demand. Each node memoizes its images (keyed
/// by the argument bitset) and, per output state, the family of minimal
/// arguments whose image contains it. Caches are guarded by a per-node mutex,
/// so a Transformer may be shared between threads.
///
/// Three evaluation routes are available and agree on every input:
///  - eval(s): the whole image,
///  - contains(s, i): membership of one state in the image,
///  - minimal_preimages(i): the inclusion-minimal x with i in eval(x).
class Transformer {
 public:
  enum class Kind { kTable, kIdentity, kMagic, kDual, kTensor, kWith, kBang };

  static constexpr std::size_t kDefaultMaxTableStates = 12;

  /// Table transformer on an atom carrier: `images[mask]` is the image of the
  /// subset whose bitmask is `mask`. Throws NonMonotonicTable on the first
  /// covering pair (S, S + {a}) that breaks monotonicity, and CarrierTooLarge
  /// if the carrier has more than `max_states` states.
  static Transformer table(const Carrier& carrier, std::vector<Bits> images,
                           std::size_t max_states = kDefaultMaxTableStates);
  static Transformer identity(const Carrier& carrier);
  /// x |-> whole carrier.
  static Transformer magic(const Carrier& carrier);

  Transformer();  // identity on the unit carrier

  Kind kind() const;
  const Carrier& carrier() const;
  const Transformer& operand(std::size_t i = 0) const;
  std::size_t degree() const;
  /// Table images (only for Kind::kTable).
  const std::vector<Bits>& table_images() const;

  /// Throws CarrierMismatch if `s` is over another carrier.
  StateSet eval(const StateSet& s) const;
  bool contains(const StateSet& s, std::size_t index) const;
  bool contains(const StateSet& s, const Element& e) const;
  /// Inclusion-minimal arguments whose image contains state `index`.
  const std::vector<Bits>& minimal_preimages(std::size_t index) const;

  // Bitset-level entry points; `s.size()` must equal carrier().size().
  Bits image(const Bits& s) const;
  bool contains_bits(const Bits& s, std::size_t index) const;

  std::string describe() const;

  /// Identity of the underlying node, for memo sharing checks in tests.
  const void* id() const { return node_.get(); }

  struct Node;

 private:
  explicit Transformer(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Transformer dual(const Transformer& t);
  friend Transformer tensor(const Transformer& p, const Transformer& q);
  friend Transformer with(const Transformer& p, const Transformer& q);
  friend Transformer bang(const Transformer& t, std::size_t max_degree);
};

inline StateSet eval(const Transformer& t, const StateSet& s) { return t.eval(s); }

/// x |-> complement(t(complement(x))). dual(dual(t)) returns t itself.
Transformer dual(const Transformer& t);
/// Synchronous product on Prod(p.carrier, q.carrier):
/// r |-> union over rectangles x*y inside r of p(x) * q(y).
Transformer tensor(const Transformer& p, const Transformer& q);
/// dual(tensor(dual p, dual q)).
Transformer par(const Transformer& p, const Transformer& q);
/// Componentwise transformer on Sum(p.carrier, q.carrier).
Transformer with(const Transformer& p, const Transformer& q);
/// dual(with(dual p, dual q)).
Transformer plus(const Transformer& p, const Transformer& q);
/// Graded exponential on Bag(t.carrier, max_degree): [a1..an] is in the image
/// of U iff some subsets x1..xn have their bag product inside U and ai in t(xi).
Transformer bang(const Transformer& t, std::size_t max_degree);
/// dual(bang(dual t)).
Transformer quest(const Transformer& t, std::size_t max_degree);
/// par(dual a, b); seeds of it are the linear arrows from a to b.
Transformer linear_arrow(const Transformer& a, const Transformer& b);

/// { b | for all a in x, (a, b) in r } for a relation r over a product with
/// right factor of size `right_size`.
Bits max_fiber(const Bits& x, const Bits& r, std::size_t right_size);

/// Tensor image computed by iterating every x of the left carrier and pairing
/// it with max_fiber(x, r). Reference route for the closed-fiber algorithm
/// that Transformer::eval uses.
StateSet tensor_image_all_subsets(const Transformer& p, const Transformer& q, const StateSet& r);

/// Covering-pair monotonicity check for a table over `n` states. Returns the
/// first offending (smaller, larger) masks, or nothing.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_monotonicity_violation(
    const std::vector<Bits>& images, std::size_t n);

/// A carrier together with a transformer on it.
class Interface {
 public:
  Interface() = default;
  explicit Interface(Transformer t) : transformer_(std::move(t)) {}
  /// Throws CarrierMismatch unless `t.carrier() == carrier`.
  Interface(const Carrier& carrier, Transformer t);

  const Carrier& carrier() const { return transformer_.carrier(); }
  const Transformer& transformer() const { return transformer_; }

 private:
  Transformer transformer_;
};

inline Interface dual(const Interface& x) { return Interface(dual(x.transformer())); }

struct Units {
  Interface zero;    // (empty, Id)
  Interface top;     // dual of zero
  Interface one;     // ({*}, Id)
  Interface bottom;  // dual of one
};

Units units();

}  // namespace llpt
