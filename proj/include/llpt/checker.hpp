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
#include <vector>

#include "llpt/error.hpp"
#include "llpt/relation.hpp"
#include "llpt/state_set.hpp"
#include "llpt/transformer.hpp"

namespace llpt {

/// s is contained in its own image.
bool is_seed(const Interface& x, const StateSet& s);

/// Smallest index of `s` missing from P(s), if any. Uses membership queries
/// only, so it scales to sequent carriers with thousands of states.
std::optional<std::size_t> seed_counterexample(const Interface& x, const StateSet& s);

/// Every seed, in increasing bitmask order. Throws CarrierTooLarge above `cap`.
std::vector<StateSet> enumerate_seeds(const Interface& x, std::size_t cap = 12);

/// <r>(P_X(x)) is inside P_Y(<r>(x)) for every x over the source.
/// Throws CarrierMismatch when r is not typed X -> Y.
bool is_forward_simulation(const Relation& r, const Interface& x, const Interface& y, std::size_t cap = 16);

/// First x (in bitmask order) on which the simulation inequality fails.
std::optional<StateSet> simulation_counterexample(const Relation& r, const Interface& x, const Interface& y,
                                                  std::size_t cap = 16);

/// A precondition of a transport operation did not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// <r>(s): a seed of Y whenever r is a seed of X -o Y and s a seed of X.
/// Both hypotheses and the conclusion are checked.
StateSet seed_transport(const Relation& r, const Interface& x, const Interface& y, const StateSet& s);

/// <r~>(t): an antiseed of X whenever r is a seed of X -o Y and t an antiseed of Y.
StateSet antiseed_transport(const Relation& r, const Interface& x, const Interface& y, const StateSet& t);

/// Commutation with non-empty binary unions and intersections together with
/// P({}) = {}.
///
/// Decided through minimal preimages: P commutes with unions and fixes {} iff
/// every minimal preimage is a singleton, i.e. P = <R> with R(a) = P({a});
/// for such P binary intersections commute iff the sets R(a) are pairwise
/// disjoint. On a finite carrier binary cases give all non-empty finite ones
/// by induction.
bool is_deterministic(const Transformer& t);

/// The same property checked literally on every pair of subsets (oracle for
/// small carriers). Throws CarrierTooLarge when 2^n exceeds 2^cap.
bool is_deterministic_by_pairs(const Transformer& t, std::size_t cap = 8);

/// f with P(s) = { f(a) | a in s }, when t is deterministic and every
/// singleton has a singleton image.
std::optional<std::vector<std::size_t>> as_point_map(const Transformer& t);

enum class Strictness { kHolds, kFails, kVacuous };

struct MagicStrictnessResult {
  Strictness verdict = Strictness::kVacuous;
  bool contains_identity = false;
  bool strict = false;
  /// (magic -o magic)(Id).
  StateSet image;
};

/// Id < (magic -o magic)(Id) on the given carrier; vacuous on the empty carrier.
MagicStrictnessResult magic_strictness(const Carrier& c);

const char* to_string(Strictness s);

}  // namespace llpt
