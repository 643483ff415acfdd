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
#include <random>
#include <string>
#include <vector>

#include "llpt/transformer.hpp"

namespace llpt {

/// Two states `m` and `p` (in that order) with P({p}) = {m} and P({m}) = {p}.
Interface switch_atom(const std::string& name = "X");

/// <f> as a table: P(x) = { f(a) | a in x }.
Transformer point_map(const Carrier& atom, const std::vector<std::size_t>& f);

/// Smallest monotone table above `images`: P(x) = union of images[y] over y inside x.
std::vector<Bits> monotone_closure(std::vector<Bits> images);

/// Every monotone table on an atom carrier (3 on one state, 36 on two).
/// Throws CarrierTooLarge above `cap` states.
std::vector<Transformer> all_monotone_tables(const Carrier& atom, std::size_t cap = 2);

/// A random monotone table: random singleton images, closed under unions,
/// then about one entry in five gains random extra states and the table is
/// closed again. Only raw engine output is used, so a seed gives the same
/// table on every platform.
Transformer random_monotone_table(const Carrier& atom, std::mt19937_64& rng);

/// Atom carrier with states s0, s1, ...
Carrier numbered_atom(const std::string& name, std::size_t states);

}  // namespace llpt
