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

#include "llpt/generators.hpp"

#include "llpt/error.hpp"

namespace llpt {

Interface switch_atom(const std::string& name) {
  const Carrier c = Carrier::atom(name, {"m", "p"});
  return Interface(point_map(c, {1, 0}));
}

Transformer point_map(const Carrier& atom, const std::vector<std::size_t>& f) {
  const std::size_t n = atom.size();
  if (f.size() != n) throw Error("point map needs one image per state");
  std::vector<Bits> images(std::size_t{1} << n, Bits(n));
  for (std::size_t mask = 0; mask < images.size(); ++mask) {
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1) images[mask].set(f.at(a));
    }
  }
  return Transformer::table(atom, std::move(images));
}

std::vector<Bits> monotone_closure(std::vector<Bits> images) {
  // Adding the images of the covering subsets in increasing mask order
  // accumulates every y inside x.
  for (std::size_t mask = 1; mask < images.size(); ++mask) {
    for (std::size_t bit = 1; bit <= mask; bit <<= 1) {
      if (mask & bit) images[mask] |= images[mask ^ bit];
    }
  }
  return images;
}

std::vector<Transformer> all_monotone_tables(const Carrier& atom, std::size_t cap) {
  const std::size_t n = atom.size();
  if (n > cap) throw CarrierTooLarge(n, cap);
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Transformer> out;
  std::vector<std::size_t> choice(subsets, 0);
  while (true) {
    std::vector<Bits> images;
    images.reserve(subsets);
    for (std::size_t c : choice) images.emplace_back(n, c);
    if (!find_monotonicity_violation(images, n)) out.push_back(Transformer::table(atom, std::move(images)));
    std::size_t i = 0;
    while (i < subsets && ++choice[i] == subsets) choice[i++] = 0;
    if (i == subsets) break;
  }
  return out;
}

Transformer random_monotone_table(const Carrier& atom, std::mt19937_64& rng) {
  const std::size_t n = atom.size();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Bits> images(subsets, Bits(n));
  for (std::size_t a = 0; a < n; ++a) images[std::size_t{1} << a] = Bits(n, rng() % subsets);
  images = monotone_closure(std::move(images));
  for (auto& img : images) {
    if (rng() % 5 == 0) img |= Bits(n, rng() % subsets);
  }
  return Transformer::table(atom, monotone_closure(std::move(images)));
}

Carrier numbered_atom(const std::string& name, std::size_t states) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  return Carrier::atom(name, std::move(names));
}

}  // namespace llpt
