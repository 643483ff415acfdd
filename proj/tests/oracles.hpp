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

// Brute-force reference implementations. They only call Transformer::image on
// the operands they are given and enumerate everything else by hand.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "llpt/carrier.hpp"
#include "llpt/state_set.hpp"
#include "llpt/transformer.hpp"

namespace oracle {

using llpt::Bits;
using llpt::Carrier;
using llpt::Transformer;

inline Bits mask_bits(std::size_t n, std::uint64_t mask) { return Bits(n, mask); }

inline std::uint64_t to_mask(const Bits& b) { return b.to_ulong(); }

/// Union of P(x) * Q(y) over every rectangle x * y inside r.
inline Bits tensor_by_rectangles(const Transformer& p, const Transformer& q, const Bits& r) {
  const std::size_t nx = p.carrier().size();
  const std::size_t ny = q.carrier().size();
  Bits out(nx * ny);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << nx); ++x) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << ny); ++y) {
      bool inside = true;
      for (std::size_t a = 0; a < nx && inside; ++a) {
        for (std::size_t b = 0; b < ny && inside; ++b) {
          if ((x >> a & 1) && (y >> b & 1) && !r.test(a * ny + b)) inside = false;
        }
      }
      if (!inside) continue;
      const Bits px = p.image(mask_bits(nx, x));
      const Bits qy = q.image(mask_bits(ny, y));
      for (std::size_t a = 0; a < nx; ++a) {
        for (std::size_t b = 0; b < ny; ++b) {
          if (px.test(a) && qy.test(b)) out.set(a * ny + b);
        }
      }
    }
  }
  return out;
}

inline Bits complement(const Bits& b) { return ~b; }

/// Bags as sorted index vectors, looked up linearly in `bags`.
inline std::size_t bag_position(const Carrier& bags, std::vector<std::size_t> items) {
  std::sort(items.begin(), items.end());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    auto c = bags.bag_contents(i);
    if (std::equal(c.begin(), c.end(), items.begin(), items.end())) return i;
  }
  return bags.size();
}

/// [a_1..a_n] is in the image iff some x_1..x_n over the base have every
/// a_i in t(x_i) and every pick (b_1 in x_1, ..., b_n in x_n) inside u.
inline Bits bang_by_tuples(const Transformer& t, const Carrier& bags, const Bits& u) {
  const std::size_t nb = t.carrier().size();
  const std::uint64_t subsets = std::uint64_t{1} << nb;
  std::vector<Bits> images(subsets);
  for (std::uint64_t x = 0; x < subsets; ++x) images[x] = t.image(mask_bits(nb, x));

  Bits out(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    auto contents = bags.bag_contents(i);
    const std::size_t n = contents.size();
    std::vector<std::uint64_t> xs(n, 0);
    bool found = false;
    while (!found) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = images[xs[j]].test(contents[j]);
      if (ok) {
        // Every pick must land in u.
        std::vector<std::size_t> pick(n);
        std::function<bool(std::size_t)> all_in = [&](std::size_t j) -> bool {
          if (j == n) {
            const std::size_t pos = bag_position(bags, pick);
            return pos < bags.size() && u.test(pos);
          }
          for (std::size_t b = 0; b < nb; ++b) {
            if (!(xs[j] >> b & 1)) continue;
            pick[j] = b;
            if (!all_in(j + 1)) return false;
          }
          return true;
        };
        found = all_in(0);
      }
      std::size_t j = 0;
      while (j < n && ++xs[j] == subsets) xs[j++] = 0;
      if (j == n) break;
    }
    if (found) out.set(i);
  }
  return out;
}

/// Inclusion-minimal x with `state` in t(x), by scanning every subset.
inline std::vector<Bits> minimal_preimages(const Transformer& t, std::size_t state) {
  const std::size_t n = t.carrier().size();
  std::vector<Bits> hits;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    Bits b = mask_bits(n, x);
    if (t.image(b).test(state)) hits.push_back(b);
  }
  std::vector<Bits> out;
  for (const auto& h : hits) {
    bool minimal = true;
    for (const auto& g : hits) {
      if (g != h && g.is_subset_of(h)) minimal = false;
    }
    if (minimal) out.push_back(h);
  }
  return out;
}

}  // namespace oracle
