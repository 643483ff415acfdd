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

#include "llpt/laws.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "llpt/checker.hpp"
#include "llpt/error.hpp"
#include "llpt/exponential.hpp"
#include "llpt/formula.hpp"
#include "llpt/generators.hpp"
#include "llpt/relation.hpp"

namespace llpt {

bool Report::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.pass; });
}

const LawResult* Report::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

using Pool = std::vector<Transformer>;
using Mask = std::uint64_t;

std::string set_text(const Carrier& c, const Bits& b) { return StateSet(c, b).to_string(); }

std::string text(const Transformer& t) {
  if (t.kind() != Transformer::Kind::kTable) return t.describe();
  std::string out = "table[";
  const auto& images = t.table_images();
  for (std::size_t m = 0; m < images.size(); ++m) {
    if (m) out += ' ';
    out += set_text(t.carrier(), images[m]);
  }
  return out + "]";
}

Bits mask_bits(std::size_t n, Mask m) { return Bits(n, m); }
Mask subsets_of(std::size_t n) { return Mask{1} << n; }

bool seed_bits(const Transformer& t, const Bits& s) {
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    if (!t.contains_bits(s, i)) return false;
  }
  return true;
}

std::vector<Bits> all_images(const Transformer& t) {
  const std::size_t n = t.carrier().size();
  std::vector<Bits> out;
  out.reserve(subsets_of(n));
  for (Mask m = 0; m < subsets_of(n); ++m) out.push_back(t.image(mask_bits(n, m)));
  return out;
}

/// Union of P(x) * Q(y) over every rectangle x * y inside r.
Bits tensor_by_rectangles(const std::vector<Bits>& p_images, const std::vector<Bits>& q_images, std::size_t nx,
                          std::size_t ny, const Bits& r) {
  Bits out(nx * ny);
  for (Mask x = 0; x < subsets_of(nx); ++x) {
    for (Mask y = 0; y < subsets_of(ny); ++y) {
      const Bits rect = rectangle_bits(mask_bits(nx, x), mask_bits(ny, y));
      if (rect.is_subset_of(r)) out |= rectangle_bits(p_images[x], q_images[y]);
    }
  }
  return out;
}

/// Relational composition on raw bits: r1 over A * B, r2 over B * C.
Bits compose_bits(const Bits& r2, const Bits& r1, std::size_t na, std::size_t nb, std::size_t nc) {
  Bits out(na * nc);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (!r1.test(a * nb + b)) continue;
      for (std::size_t c = 0; c < nc; ++c) {
        if (r2.test(b * nc + c)) out.set(a * nc + c);
      }
    }
  }
  return out;
}

Bits converse_bits(const Bits& r, std::size_t na, std::size_t nb) {
  Bits out(na * nb);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (r.test(a * nb + b)) out.set(b * na + a);
    }
  }
  return out;
}

Bits direct_image_raw(const Bits& r, const Bits& x, std::size_t nb) {
  Bits out(nb);
  for_each_bit(x, [&](std::size_t a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (r.test(a * nb + b)) out.set(b);
    }
  });
  return out;
}

/// Seeds of a -o b, as relation bits over a.carrier * b.carrier.
std::vector<Bits> arrow_seeds(const Transformer& a, const Transformer& b) {
  const Transformer arrow = linear_arrow(a, b);
  const std::size_t n = arrow.carrier().size();
  std::vector<Bits> out;
  for (Mask m = 0; m < subsets_of(n); ++m) {
    Bits r = mask_bits(n, m);
    if (seed_bits(arrow, r)) out.push_back(std::move(r));
  }
  return out;
}

bool is_strict(const Transformer& t) { return t.image(Bits(t.carrier().size())).none(); }

class Law {
 public:
  explicit Law(std::string name) { result_.name = std::move(name); }

  /// Counts one case; the first failure is kept. Returns `ok`.
  template <class Message>
  bool check(bool ok, Message&& message) {
    ++result_.cases;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.counterexample = message();
    }
    return ok;
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

struct Context {
  LawConfig config;
  std::size_t exp_degree = 2;
  Pool p1;       // every monotone table on one state
  Pool p2;       // every monotone table on two states
  Pool sample2;  // named two-state atoms plus a spread of p2
  Pool big;      // atom_size states: named atoms plus random ones
  Pool random;   // config.rand_atoms random atoms on atom_size states

  Pool small() const {
    Pool out = p1;
    out.insert(out.end(), p2.begin(), p2.end());
    return out;
  }
  Pool mixed() const {
    Pool out = p1;
    out.insert(out.end(), sample2.begin(), sample2.end());
    out.insert(out.end(), big.begin(), big.end());
    return out;
  }
  Pool compact() const {
    Pool out = p1;
    out.insert(out.end(), sample2.begin(), sample2.begin() + 4);
    return out;
  }
};

std::vector<Bits> constant_table(std::size_t n, const Bits& value) { return std::vector<Bits>(subsets_of(n), value); }

Context make_context(const LawConfig& config) {
  if (config.atom_size < 1 || config.atom_size > 4) throw Error("laws: atom size must be between 1 and 4");
  if (config.max_states < 4) throw Error("laws: max-states must be at least 4");
  Context ctx;
  ctx.config = config;
  ctx.exp_degree = std::min<std::size_t>(config.degree, 2);

  const Carrier c1 = numbered_atom("A", 1);
  ctx.p1 = all_monotone_tables(c1);
  if (config.atom_size >= 2) {
    const Carrier c2 = numbered_atom("B", 2);
    ctx.p2 = all_monotone_tables(c2);
    ctx.sample2 = {point_map(c2, {1, 0}), point_map(c2, {0, 1}),
                   Transformer::table(c2, constant_table(2, Bits(2, 3))),
                   Transformer::table(c2, constant_table(2, Bits(2, 0)))};
    for (std::size_t i = 1; i < ctx.p2.size(); i += 6) ctx.sample2.push_back(ctx.p2[i]);
  }

  std::mt19937_64 rng(config.rng_seed);
  const Carrier cr = numbered_atom("R", config.atom_size);
  for (std::size_t i = 0; i < config.rand_atoms; ++i) ctx.random.push_back(random_monotone_table(cr, rng));

  if (config.atom_size >= 3) {
    const std::size_t n = config.atom_size;
    const Carrier c3 = numbered_atom("C", n);
    std::vector<std::size_t> id(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      id[i] = i;
      cycle[i] = (i + 1) % n;
    }
    ctx.big = {point_map(c3, id), point_map(c3, cycle), Transformer::table(c3, constant_table(n, ~Bits(n))),
               Transformer::table(c3, constant_table(n, Bits(n))), Transformer::table(c3, constant_table(n, Bits(n, 1)))};
    std::mt19937_64 rng3(config.rng_seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < 4; ++i) ctx.big.push_back(random_monotone_table(c3, rng3));
  }
  return ctx;
}

using LawFn = void (*)(const Context&, Law&);

// ---------------------------------------------------------------------------
// Connectives

void law_monotonicity(const Context& ctx, Law& law) {
  std::vector<Transformer> trees;
  for (const auto& p : ctx.p2) {
    for (const auto& q : ctx.p1) {
      for (const auto& t : {tensor(p, q), par(p, q), with(p, q), plus(q, p)}) trees.push_back(t);
    }
  }
  for (const auto& p : ctx.sample2) {
    for (const auto& q : ctx.sample2) {
      for (const auto& t : {tensor(p, q), par(p, q), with(p, q), plus(p, q)}) trees.push_back(t);
    }
  }
  for (const auto& q : ctx.p1) {
    for (std::size_t k = 0; k <= 3; ++k) {
      trees.push_back(bang(q, k));
      trees.push_back(quest(q, k));
    }
  }
  for (const auto& p : ctx.p2) {
    trees.push_back(bang(p, 1));
    trees.push_back(quest(p, 1));
  }
  for (const auto& t : trees) {
    const auto images = all_images(t);
    const std::size_t n = t.carrier().size();
    for (Mask big = 0; big < subsets_of(n); ++big) {
      for (Mask s = big;; s = (s - 1) & big) {
        if (!law.check(images[s].is_subset_of(images[big]), [&] {
              return t.describe() + ": image of " + set_text(t.carrier(), mask_bits(n, s)) + " not inside image of " +
                     set_text(t.carrier(), mask_bits(n, big));
            })) {
          return;
        }
        if (s == 0) break;
      }
    }
  }
}

void law_dual_involution(const Context& ctx, Law& law) {
  Pool pool = ctx.small();
  pool.insert(pool.end(), ctx.big.begin(), ctx.big.end());
  for (const auto& p : ctx.sample2) {
    for (const auto& q : ctx.p1) pool.push_back(tensor(p, q));
  }
  for (const auto& t : pool) {
    const Transformer d = dual(t);
    const Transformer dd = dual(d);
    const std::size_t n = t.carrier().size();
    for (Mask m = 0; m < subsets_of(n); ++m) {
      const Bits s = mask_bits(n, m);
      const Bits expected = t.image(s);
      if (!law.check(dd.image(s) == expected && d.image(s) == ~t.image(~s),
                     [&] { return text(t) + " at " + set_text(t.carrier(), s); })) {
        return;
      }
    }
  }
}

void law_de_morgan(const Context& ctx, Law& law) {
  const Pool pool = ctx.small();
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      const Transformer u = par(p, q);
      const auto dp = all_images(dual(p));
      const auto dq = all_images(dual(q));
      const std::size_t nx = p.carrier().size();
      const std::size_t ny = q.carrier().size();
      for (Mask m = 0; m < subsets_of(nx * ny); ++m) {
        const Bits r = mask_bits(nx * ny, m);
        if (!law.check(u.image(r) == ~tensor_by_rectangles(dp, dq, nx, ny, ~r), [&] {
              return "P=" + text(p) + " Q=" + text(q) + " r=" + set_text(u.carrier(), r);
            })) {
          return;
        }
      }
    }
  }
}

template <class Check>
void for_rectangles(const Context& ctx, Law& law, bool strict_only, Check&& check) {
  const Pool pool = ctx.mixed();
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      if (strict_only && !(is_strict(p) && is_strict(q))) continue;
      const Transformer t = tensor(p, q);
      const std::size_t nx = p.carrier().size();
      const std::size_t ny = q.carrier().size();
      for (Mask x = 0; x < subsets_of(nx); ++x) {
        for (Mask y = 0; y < subsets_of(ny); ++y) {
          if (!check(p, q, t, mask_bits(nx, x), mask_bits(ny, y))) return;
        }
      }
    }
  }
  (void)law;
}

std::string rect_case(const Transformer& p, const Transformer& q, const Bits& x, const Bits& y) {
  return "P=" + text(p) + " Q=" + text(q) + " x=" + set_text(p.carrier(), x) + " y=" + set_text(q.carrier(), y);
}

void law_rectangle(const Context& ctx, Law& law) {
  for_rectangles(ctx, law, false, [&](const auto& p, const auto& q, const auto& t, const Bits& x, const Bits& y) {
    const Bits got = t.image(rectangle_bits(x, y));
    return law.check(got == rectangle_bits(p.image(x), q.image(y)), [&] {
      return rect_case(p, q, x, y) + ": tensor gives " + set_text(t.carrier(), got) + ", P(x)*Q(y) is " +
             set_text(t.carrier(), rectangle_bits(p.image(x), q.image(y)));
    });
  });
}

void law_rectangle_strict(const Context& ctx, Law& law) {
  for_rectangles(ctx, law, true, [&](const auto& p, const auto& q, const auto& t, const Bits& x, const Bits& y) {
    return law.check(t.image(rectangle_bits(x, y)) == rectangle_bits(p.image(x), q.image(y)),
                     [&] { return rect_case(p, q, x, y); });
  });
}

void law_rectangle_degenerate(const Context& ctx, Law& law) {
  for_rectangles(ctx, law, false, [&](const auto& p, const auto& q, const auto& t, const Bits& x, const Bits& y) {
    const std::size_t nx = p.carrier().size();
    const std::size_t ny = q.carrier().size();
    const Bits expected = rectangle_bits(p.image(x), q.image(y)) | rectangle_bits(p.image(~Bits(nx)), q.image(Bits(ny))) |
                          rectangle_bits(p.image(Bits(nx)), q.image(~Bits(ny)));
    return law.check(t.image(rectangle_bits(x, y)) == expected, [&] { return rect_case(p, q, x, y); });
  });
}

void law_tensor_within_par(const Context& ctx, Law& law) {
  for_rectangles(ctx, law, false, [&](const auto& p, const auto& q, const auto& t, const Bits& x, const Bits& y) {
    const Bits r = rectangle_bits(x, y);
    return law.check(t.image(r).is_subset_of(par(p, q).image(r)), [&] { return rect_case(p, q, x, y); });
  });
}

void law_tensor_rectangle_oracle(const Context& ctx, Law& law) {
  std::vector<std::pair<Transformer, Transformer>> pairs;
  for (const auto& p : ctx.p2) {
    for (const auto& q : ctx.p2) pairs.emplace_back(p, q);
  }
  for (const auto& p : ctx.big) {
    for (const auto& q : ctx.p2) pairs.emplace_back(p, q);
  }
  for (const auto& [p, q] : pairs) {
    const Transformer t = tensor(p, q);
    const auto pi = all_images(p);
    const auto qi = all_images(q);
    const std::size_t nx = p.carrier().size();
    const std::size_t ny = q.carrier().size();
    for (Mask m = 0; m < subsets_of(nx * ny); ++m) {
      const Bits r = mask_bits(nx * ny, m);
      const Bits expected = tensor_by_rectangles(pi, qi, nx, ny, r);
      const bool ok = t.image(r) == expected &&
                      tensor_image_all_subsets(p, q, StateSet(t.carrier(), r)).bits() == expected;
      if (!law.check(ok, [&] { return "P=" + text(p) + " Q=" + text(q) + " r=" + set_text(t.carrier(), r); })) return;
    }
  }
}

void law_plus_equals_with(const Context& ctx, Law& law) {
  const Pool pool = ctx.mixed();
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      const Transformer w = with(p, q);
      const Transformer s = plus(p, q);
      const std::size_t n = w.carrier().size();
      for (Mask m = 0; m < subsets_of(n); ++m) {
        const Bits x = mask_bits(n, m);
        if (!law.check(w.image(x) == s.image(x),
                       [&] { return "P=" + text(p) + " Q=" + text(q) + " at " + set_text(w.carrier(), x); })) {
          return;
        }
      }
    }
  }
}

void law_bot_equals_one(const Context&, Law& law) {
  const Units u = units();
  for (Mask m = 0; m < 2; ++m) {
    const Bits s = mask_bits(1, m);
    if (!law.check(u.bottom.transformer().image(s) == u.one.transformer().image(s),
                   [&] { return "at " + set_text(u.one.carrier(), s); })) {
      return;
    }
  }
}

void law_top_equals_zero(const Context&, Law& law) {
  const Units u = units();
  const Bits s(0);
  law.check(u.top.transformer().image(s) == u.zero.transformer().image(s), [] { return std::string("at {}"); });
}

void seed_product(const Context& ctx, Law& law, bool use_par) {
  const Pool pool = ctx.mixed();
  for (const auto& p : pool) {
    const auto xs = enumerate_seeds(Interface(p));
    for (const auto& q : pool) {
      const auto ys = enumerate_seeds(Interface(q));
      const Transformer t = use_par ? par(p, q) : tensor(p, q);
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          const Bits r = rectangle_bits(x.bits(), y.bits());
          if (!law.check(seed_bits(t, r), [&] {
                return "A=" + text(p) + " B=" + text(q) + " x=" + x.to_string() + " y=" + y.to_string();
              })) {
            return;
          }
        }
      }
    }
  }
}

void law_seed_product_tensor(const Context& ctx, Law& law) { seed_product(ctx, law, false); }
void law_seed_product_par(const Context& ctx, Law& law) { seed_product(ctx, law, true); }

// ---------------------------------------------------------------------------
// Linear arrows

void law_arrow_characterization(const Context& ctx, Law& law) {
  const Pool pool = ctx.mixed();
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const Transformer arrow = linear_arrow(a, b);
      const std::size_t na = a.carrier().size();
      const std::size_t nb = b.carrier().size();
      const auto ai = all_images(a);
      for (Mask m = 0; m < subsets_of(na * nb); ++m) {
        const Bits r = mask_bits(na * nb, m);
        // (s, t) is expected iff t lies in B(<r>x) for every x with s in A(x).
        std::vector<Bits> allowed(na, ~Bits(nb));
        for (Mask x = 0; x < subsets_of(na); ++x) {
          const Bits target = b.image(direct_image_raw(r, mask_bits(na, x), nb));
          for_each_bit(ai[x], [&](std::size_t s) { allowed[s] &= target; });
        }
        Bits expected(na * nb);
        for (std::size_t s = 0; s < na; ++s) {
          for_each_bit(allowed[s], [&](std::size_t t) { expected.set(s * nb + t); });
        }
        if (!law.check(arrow.image(r) == expected, [&] {
              return "A=" + text(a) + " B=" + text(b) + " r=" + set_text(arrow.carrier(), r);
            })) {
          return;
        }
      }
    }
  }
}

bool simulates(const std::vector<Bits>& ai, const Transformer& b, const Bits& r, std::size_t na, std::size_t nb) {
  for (Mask x = 0; x < subsets_of(na); ++x) {
    const Bits moved = direct_image_raw(r, ai[x], nb);
    if (!moved.is_subset_of(b.image(direct_image_raw(r, mask_bits(na, x), nb)))) return false;
  }
  return true;
}

void law_simulation_iff_arrow_seed(const Context& ctx, Law& law) {
  const Pool pool = ctx.small();
  for (const auto& a : pool) {
    const auto ai = all_images(a);
    for (const auto& b : pool) {
      const Transformer arrow = linear_arrow(a, b);
      const std::size_t na = a.carrier().size();
      const std::size_t nb = b.carrier().size();
      for (Mask m = 0; m < subsets_of(na * nb); ++m) {
        const Bits r = mask_bits(na * nb, m);
        if (!law.check(simulates(ai, b, r, na, nb) == seed_bits(arrow, r), [&] {
              return "A=" + text(a) + " B=" + text(b) + " r=" + set_text(arrow.carrier(), r);
            })) {
          return;
        }
      }
    }
  }
  // The library entry point agrees on a few instances.
  for (std::size_t i = 0; i < ctx.sample2.size(); ++i) {
    const Interface x(ctx.sample2[i]);
    const Interface y(ctx.sample2[(i + 1) % ctx.sample2.size()]);
    for (Mask m = 0; m < 16; ++m) {
      const Relation r(x.carrier(), y.carrier(), mask_bits(4, m));
      const bool seed = is_seed(Interface(linear_arrow(x.transformer(), y.transformer())), r.as_state_set());
      if (!law.check(is_forward_simulation(r, x, y) == seed, [&] { return "relation " + r.as_state_set().to_string(); })) {
        return;
      }
    }
  }
}

void law_identity_arrow(const Context& ctx, Law& law) {
  Pool pool = ctx.mixed();
  pool.insert(pool.end(), ctx.random.begin(), ctx.random.end());
  for (const auto& a : pool) {
    const Relation id = Relation::identity(a.carrier());
    if (!law.check(seed_bits(linear_arrow(a, a), id.bits()), [&] { return "A=" + text(a); })) return;
  }
}

void law_simulation_composition(const Context& ctx, Law& law) {
  Pool pool = ctx.p1;
  pool.insert(pool.end(), ctx.sample2.begin(), ctx.sample2.end());
  const std::size_t n = pool.size();
  std::vector<std::vector<Bits>> seeds(n * n);
  std::vector<std::set<Bits>> seed_sets(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      seeds[i * n + j] = arrow_seeds(pool[i], pool[j]);
      seed_sets[i * n + j] = std::set<Bits>(seeds[i * n + j].begin(), seeds[i * n + j].end());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t na = pool[i].carrier().size();
        const std::size_t nb = pool[j].carrier().size();
        const std::size_t nc = pool[k].carrier().size();
        for (const Bits& r : seeds[i * n + j]) {
          for (const Bits& r2 : seeds[j * n + k]) {
            const Bits c = compose_bits(r2, r, na, nb, nc);
            if (!law.check(seed_sets[i * n + k].count(c) > 0, [&] {
                  return "A=" + text(pool[i]) + " B=" + text(pool[j]) + " C=" + text(pool[k]);
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

void law_dual_contravariance(const Context& ctx, Law& law) {
  Pool pool = ctx.p1;
  pool.insert(pool.end(), ctx.sample2.begin(), ctx.sample2.end());
  if (!ctx.big.empty()) pool.push_back(ctx.big.back());
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const Transformer forward = linear_arrow(a, b);
      const Transformer backward = linear_arrow(dual(b), dual(a));
      const std::size_t na = a.carrier().size();
      const std::size_t nb = b.carrier().size();
      for (Mask m = 0; m < subsets_of(na * nb); ++m) {
        const Bits r = mask_bits(na * nb, m);
        if (!law.check(seed_bits(forward, r) == seed_bits(backward, converse_bits(r, na, nb)), [&] {
              return "A=" + text(a) + " B=" + text(b) + " r=" + set_text(forward.carrier(), r);
            })) {
          return;
        }
      }
    }
  }
}

void law_star_autonomy(const Context& ctx, Law& law) {
  const Pool pool = ctx.compact();
  // Dualizing an arrow twice gives it back, and converse is involutive.
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const std::size_t na = a.carrier().size();
      const std::size_t nb = b.carrier().size();
      const Transformer arrow = linear_arrow(a, b);
      const Transformer twice = linear_arrow(dual(dual(a)), dual(dual(b)));
      for (Mask m = 0; m < subsets_of(na * nb); ++m) {
        const Bits r = mask_bits(na * nb, m);
        const bool ok = converse_bits(converse_bits(r, na, nb), nb, na) == r && seed_bits(arrow, r) == seed_bits(twice, r);
        if (!law.check(ok, [&] { return "A=" + text(a) + " B=" + text(b) + " r=" + set_text(arrow.carrier(), r); })) {
          return;
        }
      }
    }
  }
  // Currying: (A tensor B) -o C and A -o (B -o C) have the same seeds, since
  // ((a, b), c) and (a, (b, c)) share their index.
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        const Transformer lhs = linear_arrow(tensor(a, b), c);
        const Transformer rhs = linear_arrow(a, linear_arrow(b, c));
        const std::size_t n = lhs.carrier().size();
        for (Mask m = 0; m < subsets_of(n); ++m) {
          const Bits r = mask_bits(n, m);
          if (!law.check(seed_bits(lhs, r) == seed_bits(rhs, r), [&] {
                return "A=" + text(a) + " B=" + text(b) + " C=" + text(c) + " r=" + set_text(lhs.carrier(), r);
              })) {
            return;
          }
        }
      }
    }
  }
}

// Relations into / out of a sum carrier, on raw bits.
Bits inject_target(const Bits& r, std::size_t nc, std::size_t n_in, std::size_t offset, std::size_t n_sum) {
  Bits out(nc * n_sum);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t a = 0; a < n_in; ++a) {
      if (r.test(c * n_in + a)) out.set(c * n_sum + offset + a);
    }
  }
  return out;
}

/// { (offset + a, a) }: the projection out of (or injection into) a sum, over Sum * A.
Bits sum_component(std::size_t n_in, std::size_t offset, std::size_t n_sum) {
  Bits out(n_sum * n_in);
  for (std::size_t a = 0; a < n_in; ++a) out.set((offset + a) * n_in + a);
  return out;
}

void law_with_product(const Context& ctx, Law& law) {
  const Pool pool = ctx.compact();
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const Transformer w = with(a, b);
      const std::size_t na = a.carrier().size();
      const std::size_t nb = b.carrier().size();
      const std::size_t ns = na + nb;
      const Bits pi1 = sum_component(na, 0, ns);
      const Bits pi2 = sum_component(nb, na, ns);
      if (!law.check(seed_bits(linear_arrow(w, a), pi1) && seed_bits(linear_arrow(w, b), pi2),
                     [&] { return "projections for A=" + text(a) + " B=" + text(b); })) {
        return;
      }
      for (const auto& c : pool) {
        const std::size_t nc = c.carrier().size();
        const Transformer into = linear_arrow(c, w);
        for (const Bits& r1 : arrow_seeds(c, a)) {
          for (const Bits& r2 : arrow_seeds(c, b)) {
            const Bits pairing = inject_target(r1, nc, na, 0, ns) | inject_target(r2, nc, nb, na, ns);
            const bool ok = seed_bits(into, pairing) && compose_bits(pi1, pairing, nc, ns, na) == r1 &&
                            compose_bits(pi2, pairing, nc, ns, nb) == r2;
            if (!law.check(ok, [&] { return "A=" + text(a) + " B=" + text(b) + " C=" + text(c); })) return;
          }
        }
        // Every arrow into A & B is the pairing of its two components.
        for (const Bits& r : arrow_seeds(c, w)) {
          const Bits r1 = compose_bits(pi1, r, nc, ns, na);
          const Bits r2 = compose_bits(pi2, r, nc, ns, nb);
          const Bits back = inject_target(r1, nc, na, 0, ns) | inject_target(r2, nc, nb, na, ns);
          const bool ok = back == r && seed_bits(linear_arrow(c, a), r1) && seed_bits(linear_arrow(c, b), r2);
          if (!law.check(ok, [&] { return "uniqueness for A=" + text(a) + " B=" + text(b) + " C=" + text(c); })) return;
        }
      }
    }
  }
}

void law_plus_coproduct(const Context& ctx, Law& law) {
  const Pool pool = ctx.compact();
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const Transformer s = plus(a, b);
      const std::size_t na = a.carrier().size();
      const std::size_t nb = b.carrier().size();
      const std::size_t ns = na + nb;
      const Bits iota1 = converse_bits(sum_component(na, 0, ns), ns, na);
      const Bits iota2 = converse_bits(sum_component(nb, na, ns), ns, nb);
      if (!law.check(seed_bits(linear_arrow(a, s), iota1) && seed_bits(linear_arrow(b, s), iota2),
                     [&] { return "injections for A=" + text(a) + " B=" + text(b); })) {
        return;
      }
      for (const auto& c : pool) {
        const std::size_t nc = c.carrier().size();
        const Transformer out_of = linear_arrow(s, c);
        for (const Bits& r1 : arrow_seeds(a, c)) {
          for (const Bits& r2 : arrow_seeds(b, c)) {
            // [r1, r2] = r1 . pi1 u r2 . pi2 over Sum * C.
            const Bits copair =
                compose_bits(r1, sum_component(na, 0, ns), ns, na, nc) | compose_bits(r2, sum_component(nb, na, ns), ns, nb, nc);
            const bool ok = seed_bits(out_of, copair) && compose_bits(copair, iota1, na, ns, nc) == r1 &&
                            compose_bits(copair, iota2, nb, ns, nc) == r2;
            if (!law.check(ok, [&] { return "A=" + text(a) + " B=" + text(b) + " C=" + text(c); })) return;
          }
        }
        for (const Bits& r : arrow_seeds(s, c)) {
          const Bits r1 = compose_bits(r, iota1, na, ns, nc);
          const Bits r2 = compose_bits(r, iota2, nb, ns, nc);
          const Bits back =
              compose_bits(r1, sum_component(na, 0, ns), ns, na, nc) | compose_bits(r2, sum_component(nb, na, ns), ns, nb, nc);
          const bool ok = back == r && seed_bits(linear_arrow(a, c), r1) && seed_bits(linear_arrow(b, c), r2);
          if (!law.check(ok, [&] { return "uniqueness for A=" + text(a) + " B=" + text(b) + " C=" + text(c); })) return;
        }
      }
    }
  }
}

void law_tensor_functorial(const Context& ctx, Law& law) {
  Pool pool = ctx.p1;
  if (!ctx.sample2.empty()) pool.push_back(ctx.sample2.front());
  for (const auto& a : pool) {
    for (const auto& a2 : pool) {
      const auto rs = arrow_seeds(a, a2);
      for (const auto& b : pool) {
        for (const auto& b2 : pool) {
          const auto ss = arrow_seeds(b, b2);
          const Transformer arrow = linear_arrow(tensor(a, b), tensor(a2, b2));
          const std::size_t na = a.carrier().size(), na2 = a2.carrier().size();
          const std::size_t nb = b.carrier().size(), nb2 = b2.carrier().size();
          for (const Bits& r : rs) {
            for (const Bits& s : ss) {
              // r (x) s relates (x, y) to (x', y') when r x x' and s y y'.
              Bits rs_bits(na * nb * na2 * nb2);
              for (std::size_t x = 0; x < na; ++x) {
                for (std::size_t y = 0; y < nb; ++y) {
                  for (std::size_t x2 = 0; x2 < na2; ++x2) {
                    for (std::size_t y2 = 0; y2 < nb2; ++y2) {
                      if (r.test(x * na2 + x2) && s.test(y * nb2 + y2)) {
                        rs_bits.set((x * nb + y) * (na2 * nb2) + x2 * nb2 + y2);
                      }
                    }
                  }
                }
              }
              if (!law.check(seed_bits(arrow, rs_bits), [&] {
                    return "A=" + text(a) + " A'=" + text(a2) + " B=" + text(b) + " B'=" + text(b2);
                  })) {
                return;
              }
            }
          }
        }
      }
    }
  }
}

void law_seed_transport(const Context& ctx, Law& law) {
  Pool pool = ctx.p1;
  pool.insert(pool.end(), ctx.sample2.begin(), ctx.sample2.end());
  for (const auto& a : pool) {
    const Interface x(a);
    const auto xs = enumerate_seeds(x);
    const auto anti_x = enumerate_seeds(dual(x));
    for (const auto& b : pool) {
      const Interface y(b);
      const auto anti_y = enumerate_seeds(dual(y));
      for (const Bits& bits : arrow_seeds(a, b)) {
        const Relation r(a.carrier(), b.carrier(), bits);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const StateSet moved = seed_transport(r, x, y, xs[i]);
          for (std::size_t j = i; j < xs.size(); ++j) {
            const StateSet joined = seed_transport(r, x, y, xs[i] | xs[j]);
            if (!law.check(joined == (moved | direct_image(r, xs[j])), [&] {
                  return "A=" + text(a) + " B=" + text(b) + " r=" + r.as_state_set().to_string();
                })) {
              return;
            }
          }
        }
        for (const auto& t : anti_y) {
          const StateSet back = antiseed_transport(r, x, y, t);
          if (!law.check(is_seed(dual(x), back), [&] { return "antiseed " + t.to_string(); })) return;
        }
      }
    }
    (void)anti_x;
  }
}

void law_seed_lattice(const Context& ctx, Law& law) {
  for (const auto& t : ctx.random) {
    const Interface x(t);
    const auto seeds = enumerate_seeds(x, ctx.config.max_states);
    if (!law.check(!seeds.empty() && seeds.front().empty(), [&] { return "empty set not a seed of " + text(t); })) return;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      for (std::size_t j = i + 1; j < seeds.size(); ++j) {
        const StateSet u = seeds[i] | seeds[j];
        if (!law.check(is_seed(x, u), [&] {
              return text(t) + ": " + seeds[i].to_string() + " u " + seeds[j].to_string() + " is not a seed";
            })) {
          return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Exponentials

struct BagPairs {
  Carrier bags;
  std::size_t n = 0;
  /// For each U, the pairs (V, V') with V * V' inside U.
  std::vector<std::vector<std::pair<Mask, Mask>>> below;
  /// For each U, the pairs with complement(V) * complement(V') inside complement(U).
  std::vector<std::vector<std::pair<Mask, Mask>>> co_below;
};

BagPairs bag_pairs(const Carrier& base, std::size_t k) {
  BagPairs bp;
  bp.bags = Carrier::bag(base, k);
  bp.n = bp.bags.size();
  const Mask count = subsets_of(bp.n);
  std::vector<Bits> products(count * count);
  for (Mask v = 0; v < count; ++v) {
    for (Mask w = 0; w < count; ++w) {
      products[v * count + w] = bag_set_product(bp.bags, mask_bits(bp.n, v), mask_bits(bp.n, w));
    }
  }
  const Mask full = count - 1;
  bp.below.resize(count);
  bp.co_below.resize(count);
  for (Mask u = 0; u < count; ++u) {
    const Bits ub = mask_bits(bp.n, u);
    const Bits cu = ~ub;
    for (Mask v = 0; v < count; ++v) {
      for (Mask w = 0; w < count; ++w) {
        if (products[v * count + w].is_subset_of(ub)) bp.below[u].emplace_back(v, w);
        if (products[(full ^ v) * count + (full ^ w)].is_subset_of(cu)) bp.co_below[u].emplace_back(v, w);
      }
    }
  }
  return bp;
}

template <class Body>
void for_exp_bases(const Context& ctx, Body&& body) {
  for (std::size_t k = 1; k <= ctx.exp_degree; ++k) {
    for (const Pool* pool : {&ctx.p1, &ctx.p2}) {
      if (pool->empty()) continue;
      for (const auto& base : *pool) {
        if (!body(base, k)) return;
      }
    }
  }
}

std::size_t singleton_bag(const Carrier& bags, std::size_t a) { return *bags.bag_index(std::span<const std::size_t>(&a, 1)); }

void law_exp_singleton_bang(const Context& ctx, Law& law) {
  for_exp_bases(ctx, [&](const Transformer& base, std::size_t k) {
    const Transformer b = bang(base, k);
    const Carrier& bags = b.carrier();
    const std::size_t nx = base.carrier().size();
    const auto bi = all_images(base);
    for (Mask u = 0; u < subsets_of(bags.size()); ++u) {
      const Bits ub = mask_bits(bags.size(), u);
      const Bits img = b.image(ub);
      for (std::size_t a = 0; a < nx; ++a) {
        bool rhs = false;
        for (Mask x = 0; x < subsets_of(nx) && !rhs; ++x) {
          bool included = true;
          for (std::size_t c = 0; c < nx; ++c) {
            if ((x >> c & 1) && !ub.test(singleton_bag(bags, c))) included = false;
          }
          rhs = included && bi[x].test(a);
        }
        if (!law.check(img.test(singleton_bag(bags, a)) == rhs, [&] {
              return "base=" + text(base) + " k=" + std::to_string(k) + " U=" + set_text(bags, ub);
            })) {
          return false;
        }
      }
    }
    return true;
  });
}

void law_exp_singleton_quest(const Context& ctx, Law& law) {
  for_exp_bases(ctx, [&](const Transformer& base, std::size_t k) {
    const Transformer q = quest(base, k);
    const Carrier& bags = q.carrier();
    const std::size_t nx = base.carrier().size();
    const auto bi = all_images(base);
    for (Mask u = 0; u < subsets_of(bags.size()); ++u) {
      const Bits ub = mask_bits(bags.size(), u);
      const Bits img = q.image(ub);
      for (std::size_t a = 0; a < nx; ++a) {
        // For every x whose complement is "included" in the complement of U.
        bool rhs = true;
        for (Mask x = 0; x < subsets_of(nx) && rhs; ++x) {
          bool included = true;
          for (std::size_t c = 0; c < nx; ++c) {
            if (!(x >> c & 1) && ub.test(singleton_bag(bags, c))) included = false;
          }
          if (included && !bi[x].test(a)) rhs = false;
        }
        if (!law.check(img.test(singleton_bag(bags, a)) == rhs, [&] {
              return "base=" + text(base) + " k=" + std::to_string(k) + " U=" + set_text(bags, ub);
            })) {
          return false;
        }
      }
    }
    return true;
  });
}

template <class Decide>
void split_law(const Context& ctx, Law& law, bool for_quest, Decide&& decide) {
  std::unordered_map<std::size_t, BagPairs> cache;
  for_exp_bases(ctx, [&](const Transformer& base, std::size_t k) {
    const std::size_t key = base.carrier().size() * 16 + k;
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, bag_pairs(base.carrier(), k)).first;
    const BagPairs& bp = it->second;
    const Transformer t = for_quest ? quest(base, k) : bang(base, k);
    const auto images = all_images(t);
    for (Mask u = 0; u < subsets_of(bp.n); ++u) {
      const Bits& img = images[u];
      for (std::size_t l = 0; l < bp.n; ++l) {
        for (std::size_t l2 = 0; l2 < bp.n; ++l2) {
          const auto whole = bag_sum(bp.bags, l, l2);
          if (!whole) continue;
          const bool rhs = decide(bp, images, u, l, l2);
          if (!law.check(img.test(*whole) == rhs, [&] {
                return "base=" + text(base) + " k=" + std::to_string(k) + " U=" + set_text(bp.bags, mask_bits(bp.n, u)) +
                       " l=" + format_element(bp.bags, bp.bags.element(l)) +
                       " l'=" + format_element(bp.bags, bp.bags.element(l2));
              })) {
            return false;
          }
        }
      }
    }
    return true;
  });
}

void law_exp_split_bang(const Context& ctx, Law& law) {
  split_law(ctx, law, false, [](const BagPairs& bp, const std::vector<Bits>& images, Mask u, std::size_t l, std::size_t l2) {
    for (const auto& [v, w] : bp.below[u]) {
      if (images[v].test(l) && images[w].test(l2)) return true;
    }
    return false;
  });
}

void law_exp_split_quest(const Context& ctx, Law& law) {
  split_law(ctx, law, true, [](const BagPairs& bp, const std::vector<Bits>& images, Mask u, std::size_t l, std::size_t l2) {
    for (const auto& [v, w] : bp.co_below[u]) {
      if (!images[v].test(l) && !images[w].test(l2)) return false;
    }
    return true;
  });
}

void law_bang_gradedness(const Context& ctx, Law& law) {
  for_exp_bases(ctx, [&](const Transformer& base, std::size_t k) {
    for (const Transformer& t : {bang(base, k), quest(base, k)}) {
      const Carrier& bags = t.carrier();
      for (Mask u = 0; u < subsets_of(bags.size()); ++u) {
        const Bits ub = mask_bits(bags.size(), u);
        const Bits img = t.image(ub);
        for (std::size_t n = 0; n <= k; ++n) {
          const Bits slice = bag_slice(bags, n);
          const bool ok = (t.image(ub & slice) & slice) == (img & slice) && (t.image(ub | ~slice) & slice) == (img & slice);
          if (!law.check(ok, [&] {
                return t.describe() + " base=" + text(base) + " U=" + set_text(bags, ub) + " slice " + std::to_string(n);
              })) {
            return false;
          }
        }
      }
    }
    return true;
  });
}

void law_bang_quest_monotone(const Context& ctx, Law& law) {
  for_exp_bases(ctx, [&](const Transformer& base, std::size_t k) {
    for (const Transformer& t : {bang(base, k), quest(base, k)}) {
      const auto images = all_images(t);
      const std::size_t n = t.carrier().size();
      for (Mask big = 0; big < subsets_of(n); ++big) {
        for (Mask s = big;; s = (s - 1) & big) {
          if (!law.check(images[s].is_subset_of(images[big]), [&] {
                return t.describe() + " base=" + text(base) + " U=" + set_text(t.carrier(), mask_bits(n, s)) +
                       " U'=" + set_text(t.carrier(), mask_bits(n, big));
              })) {
            return false;
          }
          if (s == 0) break;
        }
      }
    }
    return true;
  });
}

void law_bang_with_iso(const Context& ctx, Law& law) {
  const Pool pool = ctx.small();
  for (std::size_t k = 1; k <= ctx.exp_degree; ++k) {
    for (const auto& p : pool) {
      for (const auto& q : pool) {
        const SumBagIsomorphism iso(p.carrier(), q.carrier(), k);
        const Transformer lhs = bang(with(p, q), k);
        const Transformer rhs = tensor(bang(p, k), bang(q, k));
        const std::size_t n = lhs.carrier().size();
        auto where = [&] { return "A=" + text(p) + " B=" + text(q) + " k=" + std::to_string(k); };
        if (n <= 10) {
          for (Mask m = 0; m < subsets_of(n); ++m) {
            const Bits s = mask_bits(n, m);
            if (!law.check(iso.to_pair(lhs.image(s)) == (rhs.image(iso.to_pair(s)) & iso.domain()),
                           [&] { return where() + " at " + set_text(lhs.carrier(), s); })) {
              return;
            }
          }
        } else {
          // Two monotone maps agree on every subset iff every state has the
          // same minimal preimages under both; this covers all 2^n subsets
          // without listing them.
          for (std::size_t s = 0; s < n; ++s) {
            std::vector<Bits> mapped;
            for (const Bits& m : lhs.minimal_preimages(s)) mapped.push_back(iso.to_pair(m));
            // Arguments on the right stay inside the domain of the bijection.
            std::vector<Bits> expected;
            for (const Bits& m : rhs.minimal_preimages(iso.to_pair(s))) {
              if (m.is_subset_of(iso.domain())) expected.push_back(m);
            }
            if (!law.check(minimize(mapped) == minimize(expected),
                           [&] { return where() + " state " + format_element(lhs.carrier(), lhs.carrier().element(s)); })) {
              return;
            }
          }
        }
      }
    }
  }
}

void law_bang_identity(const Context& ctx, Law& law) {
  for (std::size_t states = 1; states <= std::min<std::size_t>(ctx.config.atom_size, 3); ++states) {
    const Carrier c = numbered_atom("I", states);
    for (std::size_t k = 0; k <= ctx.config.degree; ++k) {
      for (const Transformer& t : {bang(Transformer::identity(c), k), quest(Transformer::identity(c), k)}) {
        const std::size_t n = t.carrier().size();
        if (n > ctx.config.max_states) continue;
        for (Mask m = 0; m < subsets_of(n); ++m) {
          const Bits s = mask_bits(n, m);
          if (!law.check(t.image(s) == s, [&] { return t.describe() + " at " + set_text(t.carrier(), s); })) return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Formulas

std::vector<Formula> atom_free_formulas() {
  using F = Formula;
  return {
      F::one(),
      F::bot(),
      F::tensor(F::one(), F::bot()),
      F::par(F::one(), F::one()),
      F::with(F::one(), F::top()),
      F::plus(F::zero(), F::one()),
      F::bang(F::one()),
      F::quest(F::with(F::one(), F::bot())),
      F::tensor(F::bang(F::bot()), F::quest(F::one())),
      F::par(F::bang(F::plus(F::one(), F::one())), F::with(F::bot(), F::one())),
  };
}

void law_atom_free_identity(const Context& ctx, Law& law) {
  Environment env;
  env.degree = ctx.exp_degree;
  for (const auto& f : atom_free_formulas()) {
    const Interface x = semantics(f, env);
    const std::size_t n = x.carrier().size();
    if (!law.check(n <= ctx.config.max_states, [&] { return to_string(f) + " has too many states"; })) return;
    for (Mask m = 0; m < subsets_of(n); ++m) {
      const Bits s = mask_bits(n, m);
      if (!law.check(x.transformer().image(s) == s, [&] { return to_string(f) + " at " + set_text(x.carrier(), s); })) {
        return;
      }
    }
  }
}

void law_switch_lemma(const Context&, Law& law) {
  const Interface sw = switch_atom();
  const Transformer& p = sw.transformer();
  const Carrier& c = sw.carrier();
  for (Mask m = 0; m < 4; ++m) {
    const Bits s = mask_bits(2, m);
    if (!law.check(dual(p).image(s) == p.image(s), [&] { return "dual differs at " + set_text(c, s); })) return;
    if (!law.check(p.image(p.image(s)) == s, [&] { return "P.P differs from Id at " + set_text(c, s); })) return;
  }
  const auto seeds = enumerate_seeds(sw);
  const bool seeds_ok = seeds.size() == 2 && seeds[0].empty() && seeds[1] == StateSet::full(c);
  if (!law.check(seeds_ok, [&] { return std::string("seeds are not exactly {} and {m p}"); })) return;
  const Transformer t = tensor(p, p);
  const Bits swap = make_bits(4, {0 * 2 + 1, 1 * 2 + 0});
  law.check(seed_bits(t, swap), [] { return std::string("{(p m) (m p)} is not a seed of X tensor X"); });
}

bool has_exponential(const Formula& f) {
  if (f.kind == Formula::Kind::kBang || f.kind == Formula::Kind::kQuest) return true;
  return std::any_of(f.args.begin(), f.args.end(), has_exponential);
}

/// Formulas built from `leaves` with at most `depth` levels of binary connectives.
std::vector<Formula> formulas_up_to(std::size_t depth, const std::vector<Formula>& leaves) {
  std::vector<Formula> all = leaves;
  std::size_t newest = 0;  // first formula of the latest layer
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t count = all.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (i < newest && j < newest) continue;
        for (auto make : {Formula::tensor, Formula::par, Formula::with, Formula::plus}) all.push_back(make(all[i], all[j]));
      }
    }
    newest = count;
  }
  return all;
}

void determinism(const Context& ctx, Law& law, bool exponentials) {
  Environment env;
  env.atoms.emplace("X", switch_atom("X"));
  env.degree = ctx.exp_degree;
  std::vector<Formula> leaves = {Formula::pos("X"), Formula::neg("X"), Formula::one()};
  if (exponentials) {
    leaves.push_back(Formula::bang(Formula::pos("X")));
    leaves.push_back(Formula::quest(Formula::neg("X")));
    leaves.push_back(Formula::bang(Formula::tensor(Formula::pos("X"), Formula::neg("X"))));
    leaves.push_back(Formula::quest(Formula::with(Formula::one(), Formula::pos("X"))));
  }
  for (const auto& f : formulas_up_to(exponentials ? 1 : 2, leaves)) {
    if (has_exponential(f) != exponentials) continue;
    const Interface x = semantics(f, env);
    const Transformer& t = x.transformer();
    const auto f_map = as_point_map(t);
    bool ok = f_map.has_value();
    if (ok) {
      std::vector<std::size_t> sorted = *f_map;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size() && ok; ++i) ok = sorted[i] == i;
    }
    if (ok && x.carrier().size() <= 6) ok = is_deterministic_by_pairs(t);
    if (!law.check(ok, [&] { return to_string(f) + " is not the direct image of a bijection"; })) return;
  }
}

void law_determinism_closure(const Context& ctx, Law& law) { determinism(ctx, law, false); }
void law_determinism_closure_exponentials(const Context& ctx, Law& law) { determinism(ctx, law, true); }

void law_magic_strictness(const Context& ctx, Law& law) {
  law.check(magic_strictness(Carrier::empty()).verdict == Strictness::kVacuous,
            [] { return std::string("empty carrier is not vacuous"); });
  for (std::size_t n = 1; n <= std::min<std::size_t>(ctx.config.atom_size, 3); ++n) {
    const auto r = magic_strictness(numbered_atom("M", n));
    if (!law.check(r.verdict == Strictness::kHolds, [&] {
          return std::to_string(n) + " state(s): (magic -o magic)(Id) = " + r.image.to_string() +
                 (r.contains_identity ? ", equal to Id" : ", missing part of Id");
        })) {
      return;
    }
  }
}

void law_route_agreement(const Context& ctx, Law& law) {
  Pool lefts = ctx.sample2;
  if (!ctx.big.empty()) lefts.push_back(ctx.big.back());
  for (const auto& p : lefts) {
    for (const auto& q : ctx.p1) {
      const std::vector<std::function<Transformer()>> builders = {
          [&] { return tensor(p, q); },
          [&] { return par(p, q); },
          [&] { return plus(p, dual(q)); },
          [&] { return bang(p, 2); },
          [&] { return quest(q, 3); },
          [&] { return par(bang(q, 1), p); },
          [&] { return tensor(quest(q, 2), dual(p)); },
      };
      for (const auto& build : builders) {
        const Transformer by_image = build();
        const Transformer by_member = build();
        const Transformer by_minimal = build();
        const std::size_t n = by_image.carrier().size();
        if (n > ctx.config.max_states) continue;
        const auto images = all_images(by_image);
        for (std::size_t b = 0; b < n; ++b) {
          const auto& mins = by_minimal.minimal_preimages(b);
          for (Mask m = 0; m < subsets_of(n); ++m) {
            const Bits s = mask_bits(n, m);
            const bool covered = std::any_of(mins.begin(), mins.end(), [&](const Bits& x) { return x.is_subset_of(s); });
            const bool expected = images[m].test(b);
            if (!law.check(by_member.contains_bits(s, b) == expected && covered == expected, [&] {
                  return by_image.describe() + " state " + std::to_string(b) + " at " + set_text(by_image.carrier(), s);
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

const std::vector<std::pair<std::string, LawFn>>& registry() {
  static const std::vector<std::pair<std::string, LawFn>> laws = {
      {"monotonicity", law_monotonicity},
      {"dual_involution", law_dual_involution},
      {"de_morgan", law_de_morgan},
      {"route_agreement", law_route_agreement},
      {"rectangle_law", law_rectangle},
      {"rectangle_law_strict", law_rectangle_strict},
      {"rectangle_degenerate_terms", law_rectangle_degenerate},
      {"tensor_within_par", law_tensor_within_par},
      {"tensor_rectangle_oracle", law_tensor_rectangle_oracle},
      {"plus_equals_with", law_plus_equals_with},
      {"bot_equals_one", law_bot_equals_one},
      {"top_equals_zero", law_top_equals_zero},
      {"seed_product_tensor", law_seed_product_tensor},
      {"seed_product_par", law_seed_product_par},
      {"arrow_characterization", law_arrow_characterization},
      {"simulation_iff_arrow_seed", law_simulation_iff_arrow_seed},
      {"identity_arrow", law_identity_arrow},
      {"simulation_composition", law_simulation_composition},
      {"dual_contravariance", law_dual_contravariance},
      {"star_autonomy", law_star_autonomy},
      {"with_product", law_with_product},
      {"plus_coproduct", law_plus_coproduct},
      {"tensor_functorial", law_tensor_functorial},
      {"seed_transport", law_seed_transport},
      {"seed_lattice", law_seed_lattice},
      {"exp_singleton_bang", law_exp_singleton_bang},
      {"exp_split_bang", law_exp_split_bang},
      {"exp_singleton_quest", law_exp_singleton_quest},
      {"exp_split_quest", law_exp_split_quest},
      {"bang_gradedness", law_bang_gradedness},
      {"bang_quest_monotone", law_bang_quest_monotone},
      {"bang_with_iso", law_bang_with_iso},
      {"bang_identity", law_bang_identity},
      {"atom_free_identity", law_atom_free_identity},
      {"switch_lemma", law_switch_lemma},
      {"determinism_closure", law_determinism_closure},
      {"determinism_closure_exponentials", law_determinism_closure_exponentials},
      {"magic_strictness", law_magic_strictness},
  };
  return laws;
}

LawResult run_one(const std::string& name, const Context& ctx) {
  for (const auto& [law_name, fn] : registry()) {
    if (law_name != name) continue;
    Law law(name);
    fn(ctx, law);
    return law.take();
  }
  throw Error("unknown law " + name);
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const auto& entry : registry()) out.push_back(entry.first);
  return out;
}

LawResult run_law(const std::string& name, const LawConfig& config) { return run_one(name, make_context(config)); }

Report run_law_suite(const LawConfig& config, const std::vector<std::string>& names) {
  const Context ctx = make_context(config);
  Report report;
  for (const auto& name : names.empty() ? law_names() : names) report.results.push_back(run_one(name, ctx));
  return report;
}

std::string to_jsonl(const Report& report) {
  std::string out;
  for (const auto& r : report.results) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["counterexample"] = r.pass ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.counterexample);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace llpt
