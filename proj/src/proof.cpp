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

#include "llpt/proof.hpp"

#include <algorithm>
#include <map>

#include "llpt/checker.hpp"
#include "llpt/exponential.hpp"

namespace llpt {

namespace {

using Rule = Proof::Rule;
using Code = ProofError::Code;
using Tuple = std::vector<std::size_t>;

Proof unary(Rule rule, Proof p) {
  Proof out;
  out.rule = rule;
  out.premises.push_back(std::move(p));
  return out;
}

Proof binary(Rule rule, Proof p1, Proof p2) {
  Proof out;
  out.rule = rule;
  out.premises.push_back(std::move(p1));
  out.premises.push_back(std::move(p2));
  return out;
}

[[noreturn]] void fail(Code code, const std::string& message) { throw ProofError(code, message); }

const Formula& last(const Sequent& g, Rule rule) {
  if (g.empty()) fail(Code::kWrongShape, std::string(rule_name(rule)) + ": premise has no active formula");
  return g.back();
}

void expect_kind(const Formula& f, Formula::Kind kind, Rule rule, const char* what) {
  if (f.kind != kind) {
    fail(Code::kWrongShape, std::string(rule_name(rule)) + ": active formula " + to_string(f) + " is not " + what);
  }
}

}  // namespace

Proof Proof::top_intro(Sequent context) {
  Proof out;
  out.rule = Rule::kTopIntro;
  out.context = std::move(context);
  return out;
}
Proof Proof::bot_intro(Proof p) { return unary(Rule::kBotIntro, std::move(p)); }
Proof Proof::par_intro(Proof p) { return unary(Rule::kParIntro, std::move(p)); }
Proof Proof::tensor_intro(Proof p1, Proof p2, std::optional<std::size_t> split) {
  Proof out = binary(Rule::kTensorIntro, std::move(p1), std::move(p2));
  out.split = split;
  return out;
}
Proof Proof::plus_l(Proof p, Formula b) {
  Proof out = unary(Rule::kPlusL, std::move(p));
  out.formula = std::move(b);
  return out;
}
Proof Proof::plus_r(Proof p, Formula a) {
  Proof out = unary(Rule::kPlusR, std::move(p));
  out.formula = std::move(a);
  return out;
}
Proof Proof::with_intro(Proof p1, Proof p2) { return binary(Rule::kWithIntro, std::move(p1), std::move(p2)); }
Proof Proof::cut(Proof p1, Proof p2, Formula a) {
  Proof out = binary(Rule::kCut, std::move(p1), std::move(p2));
  out.formula = std::move(a);
  return out;
}
Proof Proof::dereliction(Proof p) { return unary(Rule::kDereliction, std::move(p)); }
Proof Proof::weakening(Proof p, Formula a) {
  Proof out = unary(Rule::kWeakening, std::move(p));
  out.formula = std::move(a);
  return out;
}
Proof Proof::contraction(Proof p) { return unary(Rule::kContraction, std::move(p)); }
Proof Proof::promotion(Proof p) { return unary(Rule::kPromotion, std::move(p)); }
Proof Proof::axiom(Formula x) {
  Proof out;
  out.rule = Rule::kAxiom;
  out.formula = std::move(x);
  return out;
}
Proof Proof::exchange(Proof p, std::vector<std::size_t> permutation) {
  Proof out = unary(Rule::kExchange, std::move(p));
  out.permutation = std::move(permutation);
  return out;
}

const char* rule_name(Proof::Rule rule) {
  switch (rule) {
    case Rule::kOneIntro: return "one-intro";
    case Rule::kTopIntro: return "top-intro";
    case Rule::kBotIntro: return "bot-intro";
    case Rule::kParIntro: return "par-intro";
    case Rule::kTensorIntro: return "tensor-intro";
    case Rule::kPlusL: return "plus-l";
    case Rule::kPlusR: return "plus-r";
    case Rule::kWithIntro: return "with-intro";
    case Rule::kCut: return "cut";
    case Rule::kDereliction: return "derelict";
    case Rule::kWeakening: return "weaken";
    case Rule::kContraction: return "contract";
    case Rule::kPromotion: return "promote";
    case Rule::kAxiom: return "axiom";
    case Rule::kExchange: return "exch";
  }
  return "?";
}

Sequent conclusion(const Proof& p) {
  const Rule r = p.rule;
  auto premise = [&](std::size_t i) { return conclusion(p.premises.at(i)); };
  switch (r) {
    case Rule::kOneIntro:
      return {Formula::one()};
    case Rule::kTopIntro: {
      Sequent g = p.context;
      g.push_back(Formula::top());
      return g;
    }
    case Rule::kBotIntro: {
      Sequent g = premise(0);
      g.push_back(Formula::bot());
      return g;
    }
    case Rule::kParIntro: {
      Sequent g = premise(0);
      if (g.size() < 2) fail(Code::kWrongShape, "par-intro: premise needs two active formulas");
      Formula b = g.back();
      g.pop_back();
      Formula a = g.back();
      g.back() = Formula::par(std::move(a), std::move(b));
      return g;
    }
    case Rule::kTensorIntro: {
      Sequent g = premise(0);
      Sequent d = premise(1);
      Formula a = last(g, r);
      Formula b = last(d, r);
      g.pop_back();
      d.pop_back();
      if (p.split && *p.split != g.size()) {
        fail(Code::kTensorSplitOutOfRange, "tensor-intro: split " + std::to_string(*p.split) +
                                               " does not match the left context size " +
                                               std::to_string(g.size()));
      }
      g.insert(g.end(), d.begin(), d.end());
      g.push_back(Formula::tensor(std::move(a), std::move(b)));
      return g;
    }
    case Rule::kPlusL: {
      Sequent g = premise(0);
      last(g, r);
      g.back() = Formula::plus(g.back(), p.formula);
      return g;
    }
    case Rule::kPlusR: {
      Sequent g = premise(0);
      last(g, r);
      g.back() = Formula::plus(p.formula, g.back());
      return g;
    }
    case Rule::kWithIntro: {
      Sequent g = premise(0);
      Sequent d = premise(1);
      Formula a = last(g, r);
      Formula b = last(d, r);
      g.pop_back();
      d.pop_back();
      if (g != d) {
        fail(Code::kContextMismatch, "with-intro: contexts differ: " + to_string(g) + " vs " + to_string(d));
      }
      g.push_back(Formula::with(std::move(a), std::move(b)));
      return g;
    }
    case Rule::kCut: {
      Sequent g = premise(0);
      Sequent d = premise(1);
      if (last(g, r) != p.formula || last(d, r) != negate(p.formula)) {
        fail(Code::kCutFormulaMismatch, "cut: premises must end with " + to_string(p.formula) + " and " +
                                            to_string(negate(p.formula)));
      }
      g.pop_back();
      d.pop_back();
      g.insert(g.end(), d.begin(), d.end());
      if (g.empty()) fail(Code::kEmptySequent, "cut: the conclusion would be the empty sequent");
      return g;
    }
    case Rule::kDereliction: {
      Sequent g = premise(0);
      last(g, r);
      g.back() = Formula::quest(g.back());
      return g;
    }
    case Rule::kWeakening: {
      Sequent g = premise(0);
      g.push_back(Formula::quest(p.formula));
      return g;
    }
    case Rule::kContraction: {
      Sequent g = premise(0);
      if (g.size() < 2 || g.back() != g[g.size() - 2]) {
        fail(Code::kWrongShape, "contract: premise must end with two equal ?-formulas");
      }
      expect_kind(g.back(), Formula::Kind::kQuest, r, "a ?-formula");
      g.pop_back();
      return g;
    }
    case Rule::kPromotion: {
      Sequent g = premise(0);
      last(g, r);
      for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        if (g[i].kind != Formula::Kind::kQuest) {
          fail(Code::kPromotionContextNotQuest, "promote: context formula " + to_string(g[i]) + " is not a ?-formula");
        }
      }
      g.back() = Formula::bang(g.back());
      return g;
    }
    case Rule::kAxiom: {
      if (!p.formula.is_atom()) fail(Code::kAxiomNotAtomic, "axiom: " + to_string(p.formula) + " is not an atom");
      return {negate(p.formula), p.formula};
    }
    case Rule::kExchange: {
      Sequent g = premise(0);
      std::vector<std::size_t> sorted = p.permutation;
      std::sort(sorted.begin(), sorted.end());
      bool ok = sorted.size() == g.size();
      for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i;
      if (!ok) fail(Code::kPermutationInvalid, "exch: not a permutation of 0.." + std::to_string(g.size() - 1));
      Sequent out;
      out.reserve(g.size());
      for (std::size_t i : p.permutation) out.push_back(g[i]);
      return out;
    }
  }
  return {};
}

namespace {

// Smallest size of the multisets a rule puts at each ?-position of the
// conclusion (zero elsewhere), plus the largest size seen anywhere.
struct DegreeTrace {
  std::vector<std::size_t> sizes;
  std::size_t needed = 0;
};

DegreeTrace trace_degree(const Proof& p) {
  std::vector<DegreeTrace> sub;
  for (const auto& q : p.premises) sub.push_back(trace_degree(q));
  DegreeTrace out;
  for (const auto& s : sub) out.needed = std::max(out.needed, s.needed);
  auto bump = [&](std::size_t n) { out.needed = std::max(out.needed, n); };
  switch (p.rule) {
    case Rule::kOneIntro:
      out.sizes = {0};
      break;
    case Rule::kTopIntro:
      out.sizes.assign(p.context.size() + 1, 0);
      break;
    case Rule::kBotIntro:
      out.sizes = sub[0].sizes;
      out.sizes.push_back(0);
      break;
    case Rule::kParIntro:
      out.sizes = sub[0].sizes;
      out.sizes.pop_back();
      out.sizes.back() = 0;
      break;
    case Rule::kTensorIntro:
      out.sizes = sub[0].sizes;
      out.sizes.pop_back();
      out.sizes.insert(out.sizes.end(), sub[1].sizes.begin(), sub[1].sizes.end() - 1);
      out.sizes.push_back(0);
      break;
    case Rule::kPlusL:
    case Rule::kPlusR:
      out.sizes = sub[0].sizes;
      out.sizes.back() = 0;
      break;
    case Rule::kWithIntro:
      out.sizes = sub[0].sizes;
      for (std::size_t i = 0; i + 1 < out.sizes.size(); ++i) out.sizes[i] = std::max(out.sizes[i], sub[1].sizes[i]);
      out.sizes.back() = 0;
      break;
    case Rule::kCut:
      out.sizes = sub[0].sizes;
      out.sizes.pop_back();
      out.sizes.insert(out.sizes.end(), sub[1].sizes.begin(), sub[1].sizes.end() - 1);
      break;
    case Rule::kDereliction:
      out.sizes = sub[0].sizes;
      out.sizes.back() = 1;
      bump(1);
      break;
    case Rule::kWeakening:
      out.sizes = sub[0].sizes;
      out.sizes.push_back(0);
      break;
    case Rule::kContraction: {
      out.sizes = sub[0].sizes;
      const std::size_t n = out.sizes.back();
      out.sizes.pop_back();
      out.sizes.back() += n;
      bump(out.sizes.back());
      break;
    }
    case Rule::kPromotion:
      out.sizes = sub[0].sizes;
      out.sizes.back() = 1;
      bump(1);
      break;
    case Rule::kAxiom:
      out.sizes = {0, 0};
      break;
    case Rule::kExchange:
      for (std::size_t i : p.permutation) out.sizes.push_back(sub[0].sizes.at(i));
      break;
  }
  return out;
}

std::size_t mixed_radix(const Tuple& t, const std::vector<Carrier>& carriers) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < t.size(); ++i) index = index * carriers[i].size() + t[i];
  return index;
}

Tuple split_radix(std::size_t index, const std::vector<Carrier>& carriers) {
  Tuple t(carriers.size());
  for (std::size_t i = carriers.size(); i-- > 0;) {
    t[i] = index % carriers[i].size();
    index /= carriers[i].size();
  }
  return t;
}

std::vector<Carrier> carriers_of(const Sequent& g, const Environment& env) {
  std::vector<Carrier> out;
  out.reserve(g.size());
  for (const auto& f : g) out.push_back(carrier_of(f, env));
  return out;
}

Tuple without_last(const Tuple& t) { return Tuple(t.begin(), t.end() - 1); }

Tuple with_last(Tuple t, std::size_t v) {
  t.push_back(v);
  return t;
}

// Tuples (c_1, ..., c_l, L) where L = [a_1 .. a_n] and each context bag c_j
// splits as c_j^1 + ... + c_j^n with (c_1^i, ..., c_l^i, a_i) in the premise.
std::set<Tuple> promote(const Denotation& premise, const std::vector<Carrier>& out_carriers) {
  const std::size_t l = out_carriers.size() - 1;
  const Carrier& bang_a = out_carriers.back();
  std::vector<bool> occurs(bang_a.base().size(), false);
  for (const auto& t : premise.tuples) occurs[t.back()] = true;

  std::set<Tuple> out;
  Tuple ctx(l, 0);
  for (std::size_t bag = 0; bag < bang_a.size(); ++bag) {
    auto contents = bang_a.bag_contents(bag);
    const std::size_t n = contents.size();
    if (!std::all_of(contents.begin(), contents.end(), [&](std::size_t a) { return occurs[a]; })) continue;

    std::fill(ctx.begin(), ctx.end(), 0);
    while (true) {
      std::size_t total = 0;
      for (std::size_t j = 0; j < l; ++j) total += out_carriers[j].bag_size(ctx[j]);
      if (n > 0 || total == 0) {
        // Each context bag's splits, as index vectors into its carrier.
        std::vector<std::vector<Tuple>> splits(l);
        bool possible = true;
        for (std::size_t j = 0; j < l && possible; ++j) {
          for (const auto& s : bag_splits(out_carriers[j].bag_contents(ctx[j]), n)) {
            Tuple parts;
            for (const auto& part : s) parts.push_back(*out_carriers[j].bag_index(part));
            splits[j].push_back(std::move(parts));
          }
          possible = !splits[j].empty();
        }
        bool found = false;
        if (possible) {
          std::vector<std::size_t> choice(l, 0);
          Tuple probe(l + 1);
          while (!found) {
            found = true;
            for (std::size_t i = 0; i < n && found; ++i) {
              for (std::size_t j = 0; j < l; ++j) probe[j] = splits[j][choice[j]][i];
              probe[l] = contents[i];
              found = premise.tuples.count(probe) > 0;
            }
            if (found) break;
            std::size_t j = 0;
            while (j < l && ++choice[j] == splits[j].size()) choice[j++] = 0;
            if (j == l) break;
          }
        }
        if (found) out.insert(with_last(ctx, bag));
      }
      std::size_t j = l;
      while (j > 0 && ++ctx[j - 1] == out_carriers[j - 1].size()) ctx[--j] = 0;
      if (j == 0) break;
    }
  }
  return out;
}

Denotation denote_rec(const Proof& p, const Environment& env) {
  Denotation out;
  out.sequent = conclusion(p);
  out.carriers = carriers_of(out.sequent, env);
  std::vector<Denotation> sub;
  for (const auto& q : p.premises) sub.push_back(denote_rec(q, env));

  switch (p.rule) {
    case Rule::kOneIntro:
      out.tuples.insert({0});
      break;
    case Rule::kTopIntro:
      break;
    case Rule::kBotIntro:
      for (const auto& t : sub[0].tuples) out.tuples.insert(with_last(t, 0));
      break;
    case Rule::kParIntro: {
      const std::size_t nb = sub[0].carriers.back().size();
      for (const auto& t : sub[0].tuples) {
        Tuple u(t.begin(), t.end() - 2);
        u.push_back(t[t.size() - 2] * nb + t.back());
        out.tuples.insert(std::move(u));
      }
      break;
    }
    case Rule::kTensorIntro: {
      const std::size_t nb = sub[1].carriers.back().size();
      for (const auto& t1 : sub[0].tuples) {
        for (const auto& t2 : sub[1].tuples) {
          Tuple u = without_last(t1);
          u.insert(u.end(), t2.begin(), t2.end() - 1);
          u.push_back(t1.back() * nb + t2.back());
          out.tuples.insert(std::move(u));
        }
      }
      break;
    }
    case Rule::kPlusL:
      out.tuples = sub[0].tuples;
      break;
    case Rule::kPlusR: {
      const std::size_t na = carrier_of(p.formula, env).size();
      for (const auto& t : sub[0].tuples) out.tuples.insert(with_last(without_last(t), na + t.back()));
      break;
    }
    case Rule::kWithIntro: {
      const std::size_t na = sub[0].carriers.back().size();
      out.tuples = sub[0].tuples;
      for (const auto& t : sub[1].tuples) out.tuples.insert(with_last(without_last(t), na + t.back()));
      break;
    }
    case Rule::kCut: {
      std::multimap<std::size_t, Tuple> by_cut;
      for (const auto& t : sub[1].tuples) by_cut.emplace(t.back(), without_last(t));
      for (const auto& t1 : sub[0].tuples) {
        auto [lo, hi] = by_cut.equal_range(t1.back());
        for (auto it = lo; it != hi; ++it) {
          Tuple u = without_last(t1);
          u.insert(u.end(), it->second.begin(), it->second.end());
          out.tuples.insert(std::move(u));
        }
      }
      break;
    }
    case Rule::kDereliction: {
      const Carrier& bags = out.carriers.back();
      for (const auto& t : sub[0].tuples) {
        const std::size_t a = t.back();
        out.tuples.insert(with_last(without_last(t), *bags.bag_index(std::span<const std::size_t>(&a, 1))));
      }
      break;
    }
    case Rule::kWeakening: {
      const std::size_t empty_bag = *out.carriers.back().bag_index({});
      for (const auto& t : sub[0].tuples) out.tuples.insert(with_last(t, empty_bag));
      break;
    }
    case Rule::kContraction: {
      const Carrier& bags = out.carriers.back();
      for (const auto& t : sub[0].tuples) {
        auto merged = bag_sum(bags, t[t.size() - 2], t.back());
        if (!merged) continue;
        Tuple u(t.begin(), t.end() - 2);
        u.push_back(*merged);
        out.tuples.insert(std::move(u));
      }
      break;
    }
    case Rule::kPromotion:
      out.tuples = promote(sub[0], out.carriers);
      break;
    case Rule::kAxiom: {
      const std::size_t n = out.carriers.back().size();
      for (std::size_t a = 0; a < n; ++a) out.tuples.insert({a, a});
      break;
    }
    case Rule::kExchange:
      for (const auto& t : sub[0].tuples) {
        Tuple u;
        u.reserve(t.size());
        for (std::size_t i : p.permutation) u.push_back(t[i]);
        out.tuples.insert(std::move(u));
      }
      break;
  }
  return out;
}

}  // namespace

std::size_t required_degree(const Proof& p) {
  conclusion(p);
  return trace_degree(p).needed;
}

Denotation denote(const Proof& p, const Environment& env) {
  const std::size_t needed = required_degree(p);
  if (needed > env.degree) throw DegreeBoundTooSmall(needed, env.degree);
  return denote_rec(p, env);
}

StateSet encode(const Denotation& d, const Environment& env) {
  StateSet out(sequent_carrier(d.sequent, env));
  for (const auto& t : d.tuples) out.insert(mixed_radix(t, d.carriers));
  return out;
}

Denotation decode(const Sequent& g, const StateSet& s, const Environment& env) {
  Denotation out;
  out.sequent = g;
  out.carriers = carriers_of(g, env);
  require_same_carrier(sequent_carrier(g, env), s.carrier());
  for_each_bit(s.bits(), [&](std::size_t i) { out.tuples.insert(split_radix(i, out.carriers)); });
  return out;
}

StateSet interpret(const Proof& p, const Environment& env) { return encode(denote(p, env), env); }

SoundnessReport check_seed_of_sequent(const Sequent& g, const StateSet& d, const Environment& env) {
  SoundnessReport report;
  report.sequent = g;
  report.denotation = d;
  const Interface iface = sequent_interface(g, env);
  auto bad = seed_counterexample(iface, d);
  report.seed = !bad.has_value();
  if (bad) {
    report.counterexample = d.carrier().element(*bad);
    report.counterexample_text = format_element(d.carrier(), *report.counterexample);
  }
  return report;
}

SoundnessReport check_soundness(const Proof& p, const Environment& env) {
  Sequent g = conclusion(p);
  return check_seed_of_sequent(g, interpret(p, env), env);
}

}  // namespace llpt
