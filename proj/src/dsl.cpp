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

#include "llpt/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "llpt/relation.hpp"
#include "llpt/transformer.hpp"

namespace llpt::dsl {

ParseError::ParseError(Kind kind, Position at, const std::string& detail)
    : Error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + detail),
      kind_(kind),
      at_(at),
      detail_(detail) {}

namespace {

struct Sexp {
  enum class Kind { kSymbol, kList, kBracket };
  Kind kind = Kind::kSymbol;
  std::string symbol;
  std::vector<Sexp> items;
  Position at;

  bool is_symbol() const { return kind == Kind::kSymbol; }
  bool is_list() const { return kind == Kind::kList; }
  bool is(std::string_view s) const { return is_symbol() && symbol == s; }
};

[[noreturn]] void fail(ParseError::Kind kind, Position at, const std::string& detail) { throw ParseError(kind, at, detail); }
[[noreturn]] void syntax(Position at, const std::string& detail) { fail(ParseError::Kind::kSyntax, at, detail); }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    for (skip(); i_ < text_.size(); skip()) out.push_back(read());
    return out;
  }

 private:
  Position here() const { return {line_, col_}; }

  char advance() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == ';') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  Sexp read() {
    Sexp s;
    s.at = here();
    const char c = text_[i_];
    if (c == ')' || c == ']') syntax(s.at, std::string("unexpected '") + c + "'");
    if (c == '(' || c == '[') {
      const char close = c == '(' ? ')' : ']';
      s.kind = c == '(' ? Sexp::Kind::kList : Sexp::Kind::kBracket;
      advance();
      for (skip(); i_ < text_.size() && text_[i_] != close; skip()) {
        if (text_[i_] == ')' || text_[i_] == ']') syntax(here(), std::string("expected '") + close + "'");
        s.items.push_back(read());
      }
      if (i_ >= text_.size()) syntax(s.at, std::string("unclosed '") + c + "'");
      advance();
      return s;
    }
    while (i_ < text_.size()) {
      const char d = text_[i_];
      if (d == '(' || d == ')' || d == '[' || d == ']' || d == ';' || d == ' ' || d == '\t' || d == '\n' || d == '\r') {
        break;
      }
      s.symbol += advance();
    }
    return s;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const std::set<std::string> kUnitNames = {"one", "bot", "zero", "top"};

bool is_name(const Sexp& s) {
  return s.is_symbol() && !s.symbol.empty() && s.symbol[0] != ':' && s.symbol != "*" && !kUnitNames.count(s.symbol);
}

const std::string& expect_name(const Sexp& s, const char* what) {
  if (!is_name(s)) syntax(s.at, std::string("expected ") + what);
  return s.symbol;
}

std::size_t expect_number(const Sexp& s) {
  std::size_t value = 0;
  if (s.is_symbol()) {
    const char* first = s.symbol.data();
    const char* last = first + s.symbol.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last && first != last) return value;
  }
  syntax(s.at, "expected a non-negative integer");
}

void expect_arity(const Sexp& s, std::size_t n) {
  if (s.items.size() != n + 1) {
    syntax(s.at, "'" + s.items[0].symbol + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

Literal read_literal(const Sexp& s) {
  Literal lit;
  switch (s.kind) {
    case Sexp::Kind::kSymbol:
      if (s.symbol == "*") return lit;
      lit.kind = Literal::Kind::kName;
      lit.name = s.symbol;
      return lit;
    case Sexp::Kind::kList:
    case Sexp::Kind::kBracket:
      lit.kind = s.kind == Sexp::Kind::kList ? Literal::Kind::kList : Literal::Kind::kBag;
      for (const auto& item : s.items) lit.items.push_back(read_literal(item));
      return lit;
  }
  return lit;
}

std::string mask_text(const std::vector<std::string>& states, const Bits& bits) {
  std::string out = "(";
  bool first = true;
  for_each_bit(bits, [&](std::size_t i) {
    if (!first) out += ' ';
    out += states[i];
    first = false;
  });
  return out + ")";
}

class Parser {
 public:
  Document run(std::string_view text) {
    for (const Sexp& form : Reader(text).read_all()) declaration(form);
    return std::move(doc_);
  }

 private:
  void declaration(const Sexp& form) {
    if (!form.is_list() || form.items.empty() || !form.items[0].is_symbol()) syntax(form.at, "expected a declaration");
    const std::string& head = form.items[0].symbol;
    if (head == "degree") {
      expect_arity(form, 1);
      if (doc_.degree()) fail(ParseError::Kind::kDuplicate, form.at, "duplicate degree directive");
      doc_.declarations.emplace_back(DegreeDecl{expect_number(form.items[1])});
    } else if (head == "atom") {
      atom(form);
    } else if (head == "formula") {
      expect_arity(form, 2);
      const std::string& name = declare(form.items[1], formulas_, "formula");
      doc_.declarations.emplace_back(FormulaDecl{name, formula(form.items[2])});
      formulas_[name] = std::get<FormulaDecl>(doc_.declarations.back()).formula;
    } else if (head == "proof") {
      expect_arity(form, 2);
      const std::string& name = declare(form.items[1], proofs_, "proof");
      Proof p = proof(form.items[2]);
      try {
        conclusion(p);
      } catch (const ProofError& e) {
        fail(ParseError::Kind::kProof, form.items[2].at, "proof " + name + ": " + e.what());
      }
      proofs_[name] = p;
      doc_.declarations.emplace_back(ProofDecl{name, std::move(p)});
    } else if (head == "relation") {
      expect_arity(form, 2);
      const std::string& name = declare(form.items[1], relations_, "relation");
      const Sexp& body = form.items[2];
      if (!body.is_list() || body.items.empty() || !body.items[0].is("pairs")) syntax(body.at, "expected (pairs ...)");
      RelationDecl decl{name, {}};
      for (std::size_t i = 1; i < body.items.size(); ++i) decl.pairs.push_back(read_literal(body.items[i]));
      relations_[name] = true;
      doc_.declarations.emplace_back(std::move(decl));
    } else {
      syntax(form.items[0].at, "unknown declaration '" + head + "'");
    }
  }

  template <class Map>
  const std::string& declare(const Sexp& s, const Map& seen, const char* kind) {
    const std::string& name = expect_name(s, (std::string(kind) + " name").c_str());
    if (seen.count(name)) fail(ParseError::Kind::kDuplicate, s.at, std::string("duplicate ") + kind + " " + name);
    return name;
  }

  void atom(const Sexp& form) {
    expect_arity(form, 3);
    AtomDecl decl;
    decl.name = declare(form.items[1], atoms_, "atom");
    const Sexp& states = form.items[2];
    if (!states.is_list() || states.items.empty() || !states.items[0].is("states")) syntax(states.at, "expected (states ...)");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 1; i < states.items.size(); ++i) {
      const std::string& s = expect_name(states.items[i], "state name");
      if (!index.emplace(s, decl.states.size()).second) {
        fail(ParseError::Kind::kDuplicate, states.items[i].at, "duplicate state " + s);
      }
      decl.states.push_back(s);
    }
    const std::size_t n = decl.states.size();
    const Sexp& body = form.items[3];
    if (!body.is_list() || body.items.empty() || !body.items[0].is_symbol()) syntax(body.at, "expected (table ...) or (builtin ...)");
    if (body.items[0].is("builtin")) {
      expect_arity(body, 1);
      if (body.items[1].is("magic")) {
        decl.body = AtomDecl::Body::kMagic;
      } else if (body.items[1].is("identity")) {
        decl.body = AtomDecl::Body::kIdentity;
      } else {
        syntax(body.items[1].at, "unknown builtin; expected magic or identity");
      }
    } else if (body.items[0].is("table")) {
      if (n > 16) fail(ParseError::Kind::kTable, body.at, "table atoms have at most 16 states");
      table(decl, body, index);
    } else {
      syntax(body.items[0].at, "expected table or builtin");
    }
    atoms_[decl.name] = true;
    doc_.declarations.emplace_back(std::move(decl));
  }

  void table(AtomDecl& decl, const Sexp& body, const std::map<std::string, std::size_t>& index) {
    const std::size_t n = decl.states.size();
    auto subset = [&](const Sexp& s) {
      if (!s.is_list()) syntax(s.at, "expected a list of states");
      Bits out(n);
      for (const auto& item : s.items) {
        auto it = item.is_symbol() ? index.find(item.symbol) : index.end();
        if (it == index.end()) fail(ParseError::Kind::kTable, item.at, "unknown state in atom " + decl.name);
        out.set(it->second);
      }
      return out;
    };
    std::vector<std::optional<Bits>> rows(std::size_t{1} << n);
    for (std::size_t i = 1; i < body.items.size(); ++i) {
      const Sexp& row = body.items[i];
      if (!row.is_list() || row.items.size() != 2) syntax(row.at, "table row must be (argument image)");
      const Bits arg = subset(row.items[0]);
      const auto mask = arg.to_ulong();
      if (rows[mask]) fail(ParseError::Kind::kTable, row.at, "subset " + mask_text(decl.states, arg) + " listed twice");
      rows[mask] = subset(row.items[1]);
    }
    for (std::size_t m = 0; m < rows.size(); ++m) {
      if (!rows[m]) fail(ParseError::Kind::kTable, body.at, "table has no row for " + mask_text(decl.states, Bits(n, m)));
      decl.images.push_back(*rows[m]);
    }
    if (auto bad = find_monotonicity_violation(decl.images, n)) {
      const Bits small(n, bad->first);
      const Bits large(n, bad->second);
      fail(ParseError::Kind::kNonMonotonic, body.at,
           "table for " + decl.name + " is not monotone: " + mask_text(decl.states, small) + " is inside " +
               mask_text(decl.states, large) + " but its image " + mask_text(decl.states, decl.images[bad->first]) +
               " is not inside " + mask_text(decl.states, decl.images[bad->second]));
    }
    if (decl.images.front().any()) {
      doc_.notes.push_back("atom " + decl.name + " maps () to " + mask_text(decl.states, decl.images.front()));
    }
    if (!decl.images.back().all()) {
      doc_.notes.push_back("atom " + decl.name + " maps the full set to " + mask_text(decl.states, decl.images.back()));
    }
  }

  Formula formula(const Sexp& s) {
    if (s.is_symbol()) {
      if (s.symbol == "one") return Formula::one();
      if (s.symbol == "bot") return Formula::bot();
      if (s.symbol == "zero") return Formula::zero();
      if (s.symbol == "top") return Formula::top();
      auto it = formulas_.find(s.symbol);
      if (it == formulas_.end()) fail(ParseError::Kind::kUnbound, s.at, "unknown formula " + s.symbol);
      return it->second;
    }
    if (!s.is_list() || s.items.empty() || !s.items[0].is_symbol()) syntax(s.at, "expected a formula");
    const std::string& head = s.items[0].symbol;
    if (head == "pos" || head == "neg") {
      expect_arity(s, 1);
      const std::string& name = expect_name(s.items[1], "atom name");
      if (!atoms_.count(name)) fail(ParseError::Kind::kUnbound, s.items[1].at, "unbound atom " + name);
      return head == "pos" ? Formula::pos(name) : Formula::neg(name);
    }
    static const std::map<std::string, Formula (*)(Formula, Formula)> binary = {
        {"tensor", Formula::tensor}, {"par", Formula::par}, {"with", Formula::with}, {"plus", Formula::plus},
        {"lolli", [](Formula a, Formula b) { return linear_arrow(a, b); }}};
    if (auto it = binary.find(head); it != binary.end()) {
      expect_arity(s, 2);
      Formula left = formula(s.items[1]);
      return it->second(std::move(left), formula(s.items[2]));
    }
    expect_arity(s, 1);
    if (head == "bang") return Formula::bang(formula(s.items[1]));
    if (head == "quest") return Formula::quest(formula(s.items[1]));
    if (head == "not") return negate(formula(s.items[1]));
    syntax(s.items[0].at, "unknown connective '" + head + "'");
  }

  Proof proof(const Sexp& s) {
    if (s.is_symbol()) {
      auto it = proofs_.find(s.symbol);
      if (it == proofs_.end()) fail(ParseError::Kind::kUnbound, s.at, "unknown proof " + s.symbol);
      return it->second;
    }
    if (!s.is_list() || s.items.empty() || !s.items[0].is_symbol()) syntax(s.at, "expected a proof");
    const std::string& head = s.items[0].symbol;

    // Split positional arguments from :keyword value pairs.
    std::vector<const Sexp*> args;
    std::map<std::string, const Sexp*> keys;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
      const Sexp& item = s.items[i];
      if (item.is_symbol() && !item.symbol.empty() && item.symbol[0] == ':') {
        if (i + 1 >= s.items.size()) syntax(item.at, "missing value for " + item.symbol);
        if (!keys.emplace(item.symbol, &s.items[i + 1]).second) syntax(item.at, "repeated " + item.symbol);
        ++i;
      } else {
        args.push_back(&item);
      }
    }
    auto want = [&](std::size_t n, std::initializer_list<const char*> allowed, std::initializer_list<const char*> required) {
      if (args.size() != n) syntax(s.at, "'" + head + "' takes " + std::to_string(n) + " premise(s)");
      for (const auto& [k, v] : keys) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
          syntax(v->at, "'" + head + "' does not take " + k);
        }
      }
      for (const char* r : required) {
        if (!keys.count(r)) syntax(s.at, "'" + head + "' needs " + r);
      }
    };
    auto premise = [&](std::size_t i) { return proof(*args[i]); };
    auto key_formula = [&] { return formula(*keys.at(":formula")); };

    if (head == "axiom") {
      want(1, {}, {});
      const Formula f = formula(*args[0]);
      if (f.kind != Formula::Kind::kPosAtom) fail(ParseError::Kind::kProof, args[0]->at, "axiom needs a positive atom");
      return Proof::axiom(f);
    }
    if (head == "one-intro") {
      want(0, {}, {});
      return Proof::one_intro();
    }
    if (head == "top-intro") {
      if (!keys.empty()) syntax(s.at, "'top-intro' takes no keywords");
      Sequent ctx;
      for (const Sexp* a : args) ctx.push_back(formula(*a));
      return Proof::top_intro(std::move(ctx));
    }
    if (head == "tensor-intro") {
      want(2, {":split"}, {});
      std::optional<std::size_t> split;
      if (keys.count(":split")) split = expect_number(*keys.at(":split"));
      Proof left = premise(0);
      return Proof::tensor_intro(std::move(left), premise(1), split);
    }
    if (head == "with-intro") {
      want(2, {}, {});
      Proof left = premise(0);
      return Proof::with_intro(std::move(left), premise(1));
    }
    if (head == "cut") {
      want(2, {":formula"}, {":formula"});
      Proof left = premise(0);
      Proof right = premise(1);
      return Proof::cut(std::move(left), std::move(right), key_formula());
    }
    if (head == "plus-l" || head == "plus-r" || head == "weaken") {
      want(1, {":formula"}, {":formula"});
      Proof p = premise(0);
      if (head == "plus-l") return Proof::plus_l(std::move(p), key_formula());
      if (head == "plus-r") return Proof::plus_r(std::move(p), key_formula());
      return Proof::weakening(std::move(p), key_formula());
    }
    if (head == "exch") {
      want(1, {":perm"}, {":perm"});
      const Sexp& perm = *keys.at(":perm");
      if (!perm.is_list()) syntax(perm.at, "expected a list of positions");
      std::vector<std::size_t> positions;
      for (const auto& item : perm.items) positions.push_back(expect_number(item));
      return Proof::exchange(premise(0), std::move(positions));
    }
    static const std::map<std::string, Proof (*)(Proof)> unary = {
        {"bot-intro", Proof::bot_intro},   {"par-intro", Proof::par_intro}, {"derelict", Proof::dereliction},
        {"contract", Proof::contraction}, {"promote", Proof::promotion}};
    if (auto it = unary.find(head); it != unary.end()) {
      want(1, {}, {});
      return it->second(premise(0));
    }
    syntax(s.items[0].at, "unknown rule '" + head + "'");
  }

  Document doc_;
  std::map<std::string, bool> atoms_;
  std::map<std::string, Formula> formulas_;
  std::map<std::string, Proof> proofs_;
  std::map<std::string, bool> relations_;
};

template <class Decl>
const Decl* find_decl(const Document& doc, const std::string& name) {
  for (const auto& d : doc.declarations) {
    if (const auto* p = std::get_if<Decl>(&d); p && p->name == name) return p;
  }
  return nullptr;
}

std::string print_atom(const AtomDecl& a) {
  std::string out = "(atom " + a.name + " (states";
  for (const auto& s : a.states) out += " " + s;
  out += ") ";
  switch (a.body) {
    case AtomDecl::Body::kMagic:
      return out + "(builtin magic))";
    case AtomDecl::Body::kIdentity:
      return out + "(builtin identity))";
    case AtomDecl::Body::kTable:
      break;
  }
  out += "(table";
  for (std::size_t m = 0; m < a.images.size(); ++m) {
    out += " (" + mask_text(a.states, Bits(a.states.size(), m)) + " " + mask_text(a.states, a.images[m]) + ")";
  }
  return out + "))";
}

}  // namespace

std::string to_string(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::kStar:
      return "*";
    case Literal::Kind::kName:
      return lit.name;
    case Literal::Kind::kList:
    case Literal::Kind::kBag: {
      std::string out = lit.kind == Literal::Kind::kList ? "(" : "[";
      for (std::size_t i = 0; i < lit.items.size(); ++i) {
        if (i) out += ' ';
        out += to_string(lit.items[i]);
      }
      return out + (lit.kind == Literal::Kind::kList ? ")" : "]");
    }
  }
  return "";
}

Element resolve(const Literal& lit, const Carrier& c) {
  auto bad = [&]() -> Error { return Error("element " + to_string(lit) + " is not a member of " + c.to_string()); };
  switch (c.kind()) {
    case Carrier::Kind::kUnit:
      if (lit.kind == Literal::Kind::kStar) return Element::star();
      break;
    case Carrier::Kind::kVoid:
      break;
    case Carrier::Kind::kAtom:
      if (lit.kind == Literal::Kind::kName) {
        if (auto i = c.state_index(lit.name)) return Element::atom(*i);
      }
      break;
    case Carrier::Kind::kProd:
      if (lit.kind == Literal::Kind::kList && lit.items.size() == 2) {
        return Element::pair(resolve(lit.items[0], c.left()), resolve(lit.items[1], c.right()));
      }
      break;
    case Carrier::Kind::kSum:
      if (lit.kind == Literal::Kind::kList && lit.items.size() == 2 && lit.items[0].kind == Literal::Kind::kName) {
        if (lit.items[0].name == "l") return Element::inl(resolve(lit.items[1], c.left()));
        if (lit.items[0].name == "r") return Element::inr(resolve(lit.items[1], c.right()));
      }
      break;
    case Carrier::Kind::kBag:
      if (lit.kind == Literal::Kind::kBag && lit.items.size() <= c.max_degree()) {
        std::vector<Element> items;
        for (const auto& item : lit.items) items.push_back(resolve(item, c.base()));
        return Element::bag(std::move(items));
      }
      break;
  }
  throw bad();
}

Element parse_element(std::string_view text, const Carrier& c) {
  const auto forms = Reader(text).read_all();
  if (forms.size() != 1) syntax({1, 1}, "expected exactly one element");
  return resolve(read_literal(forms[0]), c);
}

Carrier AtomDecl::carrier() const { return Carrier::atom(name, states); }

Interface AtomDecl::interface(std::size_t max_states) const {
  switch (body) {
    case Body::kMagic:
      return Interface(Transformer::magic(carrier()));
    case Body::kIdentity:
      return Interface(Transformer::identity(carrier()));
    case Body::kTable:
      break;
  }
  return Interface(Transformer::table(carrier(), images, max_states));
}

std::optional<std::size_t> Document::degree() const {
  for (const auto& d : declarations) {
    if (const auto* p = std::get_if<DegreeDecl>(&d)) return p->degree;
  }
  return std::nullopt;
}

const AtomDecl* Document::atom(const std::string& name) const { return find_decl<AtomDecl>(*this, name); }
const FormulaDecl* Document::formula(const std::string& name) const { return find_decl<FormulaDecl>(*this, name); }
const ProofDecl* Document::proof(const std::string& name) const { return find_decl<ProofDecl>(*this, name); }
const RelationDecl* Document::relation(const std::string& name) const { return find_decl<RelationDecl>(*this, name); }

std::vector<const ProofDecl*> Document::proofs() const {
  std::vector<const ProofDecl*> out;
  for (const auto& d : declarations) {
    if (const auto* p = std::get_if<ProofDecl>(&d)) out.push_back(p);
  }
  return out;
}

Environment Document::environment(std::optional<std::size_t> degree_override, std::size_t max_states) const {
  Environment env;
  env.degree = degree_override.value_or(degree().value_or(3));
  for (const auto& d : declarations) {
    if (const auto* a = std::get_if<AtomDecl>(&d)) env.atoms.emplace(a->name, a->interface(max_states));
  }
  return env;
}

Document parse(std::string_view text) { return Parser().run(text); }

std::string print(const Formula& f) { return to_string(f); }

std::string print(const Proof& p) {
  using R = Proof::Rule;
  const std::string head = std::string("(") + rule_name(p.rule);
  auto sub = [&](std::size_t i) { return " " + print(p.premises[i]); };
  switch (p.rule) {
    case R::kOneIntro:
      return head + ")";
    case R::kAxiom:
      return head + " " + print(p.formula) + ")";
    case R::kTopIntro: {
      std::string out = head;
      for (const auto& f : p.context) out += " " + print(f);
      return out + ")";
    }
    case R::kTensorIntro:
      return head + sub(0) + sub(1) + (p.split ? " :split " + std::to_string(*p.split) : "") + ")";
    case R::kWithIntro:
      return head + sub(0) + sub(1) + ")";
    case R::kCut:
      return head + sub(0) + sub(1) + " :formula " + print(p.formula) + ")";
    case R::kPlusL:
    case R::kPlusR:
    case R::kWeakening:
      return head + sub(0) + " :formula " + print(p.formula) + ")";
    case R::kExchange: {
      std::string perm;
      for (std::size_t i = 0; i < p.permutation.size(); ++i) perm += (i ? " " : "") + std::to_string(p.permutation[i]);
      return head + sub(0) + " :perm (" + perm + "))";
    }
    case R::kBotIntro:
    case R::kParIntro:
    case R::kDereliction:
    case R::kContraction:
    case R::kPromotion:
      return head + sub(0) + ")";
  }
  return head + ")";
}

std::string print(const Document& doc) {
  std::string out;
  for (const auto& d : doc.declarations) {
    if (const auto* deg = std::get_if<DegreeDecl>(&d)) {
      out += "(degree " + std::to_string(deg->degree) + ")";
    } else if (const auto* a = std::get_if<AtomDecl>(&d)) {
      out += print_atom(*a);
    } else if (const auto* f = std::get_if<FormulaDecl>(&d)) {
      out += "(formula " + f->name + " " + print(f->formula) + ")";
    } else if (const auto* p = std::get_if<ProofDecl>(&d)) {
      out += "(proof " + p->name + " " + print(p->proof) + ")";
    } else if (const auto* r = std::get_if<RelationDecl>(&d)) {
      out += "(relation " + r->name + " (pairs";
      for (const auto& lit : r->pairs) out += " " + to_string(lit);
      out += "))";
    }
    out += '\n';
  }
  return out;
}

Relation relation_of(const RelationDecl& decl, const Carrier& source, const Carrier& target) {
  const Carrier product = Carrier::product(source, target);
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& lit : decl.pairs) {
    const Element e = resolve(lit, product);
    pairs.emplace_back(e.first(), e.second());
  }
  return Relation(source, target, pairs);
}

}  // namespace llpt::dsl
