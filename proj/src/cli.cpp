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

#include "llpt/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "llpt/checker.hpp"
#include "llpt/dsl.hpp"
#include "llpt/formula.hpp"
#include "llpt/laws.hpp"
#include "llpt/proof.hpp"
#include "llpt/relation.hpp"

namespace llpt {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::optional<std::size_t> degree;
  std::size_t max_states = 12;
  std::string format = "human";
  std::string file;
  std::string proof;
  std::string formula;
  std::string relation;
  std::string from;
  std::string to;
  std::size_t atom_size = 3;
  std::size_t rand_atoms = 50;
  std::uint64_t rng_seed = 1;
  std::vector<std::string> laws;

  bool jsonl() const { return format == "jsonl"; }
};

class Usage : public Error {
 public:
  using Error::Error;
};

dsl::Document load(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    dsl::Document doc = dsl::parse(buffer.str());
    for (const auto& note : doc.notes) err << "note: " << path << ": " << note << "\n";
    return doc;
  } catch (const dsl::ParseError& e) {
    throw Usage(path + ":" + e.what());
  }
}

const Formula& named_formula(const dsl::Document& doc, const std::string& name) {
  const auto* f = doc.formula(name);
  if (!f) throw Usage("no formula named " + name);
  return f->formula;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const dsl::Document doc = load(o.file, err);
  const Environment env = doc.environment(o.degree, o.max_states);
  int status = kOk;
  for (const auto* decl : doc.proofs()) {
    SoundnessReport report;
    try {
      report = check_soundness(decl->proof, env);
    } catch (const Error& e) {
      throw Usage("proof " + decl->name + ": " + e.what());
    }
    if (!report.seed) status = kCheckFailed;
    if (o.jsonl()) {
      Json j;
      j["name"] = decl->name;
      j["verdict"] = report.seed ? "pass" : "fail";
      j["counterexample"] = report.seed ? Json(nullptr) : Json(report.counterexample_text);
      out << j.dump() << "\n";
    } else if (report.seed) {
      out << "PASS " << decl->name << "\n";
    } else {
      out << "FAIL " << decl->name << ": " << report.counterexample_text << " is not in the image of the denotation\n";
    }
  }
  return status;
}

int cmd_interpret(const Options& o, std::ostream& out, std::ostream& err) {
  const dsl::Document doc = load(o.file, err);
  const auto* decl = doc.proof(o.proof);
  if (!decl) throw Usage("no proof named " + o.proof);
  const StateSet d = interpret(decl->proof, doc.environment(o.degree, o.max_states));
  if (o.jsonl()) {
    Json j;
    j["name"] = decl->name;
    j["sequent"] = to_string(conclusion(decl->proof));
    j["elements"] = Json::array();
    for (const auto& e : d.members()) j["elements"].push_back(format_element(d.carrier(), e));
    out << j.dump() << "\n";
  } else {
    for (const auto& e : d.members()) out << format_element(d.carrier(), e) << "\n";
  }
  return kOk;
}

int cmd_seeds(const Options& o, std::ostream& out, std::ostream& err) {
  const dsl::Document doc = load(o.file, err);
  const Interface x = semantics(named_formula(doc, o.formula), doc.environment(o.degree, o.max_states));
  const auto seeds = enumerate_seeds(x, o.max_states);
  if (o.jsonl()) {
    Json j;
    j["name"] = o.formula;
    j["seeds"] = Json::array();
    for (const auto& s : seeds) j["seeds"].push_back(s.to_string());
    out << j.dump() << "\n";
  } else {
    for (const auto& s : seeds) out << s.to_string() << "\n";
  }
  return kOk;
}

int cmd_refine(const Options& o, std::ostream& out, std::ostream& err) {
  const dsl::Document doc = load(o.file, err);
  const Environment env = doc.environment(o.degree, o.max_states);
  const auto* decl = doc.relation(o.relation);
  if (!decl) throw Usage("no relation named " + o.relation);
  const Interface x = semantics(named_formula(doc, o.from), env);
  const Interface y = semantics(named_formula(doc, o.to), env);
  const Relation r = dsl::relation_of(*decl, x.carrier(), y.carrier());
  const auto bad = simulation_counterexample(r, x, y, o.max_states);
  if (o.jsonl()) {
    Json j;
    j["name"] = o.relation;
    j["verdict"] = bad ? "fail" : "pass";
    j["counterexample"] = bad ? Json(bad->to_string()) : Json(nullptr);
    out << j.dump() << "\n";
  } else if (bad) {
    out << "FAIL " << o.relation << ": " << o.from << " -> " << o.to << " at " << bad->to_string() << "\n";
  } else {
    out << "PASS " << o.relation << ": " << o.from << " -> " << o.to << "\n";
  }
  return bad ? kCheckFailed : kOk;
}

int cmd_laws(const Options& o, std::ostream& out, std::ostream&) {
  LawConfig config;
  config.atom_size = o.atom_size;
  config.degree = o.degree.value_or(3);
  config.rand_atoms = o.rand_atoms;
  config.rng_seed = o.rng_seed;
  config.max_states = o.max_states;
  const Report report = run_law_suite(config, o.laws);
  if (o.jsonl()) {
    out << to_jsonl(report);
  } else {
    for (const auto& r : report.results) {
      if (r.pass) {
        out << "PASS " << r.name << "\n";
      } else {
        out << "FAIL " << r.name << ": " << r.counterexample << "\n";
      }
    }
  }
  return report.all_pass() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite predicate-transformer models of linear logic", "llpt"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--degree", o.degree, "Degree bound for ! and ? (default: file directive, else 3)");
  app.add_option("--max-states", o.max_states, "Largest carrier whose subsets are enumerated")
      ->envname("LLPT_MAX_STATES")
      ->check(CLI::Range(1, 24));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "jsonl"}));

  auto* check = app.add_subcommand("check", "Check that every proof denotes a seed of its conclusion");
  check->add_option("file", o.file)->required();

  auto* interp = app.add_subcommand("interpret", "Print the denotation of a proof");
  interp->add_option("file", o.file)->required();
  interp->add_option("--proof", o.proof)->required();

  auto* seeds = app.add_subcommand("seeds", "List the seeds of a formula");
  seeds->add_option("file", o.file)->required();
  seeds->add_option("--formula", o.formula)->required();

  auto* refine = app.add_subcommand("refine", "Check a relation is a forward simulation");
  refine->add_option("file", o.file)->required();
  refine->add_option("--rel", o.relation)->required();
  refine->add_option("--from", o.from)->required();
  refine->add_option("--to", o.to)->required();

  auto* laws = app.add_subcommand("laws", "Run the law suite");
  laws->add_option("--atom-size", o.atom_size)->check(CLI::Range(1, 4));
  laws->add_option("--rand-atoms", o.rand_atoms);
  laws->add_option("--rng-seed", o.rng_seed);
  laws->add_option("--law", o.laws, "Run only the named law (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (interp->parsed()) return cmd_interpret(o, out, err);
    if (seeds->parsed()) return cmd_seeds(o, out, err);
    if (refine->parsed()) return cmd_refine(o, out, err);
    return cmd_laws(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace llpt
