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
#include <cstdint>
#include <string>
#include <vector>

namespace llpt {

struct LawConfig {
  /// Largest atom carrier used by the pools (1 to 4).
  std::size_t atom_size = 3;
  /// Exponential degree; the exponential laws use min(degree, 2).
  std::size_t degree = 2;
  /// Random monotone atoms drawn for the seed-lattice law.
  std::size_t rand_atoms = 50;
  std::uint64_t rng_seed = 1;
  /// Largest carrier whose subsets are enumerated.
  std::size_t max_states = 12;
};

struct LawResult {
  std::string name;
  bool pass = true;
  /// First failing case, empty on success.
  std::string counterexample;
  std::size_t cases = 0;
};

struct Report {
  std::vector<LawResult> results;
  bool all_pass() const;
  const LawResult* find(const std::string& name) const;
};

/// Names of every law, in suite order.
std::vector<std::string> law_names();

/// Runs one law. Throws llpt::Error on an unknown name or a bad config.
LawResult run_law(const std::string& name, const LawConfig& config);

/// Runs the named laws (all of them when `names` is empty). Laws are
/// independent; results keep suite order.
Report run_law_suite(const LawConfig& config, const std::vector<std::string>& names = {});

/// One JSON object per line: {"name":..,"verdict":"pass"|"fail","counterexample":..|null}.
std::string to_jsonl(const Report& report);

}  // namespace llpt
