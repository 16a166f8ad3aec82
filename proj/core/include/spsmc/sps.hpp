/*
 * Copyright 2026 The spsmc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SPSMC_SPS_HPP
#define SPSMC_SPS_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spsmc/alphabet.hpp"

namespace spsmc {

struct SpsTransition {
  int from = 0;
  ExtendedAction action;
  int to = 0;

  auto operator<=>(const SpsTransition&) const = default;
};

/// A finite server transition system over the extended alphabet. Client
/// bookkeeping is not part of the structure; it lives in the configuration
/// semantics below. States are kept sorted by name so that every id-based
/// iteration is lexicographic and reproducible.
struct Sps {
  ServiceAlphabet alphabet;
  std::vector<std::string> states;            // sorted, unique; index = state id
  std::vector<SpsTransition> transitions;     // sorted, unique
  std::vector<int> initial;                   // sorted state ids, non-empty
  std::optional<std::vector<int>> final;      // sorted state ids
  std::vector<std::vector<std::string>> labels;  // per state: sorted server props

  int state_id(const std::string& name) const;
  const std::string& state_name(int id) const { return states.at(id); }
  bool has_tau() const;
};

/// Name-based description used to assemble an Sps; `make_sps` canonicalizes
/// (sorts states and transitions) and validates all cross-references.
struct SpsDescription {
  std::vector<std::string> types;
  std::vector<std::string> states;
  std::vector<std::tuple<std::string, ExtendedAction, std::string>> transitions;
  std::vector<std::string> initial;
  std::optional<std::vector<std::string>> final;
  std::map<std::string, std::vector<std::string>> labels;
};

Sps make_sps(const SpsDescription& description);

/// Server state plus the finite sets of active client indices, one set per
/// client type. Client names are (type, index) pairs with index >= 1; the
/// per-type index sets are kept sorted.
struct Configuration {
  int state = 0;
  std::vector<std::vector<int>> active;

  auto operator<=>(const Configuration&) const = default;
};

/// (s, all-empty) for every initial state s.
std::vector<Configuration> initial_configurations(const Sps& sps);

std::string to_string(const Configuration& c, const Sps& sps);

/// A run: the word together with the configuration sequence it traverses
/// (configs.size() == word.size() + 1, configs[0] initial).
struct Run {
  std::vector<ExtendedAction> word;
  std::vector<Configuration> configs;

  auto operator<=>(const Run&) const = default;
};

/// One-step successors of `c` under action `a`: one successor per matching
/// transition. Requests add the least absent index of the type, answers
/// remove the least active index and block when no client of the type is
/// active. Returns the empty set when no transition applies; malformed
/// inputs (unknown state, bad active sets) raise InputError instead.
std::vector<Configuration> step(const Sps& sps, const Configuration& c,
                                const ExtendedAction& a);

/// All runs of the SPS on `word`, from every initial configuration.
std::vector<Run> run_all(const Sps& sps, const std::vector<ExtendedAction>& word);

/// True iff some run on `word` ends in a final state. Requires `sps.final`.
bool accepts(const Sps& sps, const std::vector<ExtendedAction>& word);

/// Breadth-first closure of the step relation up to `depth` steps, starting
/// from the initial configurations. Result is sorted canonically.
std::vector<Configuration> reachable(const Sps& sps, int depth);

/// A shortest accepted word of length <= depth, if one exists within the
/// horizon. Absence means only "no witness within depth". Requires final
/// states; ties are broken toward the lexicographically least word.
std::optional<std::vector<ExtendedAction>> emptiness_witness_bounded(const Sps& sps,
                                                                     int depth);

}  // namespace spsmc

#endif  // SPSMC_SPS_HPP
