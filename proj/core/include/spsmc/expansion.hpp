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
#ifndef SPSMC_EXPANSION_HPP
#define SPSMC_EXPANSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spsmc/grounding.hpp"
#include "spsmc/sps.hpp"

namespace spsmc {

/// Behaviour of a request arriving at a saturated counter (and of an answer
/// at zero): Block disables the transition, Freeze takes it without touching
/// counters or flags, matching the emitted SMV's case fallthrough.
enum class AtBound { Block, Freeze };

/// A state of the interpreted bounded structure: server state, per-type
/// counters, and per-type request/answer flag sets (bit j-1 = flag index j).
struct InterpretedState {
  int state = 0;
  std::vector<int> counters;
  std::vector<std::uint64_t> p_flags;
  std::vector<std::uint64_t> q_flags;

  auto operator<=>(const InterpretedState&) const = default;
};

struct KripkeTransition {
  int from = 0;
  ExtendedAction action;
  int to = 0;

  auto operator<=>(const KripkeTransition&) const = default;
};

/// The reachable interpreted structure, materialized explicitly. States are
/// in canonical order (id = rank); labels are atom-id sets over the fixed
/// atom universe (server propositions plus all flag atoms of the bound).
struct KripkeStructure {
  Sps sps;
  GroundingMap grounding;
  AtBound at_bound = AtBound::Block;

  std::vector<InterpretedState> states;
  std::vector<int> initial;                    // sorted state ids
  std::vector<KripkeTransition> transitions;   // sorted
  std::vector<std::vector<int>> out;           // per state: transition indices

  std::vector<std::string> atoms;              // sorted universe
  std::vector<std::vector<int>> state_atoms;   // per state: sorted atom ids

  int atom_id(const std::string& name) const;  // -1 when unknown
  bool state_has_atom(int state, int atom) const;
};

/// Builds the reachable bounded structure. Every type used by a transition
/// of `sps` needs a positive bound; flag counts are limited to 64 per type
/// (CapacityError beyond).
KripkeStructure expand(const Sps& sps, const BoundProfile& bounds,
                       AtBound at_bound = AtBound::Block);

/// Atom names labeling a state: server labels of the location plus the
/// state's flag atoms.
std::vector<std::string> label(const InterpretedState& state, const Sps& sps,
                               const GroundingMap& grounding);

std::string to_string(const InterpretedState& state, const KripkeStructure& k);

/// Canonical dump, one state per line (name, counters, sorted flags, sorted
/// labels) followed by the transition list.
std::string dump_kripke(const KripkeStructure& k);

}  // namespace spsmc

#endif  // SPSMC_EXPANSION_HPP
