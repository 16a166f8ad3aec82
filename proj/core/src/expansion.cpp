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
#include "spsmc/expansion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace {

// q-flags live for exactly one instant: every successor starts from the
// source flags with all q-flags cleared.
InterpretedState pulse_cleared(const InterpretedState& s) {
  InterpretedState next = s;
  for (auto& q : next.q_flags) q = 0;
  return next;
}

// Successors of `s` under one concrete transition, or nothing when blocked.
std::vector<InterpretedState> successors_via(const InterpretedState& s,
                                             const SpsTransition& t,
                                             const BoundProfile& bounds,
                                             AtBound at_bound) {
  InterpretedState next = pulse_cleared(s);
  next.state = t.to;
  switch (t.action.kind) {
    case ActionKind::Tau:
      return {next};
    case ActionKind::Req: {
      int i = t.action.type;
      if (s.counters[i] < bounds.n_of(i)) {
        next.counters[i] += 1;
        next.p_flags[i] |= std::uint64_t{1} << (next.counters[i] - 1);
        return {next};
      }
      if (at_bound == AtBound::Freeze) return {next};  // counters/flags frozen
      return {};
    }
    case ActionKind::Ans: {
      int i = t.action.type;
      if (s.counters[i] >= 1) {
        int index = s.counters[i];  // answered slot: the pre-decrement top
        next.counters[i] -= 1;
        next.p_flags[i] &= ~(std::uint64_t{1} << (index - 1));
        next.q_flags[i] |= std::uint64_t{1} << (index - 1);
        return {next};
      }
      if (at_bound == AtBound::Freeze) return {next};
      return {};
    }
    case ActionKind::Quiescent:
      return {};
  }
  return {};
}

}  // namespace

int KripkeStructure::atom_id(const std::string& name) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
  if (it == atoms.end() || *it != name) return -1;
  return static_cast<int>(it - atoms.begin());
}

bool KripkeStructure::state_has_atom(int state, int atom) const {
  const auto& row = state_atoms.at(state);
  return std::binary_search(row.begin(), row.end(), atom);
}

std::vector<std::string> label(const InterpretedState& state, const Sps& sps,
                               const GroundingMap& grounding) {
  std::vector<std::string> names = sps.labels.at(state.state);
  for (int i = 0; i < grounding.alphabet.size(); ++i) {
    for (int j = 1; j <= grounding.bound_n[i]; ++j) {
      if (state.p_flags[i] >> (j - 1) & 1) names.push_back(grounding.request_atom(i, j));
      if (state.q_flags[i] >> (j - 1) & 1) names.push_back(grounding.answer_atom(i, j));
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

KripkeStructure expand(const Sps& sps, const BoundProfile& bounds, AtBound at_bound) {
  if (bounds.alphabet != sps.alphabet) {
    throw InputError("bound profile computed for a different service alphabet");
  }
  for (const auto& t : sps.transitions) {
    if (t.action.kind == ActionKind::Tau) continue;
    if (bounds.n_of(t.action.type) < 1) {
      throw InputError("type '" + sps.alphabet.name(t.action.type) +
                       "' is used by the model but has bound 0");
    }
  }
  for (int i = 0; i < sps.alphabet.size(); ++i) {
    if (bounds.n_of(i) > 64) {
      throw CapacityError("bound " + std::to_string(bounds.n_of(i)) + " for type '" +
                          sps.alphabet.name(i) + "' exceeds the 64-flag limit");
    }
  }

  int k = sps.alphabet.size();
  InterpretedState blank;
  blank.counters.assign(k, 0);
  blank.p_flags.assign(k, 0);
  blank.q_flags.assign(k, 0);

  // Discovery BFS, then a canonical renumbering pass.
  std::map<InterpretedState, int> ids;
  std::vector<InterpretedState> discovered;
  std::vector<std::tuple<int, ExtendedAction, int>> edges;
  std::vector<int> worklist;

  auto intern = [&](const InterpretedState& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(discovered.size()));
    if (fresh) {
      discovered.push_back(s);
      worklist.push_back(it->second);
    }
    return it->second;
  };

  std::vector<int> initial_ids;
  for (int s : sps.initial) {
    InterpretedState init = blank;
    init.state = s;
    initial_ids.push_back(intern(init));
  }

  for (size_t cursor = 0; cursor < worklist.size(); ++cursor) {
    int id = worklist[cursor];
    InterpretedState current = discovered[id];
    for (const auto& t : sps.transitions) {
      if (t.from != current.state) continue;
      for (const auto& next : successors_via(current, t, bounds, at_bound)) {
        edges.emplace_back(id, t.action, intern(next));
      }
    }
  }

  KripkeStructure result;
  result.sps = sps;
  result.grounding = make_grounding_map(bounds);
  result.at_bound = at_bound;

  // Canonical order: sort interpreted states, remap ids.
  result.states.assign(discovered.begin(), discovered.end());
  std::sort(result.states.begin(), result.states.end());
  std::map<InterpretedState, int> canonical;
  for (int i = 0; i < static_cast<int>(result.states.size()); ++i) {
    canonical[result.states[i]] = i;
  }
  auto remap = [&](int old_id) { return canonical.at(discovered[old_id]); };

  for (int id : initial_ids) result.initial.push_back(remap(id));
  std::sort(result.initial.begin(), result.initial.end());

  for (const auto& [from, action, to] : edges) {
    result.transitions.push_back({remap(from), action, remap(to)});
  }
  std::sort(result.transitions.begin(), result.transitions.end());
  result.transitions.erase(
      std::unique(result.transitions.begin(), result.transitions.end()),
      result.transitions.end());

  result.out.assign(result.states.size(), {});
  for (int i = 0; i < static_cast<int>(result.transitions.size()); ++i) {
    result.out[result.transitions[i].from].push_back(i);
  }

  // Atom universe: every server proposition plus every flag atom of the
  // bound, known up front so formula atoms can be interned consistently.
  std::vector<std::string> universe = result.grounding.all_atoms();
  for (const auto& props : sps.labels) {
    universe.insert(universe.end(), props.begin(), props.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  result.atoms = std::move(universe);

  for (const auto& state : result.states) {
    std::vector<int> row;
    for (const auto& name : label(state, sps, result.grounding)) {
      row.push_back(result.atom_id(name));
    }
    std::sort(row.begin(), row.end());
    result.state_atoms.push_back(std::move(row));
  }
  return result;
}

namespace {

std::string flags_string(const InterpretedState& s, const GroundingMap& grounding) {
  std::vector<std::string> names;
  for (int i = 0; i < grounding.alphabet.size(); ++i) {
    for (int j = 1; j <= grounding.bound_n[i]; ++j) {
      if (s.p_flags[i] >> (j - 1) & 1) names.push_back(grounding.request_atom(i, j));
      if (s.q_flags[i] >> (j - 1) & 1) names.push_back(grounding.answer_atom(i, j));
    }
  }
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

}  // namespace

std::string to_string(const InterpretedState& state, const KripkeStructure& k) {
  std::ostringstream out;
  out << "(" << k.sps.state_name(state.state) << ", ctr=[";
  for (size_t i = 0; i < state.counters.size(); ++i) {
    if (i) out << ",";
    out << state.counters[i];
  }
  out << "], " << flags_string(state, k.grounding) << ")";
  return out.str();
}

std::string dump_kripke(const KripkeStructure& k) {
  std::ostringstream out;
  out << "states " << k.states.size() << " transitions " << k.transitions.size()
      << " initial";
  for (int id : k.initial) out << " " << id;
  out << "\n";
  for (size_t i = 0; i < k.states.size(); ++i) {
    const auto& s = k.states[i];
    out << i << " " << k.sps.state_name(s.state) << " [";
    for (size_t j = 0; j < s.counters.size(); ++j) {
      if (j) out << ",";
      out << s.counters[j];
    }
    out << "] " << flags_string(s, k.grounding) << " {";
    const auto& row = k.state_atoms[i];
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ",";
      out << k.atoms[row[j]];
    }
    out << "}\n";
  }
  for (const auto& t : k.transitions) {
    out << t.from << " -" << to_string(t.action, k.sps.alphabet) << "-> " << t.to << "\n";
  }
  return out.str();
}

}  // namespace spsmc
