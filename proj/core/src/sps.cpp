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
#include "spsmc/sps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace {

void validate_action(const ServiceAlphabet& alphabet, const ExtendedAction& a) {
  switch (a.kind) {
    case ActionKind::Tau:
      return;
    case ActionKind::Req:
    case ActionKind::Ans:
      if (a.type < 0 || a.type >= alphabet.size()) {
        throw InputError("action refers to unknown client type index " +
                         std::to_string(a.type));
      }
      return;
    case ActionKind::Quiescent:
      throw InputError("quiescent actions cannot appear in an SPS");
  }
}

void validate_configuration(const Sps& sps, const Configuration& c) {
  if (c.state < 0 || c.state >= static_cast<int>(sps.states.size())) {
    throw InputError("configuration refers to unknown state id " +
                     std::to_string(c.state));
  }
  if (static_cast<int>(c.active.size()) != sps.alphabet.size()) {
    throw InputError("configuration has wrong number of active sets");
  }
  for (const auto& indices : c.active) {
    int prev = 0;
    for (int i : indices) {
      if (i < 1) throw InputError("client indices must be >= 1");
      if (i <= prev) throw InputError("active sets must be sorted and duplicate-free");
      prev = i;
    }
  }
}

// Distinct actions available from a state, in canonical order.
std::vector<ExtendedAction> enabled_actions(const Sps& sps, int state) {
  std::vector<ExtendedAction> actions;
  for (const auto& t : sps.transitions) {
    if (t.from == state) actions.push_back(t.action);
  }
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  return actions;
}

}  // namespace

int Sps::state_id(const std::string& name) const {
  auto it = std::lower_bound(states.begin(), states.end(), name);
  if (it == states.end() || *it != name) return -1;
  return static_cast<int>(it - states.begin());
}

bool Sps::has_tau() const {
  return std::any_of(transitions.begin(), transitions.end(),
                     [](const SpsTransition& t) { return t.action.kind == ActionKind::Tau; });
}

Sps make_sps(const SpsDescription& description) {
  Sps sps;
  sps.alphabet = ServiceAlphabet(description.types);

  sps.states = description.states;
  std::sort(sps.states.begin(), sps.states.end());
  if (sps.states.empty()) {
    throw InputError("an SPS must declare at least one state");
  }
  if (std::adjacent_find(sps.states.begin(), sps.states.end()) != sps.states.end()) {
    throw InputError("duplicate state name");
  }

  auto id_of = [&sps](const std::string& name) {
    int id = sps.state_id(name);
    if (id < 0) throw InputError("undeclared state '" + name + "'");
    return id;
  };

  for (const auto& [from, action, to] : description.transitions) {
    validate_action(sps.alphabet, action);
    sps.transitions.push_back({id_of(from), action, id_of(to)});
  }
  std::sort(sps.transitions.begin(), sps.transitions.end());
  sps.transitions.erase(std::unique(sps.transitions.begin(), sps.transitions.end()),
                        sps.transitions.end());

  if (description.initial.empty()) {
    throw InputError("an SPS must declare at least one initial state");
  }
  for (const auto& name : description.initial) sps.initial.push_back(id_of(name));
  std::sort(sps.initial.begin(), sps.initial.end());
  sps.initial.erase(std::unique(sps.initial.begin(), sps.initial.end()), sps.initial.end());

  if (description.final.has_value()) {
    std::vector<int> final_ids;
    for (const auto& name : *description.final) final_ids.push_back(id_of(name));
    std::sort(final_ids.begin(), final_ids.end());
    final_ids.erase(std::unique(final_ids.begin(), final_ids.end()), final_ids.end());
    sps.final = std::move(final_ids);
  }

  sps.labels.assign(sps.states.size(), {});
  for (const auto& [name, props] : description.labels) {
    auto& slot = sps.labels[id_of(name)];
    slot.insert(slot.end(), props.begin(), props.end());
    std::sort(slot.begin(), slot.end());
    slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
  }
  return sps;
}

std::vector<Configuration> initial_configurations(const Sps& sps) {
  std::vector<Configuration> result;
  for (int s : sps.initial) {
    Configuration c;
    c.state = s;
    c.active.assign(sps.alphabet.size(), {});
    result.push_back(std::move(c));
  }
  return result;
}

std::string to_string(const Configuration& c, const Sps& sps) {
  std::ostringstream out;
  out << "(" << sps.state_name(c.state);
  for (int i = 0; i < sps.alphabet.size(); ++i) {
    out << ", " << sps.alphabet.name(i) << "={";
    for (size_t j = 0; j < c.active[i].size(); ++j) {
      if (j) out << ",";
      out << c.active[i][j];
    }
    out << "}";
  }
  out << ")";
  return out.str();
}

std::vector<Configuration> step(const Sps& sps, const Configuration& c,
                                const ExtendedAction& a) {
  validate_configuration(sps, c);
  validate_action(sps.alphabet, a);

  std::vector<Configuration> result;
  for (const auto& t : sps.transitions) {
    if (t.from != c.state || t.action != a) continue;
    Configuration next = c;
    next.state = t.to;
    switch (a.kind) {
      case ActionKind::Tau:
        break;
      case ActionKind::Req: {
        // New client of the type: least index not currently active.
        auto& indices = next.active[a.type];
        int fresh = 1;
        for (int used : indices) {
          if (used != fresh) break;
          ++fresh;
        }
        indices.insert(std::lower_bound(indices.begin(), indices.end(), fresh), fresh);
        break;
      }
      case ActionKind::Ans: {
        auto& indices = next.active[a.type];
        if (indices.empty()) continue;  // blocked: no active client of the type
        indices.erase(indices.begin());  // least index answered first
        break;
      }
      case ActionKind::Quiescent:
        continue;
    }
    result.push_back(std::move(next));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Run> run_all(const Sps& sps, const std::vector<ExtendedAction>& word) {
  for (const auto& a : word) validate_action(sps.alphabet, a);

  std::vector<Run> runs;
  for (const auto& c0 : initial_configurations(sps)) {
    runs.push_back(Run{{}, {c0}});
  }
  for (const auto& a : word) {
    std::vector<Run> extended;
    for (const auto& run : runs) {
      for (const auto& next : step(sps, run.configs.back(), a)) {
        Run r = run;
        r.word.push_back(a);
        r.configs.push_back(next);
        extended.push_back(std::move(r));
      }
    }
    runs = std::move(extended);
    if (runs.empty()) break;
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

bool accepts(const Sps& sps, const std::vector<ExtendedAction>& word) {
  if (!sps.final.has_value()) {
    throw ConfigError("acceptance requires final states");
  }
  for (const auto& run : run_all(sps, word)) {
    int last = run.configs.back().state;
    if (std::binary_search(sps.final->begin(), sps.final->end(), last)) return true;
  }
  return false;
}

std::vector<Configuration> reachable(const Sps& sps, int depth) {
  if (depth < 0) throw InputError("depth must be non-negative");

  std::set<Configuration> seen;
  std::vector<Configuration> frontier = initial_configurations(sps);
  std::sort(frontier.begin(), frontier.end());
  for (const auto& c : frontier) seen.insert(c);

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Configuration> next_frontier;
    for (const auto& c : frontier) {
      for (const auto& a : enabled_actions(sps, c.state)) {
        for (auto& next : step(sps, c, a)) {
          if (seen.insert(next).second) next_frontier.push_back(std::move(next));
        }
      }
    }
    std::sort(next_frontier.begin(), next_frontier.end());
    next_frontier.erase(std::unique(next_frontier.begin(), next_frontier.end()),
                        next_frontier.end());
    frontier = std::move(next_frontier);
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::vector<ExtendedAction>> emptiness_witness_bounded(const Sps& sps,
                                                                     int depth) {
  if (!sps.final.has_value()) {
    throw ConfigError("emptiness witness search requires final states");
  }
  if (depth < 0) throw InputError("depth must be non-negative");

  auto is_final = [&sps](const Configuration& c) {
    return std::binary_search(sps.final->begin(), sps.final->end(), c.state);
  };

  using Entry = std::pair<std::vector<ExtendedAction>, Configuration>;
  std::vector<Entry> frontier;
  std::set<Configuration> seen;
  for (const auto& c : initial_configurations(sps)) {
    frontier.push_back({{}, c});
    seen.insert(c);
  }
  std::sort(frontier.begin(), frontier.end());

  for (int level = 0; level <= depth; ++level) {
    for (const auto& [word, c] : frontier) {
      if (is_final(c)) return word;
    }
    if (level == depth) break;

    std::vector<Entry> next_frontier;
    for (const auto& [word, c] : frontier) {
      for (const auto& a : enabled_actions(sps, c.state)) {
        for (auto& next : step(sps, c, a)) {
          if (seen.count(next)) continue;
          auto extended = word;
          extended.push_back(a);
          next_frontier.push_back({std::move(extended), std::move(next)});
        }
      }
    }
    // Keep the lexicographically least word per configuration; mark the
    // survivors visited so later levels cannot revisit them.
    std::sort(next_frontier.begin(), next_frontier.end());
    std::vector<Entry> deduped;
    for (auto& entry : next_frontier) {
      if (seen.insert(entry.second).second) deduped.push_back(std::move(entry));
    }
    frontier = std::move(deduped);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

}  // namespace spsmc
