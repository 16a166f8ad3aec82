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
#include "spsmc/checker.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace {

// ---------------------------------------------------------------------------
// Deadlock completion: LTL path semantics needs infinite paths, but an SPS
// can block (e.g. answers with no active client). States without successors
// get a quiescent self-loop; the loop is visible in counterexamples.
// ---------------------------------------------------------------------------

struct CompletedGraph {
  std::vector<std::vector<std::pair<ExtendedAction, int>>> succ;  // sorted
  bool completed = false;
};

CompletedGraph complete(const KripkeStructure& k) {
  CompletedGraph graph;
  graph.succ.assign(k.states.size(), {});
  for (const auto& t : k.transitions) {
    graph.succ[t.from].push_back({t.action, t.to});
  }
  for (size_t s = 0; s < graph.succ.size(); ++s) {
    if (graph.succ[s].empty()) {
      graph.succ[s].push_back({quiescent_action(), static_cast<int>(s)});
      graph.completed = true;
    }
    std::sort(graph.succ[s].begin(), graph.succ[s].end());
  }
  return graph;
}

std::vector<std::string> unknown_atom_warnings(const KripkeStructure& k,
                                               const LtlPtr& phi) {
  std::vector<std::string> warnings;
  for (const auto& name : atoms_of(phi)) {
    if (k.atom_id(name) < 0) {
      warnings.push_back("unknown atom '" + name + "' treated as false");
    }
  }
  return warnings;
}

// ---------------------------------------------------------------------------
// Product of the completed structure with the Buchi automaton for !phi.
// Product state (k, b): b has just read the label of k.
// ---------------------------------------------------------------------------

struct InternedConstraint {
  std::vector<std::pair<int, bool>> literals;  // (atom id, positive)
  bool feasible = true;  // false when a positive literal names an unknown atom
};

InternedConstraint intern_constraint(const std::vector<BuchiLiteral>& literals,
                                     const KripkeStructure& k) {
  InternedConstraint interned;
  for (const auto& lit : literals) {
    int id = k.atom_id(lit.atom);
    if (id < 0) {
      // Unknown atoms are uniformly false.
      if (lit.positive) interned.feasible = false;
    } else {
      interned.literals.push_back({id, lit.positive});
    }
  }
  return interned;
}

struct Product {
  const KripkeStructure& k;
  std::vector<std::pair<int, int>> states;  // (k state, buchi state)
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::vector<std::pair<ExtendedAction, int>>> succ;  // canonical order
  std::vector<char> accepting;
  std::vector<int> initial;
};

Product build_product(const KripkeStructure& k, const CompletedGraph& graph,
                      const BuchiAutomaton& automaton) {
  std::vector<InternedConstraint> constraints;
  constraints.reserve(automaton.states.size());
  for (const auto& state : automaton.states) {
    constraints.push_back(intern_constraint(state.constraint, k));
  }
  auto satisfied = [&](int buchi_state, int k_state) {
    const InternedConstraint& c = constraints[buchi_state];
    if (!c.feasible) return false;
    for (const auto& [atom, positive] : c.literals) {
      if (k.state_has_atom(k_state, atom) != positive) return false;
    }
    return true;
  };

  Product product{k, {}, {}, {}, {}, {}};
  std::vector<int> worklist;
  auto intern = [&](int ks, int bs) {
    auto [it, fresh] = product.ids.emplace(std::make_pair(ks, bs),
                                           static_cast<int>(product.states.size()));
    if (fresh) {
      product.states.push_back({ks, bs});
      product.succ.push_back({});
      product.accepting.push_back(automaton.states[bs].accepting ? 1 : 0);
      worklist.push_back(it->second);
    }
    return it->second;
  };

  for (int ks : k.initial) {
    for (int bs : automaton.initial) {
      if (satisfied(bs, ks)) product.initial.push_back(intern(ks, bs));
    }
  }

  constexpr size_t kProductLimit = 5'000'000;
  for (size_t cursor = 0; cursor < worklist.size(); ++cursor) {
    int id = worklist[cursor];
    auto [ks, bs] = product.states[id];
    for (const auto& [action, kt] : graph.succ[ks]) {
      for (int bt : automaton.succ[bs]) {
        if (!satisfied(bt, kt)) continue;
        product.succ[id].push_back({action, intern(kt, bt)});
      }
    }
    if (product.states.size() > kProductLimit) {
      throw CapacityError("product exceeds the exploration limit");
    }
  }

  // Canonical edge order: by action, then target (k, b) pair.
  for (auto& edges : product.succ) {
    std::sort(edges.begin(), edges.end(),
              [&](const auto& a, const auto& b) {
                return std::make_pair(a.first, product.states[a.second]) <
                       std::make_pair(b.first, product.states[b.second]);
              });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  std::sort(product.initial.begin(), product.initial.end(),
            [&](int a, int b) { return product.states[a] < product.states[b]; });
  product.initial.erase(std::unique(product.initial.begin(), product.initial.end()),
                        product.initial.end());
  return product;
}

std::vector<int> bfs_distances(const Product& product, const std::vector<int>& sources) {
  std::vector<int> dist(product.states.size(), -1);
  std::vector<int> queue;
  for (int s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (size_t cursor = 0; cursor < queue.size(); ++cursor) {
    int at = queue[cursor];
    for (const auto& [action, to] : product.succ[at]) {
      (void)action;
      if (dist[to] < 0) {
        dist[to] = dist[at] + 1;
        queue.push_back(to);
      }
    }
  }
  return dist;
}

// Shortest cycle length through `v`, or -1 when v lies on no cycle.
int shortest_cycle(const Product& product, int v) {
  std::vector<int> sources;
  for (const auto& [action, to] : product.succ[v]) {
    (void)action;
    sources.push_back(to);
  }
  std::vector<int> dist = bfs_distances(product, sources);
  // A cycle v -> ... -> v of length d+1 exists iff v is reachable from a
  // successor at distance d; sources themselves have distance 0.
  return dist[v] < 0 ? -1 : dist[v] + 1;
}

// Lexicographically least action word of exactly `length` steps from a
// source set to a target set, together with a canonical state path. The
// per-layer reachability sets make the selection exact: at each step the
// least action keeping a target reachable is chosen.
struct LayeredPath {
  std::vector<ExtendedAction> actions;
  std::vector<int> path;  // length+1 states
};

std::optional<LayeredPath> lex_shortest_path(const Product& product,
                                             const std::vector<int>& sources,
                                             const std::set<int>& targets, int length) {
  int n = static_cast<int>(product.states.size());
  // ok[i] = states at layer i from which some target is reachable in exactly
  // (length - i) steps.
  std::vector<std::vector<char>> ok(length + 1, std::vector<char>(n, 0));
  for (int t : targets) ok[length][t] = 1;
  for (int layer = length - 1; layer >= 0; --layer) {
    for (int s = 0; s < n; ++s) {
      for (const auto& [action, to] : product.succ[s]) {
        (void)action;
        if (ok[layer + 1][to]) {
          ok[layer][s] = 1;
          break;
        }
      }
    }
  }

  std::vector<std::vector<int>> frontiers(length + 1);
  for (int s : sources) {
    if (ok[0][s]) frontiers[0].push_back(s);
  }
  std::sort(frontiers[0].begin(), frontiers[0].end());
  frontiers[0].erase(std::unique(frontiers[0].begin(), frontiers[0].end()),
                     frontiers[0].end());
  if (frontiers[0].empty()) return std::nullopt;

  LayeredPath result;
  for (int layer = 0; layer < length; ++layer) {
    std::optional<ExtendedAction> best;
    for (int s : frontiers[layer]) {
      for (const auto& [action, to] : product.succ[s]) {
        if (!ok[layer + 1][to]) continue;
        if (!best || action < *best) best = action;
      }
    }
    if (!best) return std::nullopt;
    std::vector<int> next;
    for (int s : frontiers[layer]) {
      for (const auto& [action, to] : product.succ[s]) {
        if (action == *best && ok[layer + 1][to]) next.push_back(to);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    result.actions.push_back(*best);
    frontiers[layer + 1] = std::move(next);
  }

  // Canonical state path: least reachable target, then work backwards.
  int target = -1;
  for (int s : frontiers[length]) {
    if (targets.count(s) && (target < 0 || product.states[s] < product.states[target])) {
      target = s;
    }
  }
  if (target < 0) return std::nullopt;
  std::vector<int> path(length + 1);
  path[length] = target;
  for (int layer = length - 1; layer >= 0; --layer) {
    int chosen = -1;
    for (int s : frontiers[layer]) {
      bool connects = false;
      for (const auto& [action, to] : product.succ[s]) {
        if (action == result.actions[layer] && to == path[layer + 1]) {
          connects = true;
          break;
        }
      }
      if (connects && (chosen < 0 || product.states[s] < product.states[chosen])) {
        chosen = s;
      }
    }
    path[layer] = chosen;
  }
  result.path = std::move(path);
  return result;
}

}  // namespace

LassoWord counterexample_word(const LassoCounterexample& lasso,
                              const KripkeStructure& k) {
  LassoWord word;
  auto letter = [&k](int state) {
    std::set<std::string> atoms;
    for (int id : k.state_atoms.at(state)) atoms.insert(k.atoms[id]);
    return atoms;
  };
  word.letters.push_back(letter(lasso.start));
  for (const auto& s : lasso.stem) word.letters.push_back(letter(s.state));
  // The cycle's final step returns to its entry point, which is the letter
  // at loop_start; it is not repeated.
  for (size_t i = 0; i + 1 < lasso.cycle.size(); ++i) {
    word.letters.push_back(letter(lasso.cycle[i].state));
  }
  word.loop_start = static_cast<int>(lasso.stem.size());
  return word;
}

bool replays(const LassoCounterexample& lasso, const KripkeStructure& k) {
  if (lasso.cycle.empty()) return false;
  if (!std::binary_search(k.initial.begin(), k.initial.end(), lasso.start)) return false;

  auto has_edge = [&k](int from, const ExtendedAction& action, int to) {
    if (action.kind == ActionKind::Quiescent) {
      // Valid only as the completion self-loop of a deadlock state.
      if (from != to) return false;
      for (const auto& t : k.transitions) {
        if (t.from == from) return false;
      }
      return true;
    }
    return std::binary_search(k.transitions.begin(), k.transitions.end(),
                              KripkeTransition{from, action, to});
  };

  int at = lasso.start;
  for (const auto& s : lasso.stem) {
    if (!has_edge(at, s.action, s.state)) return false;
    at = s.state;
  }
  int cycle_entry = at;
  for (const auto& s : lasso.cycle) {
    if (!has_edge(at, s.action, s.state)) return false;
    at = s.state;
  }
  return at == cycle_entry;
}

Verdict check(const KripkeStructure& k, const LtlPtr& phi) {
  if (k.initial.empty()) throw InputError("structure has no initial states");

  Verdict verdict;
  verdict.warnings = unknown_atom_warnings(k, phi);

  CompletedGraph graph = complete(k);
  verdict.deadlock_completed = graph.completed;

  BuchiAutomaton automaton = ltl_to_buchi(ltl::not_(phi));
  Product product = build_product(k, graph, automaton);

  std::vector<int> dist = bfs_distances(product, product.initial);

  // Candidates: reachable accepting product states on a cycle, ranked by
  // (stem length, cycle length).
  int best_stem = -1;
  int best_cycle = -1;
  std::vector<int> best_states;
  for (int v = 0; v < static_cast<int>(product.states.size()); ++v) {
    if (!product.accepting[v] || dist[v] < 0) continue;
    int cycle = shortest_cycle(product, v);
    if (cycle < 0) continue;
    if (best_stem < 0 || std::make_pair(dist[v], cycle) <
                             std::make_pair(best_stem, best_cycle)) {
      best_stem = dist[v];
      best_cycle = cycle;
      best_states.assign(1, v);
    } else if (dist[v] == best_stem && cycle == best_cycle) {
      best_states.push_back(v);
    }
  }

  if (best_stem < 0) {
    verdict.holds = true;
    return verdict;
  }

  // Lexicographically least stem over all equally ranked candidates, then
  // the least cycle among the candidates that stem can reach.
  std::set<int> target_set(best_states.begin(), best_states.end());
  auto stem = lex_shortest_path(product, product.initial, target_set, best_stem);
  if (!stem) throw Error("internal: stem extraction failed");

  std::optional<LayeredPath> best_cycle_path;
  int best_anchor = -1;
  for (int f : best_states) {
    // Restrict to candidates reachable via the chosen stem word.
    auto anchored = lex_shortest_path(product, product.initial, {f}, best_stem);
    if (!anchored || anchored->actions != stem->actions) continue;
    auto cycle = lex_shortest_path(product, {f}, {f}, best_cycle);
    if (!cycle) continue;
    if (!best_cycle_path || cycle->actions < best_cycle_path->actions ||
        (cycle->actions == best_cycle_path->actions &&
         product.states[f] < product.states[best_anchor])) {
      best_cycle_path = cycle;
      best_anchor = f;
    }
  }
  if (!best_cycle_path) throw Error("internal: cycle extraction failed");

  auto anchored_stem = lex_shortest_path(product, product.initial, {best_anchor},
                                         best_stem);
  if (!anchored_stem || anchored_stem->actions != stem->actions) {
    throw Error("internal: stem anchoring failed");
  }

  LassoCounterexample lasso;
  lasso.start = product.states[anchored_stem->path.front()].first;
  for (int i = 0; i < best_stem; ++i) {
    lasso.stem.push_back({anchored_stem->actions[i],
                          product.states[anchored_stem->path[i + 1]].first});
  }
  for (int i = 0; i < best_cycle; ++i) {
    lasso.cycle.push_back({best_cycle_path->actions[i],
                           product.states[best_cycle_path->path[i + 1]].first});
  }

  // Counterexample soundness is checked on every failure: the lasso must
  // replay in K and its unrolled trace must violate phi.
  if (!replays(lasso, k)) throw Error("internal: counterexample does not replay");
  if (eval_ltl(phi, counterexample_word(lasso, k))) {
    throw Error("internal: counterexample does not violate the formula");
  }

  verdict.holds = false;
  verdict.counterexample = std::move(lasso);
  return verdict;
}

namespace {

struct BruteForce {
  const KripkeStructure& k;
  const CompletedGraph& graph;
  const LtlPtr& phi;
  long long budget = 50'000'000;

  void spend(long long cost) {
    budget -= cost;
    if (budget < 0) throw CapacityError("brute-force enumeration limits exceeded");
  }

  // Enumerates exact-length cycles from `at` back to `entry` in canonical
  // order, evaluating each closed lasso directly.
  bool find_cycle(int entry, int at, int remaining, std::vector<LassoStep>& cycle,
                  const std::vector<LassoStep>& stem, int start,
                  LassoCounterexample& out) {
    spend(1);
    if (remaining == 0) {
      if (at != entry) return false;
      LassoCounterexample candidate{start, stem, cycle};
      if (!eval_ltl(phi, counterexample_word(candidate, k))) {
        out = std::move(candidate);
        return true;
      }
      return false;
    }
    for (const auto& [action, to] : graph.succ[at]) {
      cycle.push_back({action, to});
      if (find_cycle(entry, to, remaining - 1, cycle, stem, start, out)) return true;
      cycle.pop_back();
    }
    return false;
  }

  bool find_stem(int at, int remaining, std::vector<LassoStep>& stem, int start,
                 int cycle_len, LassoCounterexample& out) {
    spend(1);
    if (remaining == 0) {
      std::vector<LassoStep> cycle;
      return find_cycle(at, at, cycle_len, cycle, stem, start, out);
    }
    for (const auto& [action, to] : graph.succ[at]) {
      stem.push_back({action, to});
      if (find_stem(to, remaining - 1, stem, start, cycle_len, out)) return true;
      stem.pop_back();
    }
    return false;
  }
};

}  // namespace

Verdict brute_force_check(const KripkeStructure& k, const LtlPtr& phi, int stem_max,
                          int cycle_max) {
  if (k.initial.empty()) throw InputError("structure has no initial states");
  if (k.states.size() > 200) {
    throw CapacityError("structure too large for the brute-force oracle");
  }
  if (stem_max < 0 || cycle_max < 1) {
    throw InputError("stem_max must be >= 0 and cycle_max >= 1");
  }

  Verdict verdict;
  verdict.warnings = unknown_atom_warnings(k, phi);
  CompletedGraph graph = complete(k);
  verdict.deadlock_completed = graph.completed;

  BruteForce engine{k, graph, phi};
  // Shortest stem first, then shortest cycle, then canonical edge order:
  // the first violating lasso found is the minimal one.
  for (int m = 0; m <= stem_max; ++m) {
    for (int c = 1; c <= cycle_max; ++c) {
      for (int start : k.initial) {
        std::vector<LassoStep> stem;
        LassoCounterexample out;
        if (engine.find_stem(start, m, stem, start, c, out)) {
          verdict.holds = false;
          verdict.counterexample = std::move(out);
          return verdict;
        }
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

std::string render_verdict(const Verdict& verdict, const KripkeStructure& k) {
  std::ostringstream out;
  out << "verdict: " << (verdict.holds ? "holds" : "violated") << "\n";
  if (verdict.deadlock_completed) {
    out << "note: deadlock states completed with quiescent self-loops\n";
  }
  for (const auto& warning : verdict.warnings) {
    out << "warning: " << warning << "\n";
  }
  if (verdict.counterexample) {
    const auto& lasso = *verdict.counterexample;
    out << "counterexample:\n";
    out << "  start " << to_string(k.states[lasso.start], k) << "\n";
    int step = 0;
    for (const auto& s : lasso.stem) {
      out << "  " << ++step << ". [stem]  " << to_string(s.action, k.sps.alphabet)
          << " -> " << to_string(k.states[s.state], k) << "\n";
    }
    for (const auto& s : lasso.cycle) {
      out << "  " << ++step << ". [cycle] " << to_string(s.action, k.sps.alphabet)
          << " -> " << to_string(k.states[s.state], k) << "\n";
    }
  }
  return out.str();
}

}  // namespace spsmc
