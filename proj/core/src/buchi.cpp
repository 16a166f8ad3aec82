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
#include "spsmc/buchi.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace {

// ---------------------------------------------------------------------------
// Negation normal form over {tt, ff, literal, and, or, X, U, R}, interned so
// formula sets are integer sets.
// ---------------------------------------------------------------------------

enum class NKind { True, False, Lit, And, Or, Next, Until, Release };

struct NnfNode {
  NKind kind;
  std::string atom;       // Lit
  bool positive = true;   // Lit
  int lhs = -1;
  int rhs = -1;

  auto operator<=>(const NnfNode&) const = default;
};

struct NnfPool {
  std::vector<NnfNode> nodes;
  std::map<NnfNode, int> ids;

  int intern(NnfNode node) {
    auto [it, fresh] = ids.emplace(node, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back(std::move(node));
    return it->second;
  }

  int tt() { return intern({NKind::True}); }
  int ff() { return intern({NKind::False}); }
  int lit(const std::string& atom, bool positive) {
    return intern({NKind::Lit, atom, positive});
  }
  int binary(NKind kind, int lhs, int rhs) {
    NnfNode node{kind};
    node.lhs = lhs;
    node.rhs = rhs;
    return intern(std::move(node));
  }
  int unary(NKind kind, int child) {
    NnfNode node{kind};
    node.lhs = child;
    return intern(std::move(node));
  }

  int from_ltl(const LtlPtr& f, bool positive) {
    using Kind = LtlFormula::Kind;
    switch (f->kind) {
      case Kind::True:
        return positive ? tt() : ff();
      case Kind::False:
        return positive ? ff() : tt();
      case Kind::Atom:
        return lit(f->atom, positive);
      case Kind::Not:
        return from_ltl(f->lhs, !positive);
      case Kind::Or:
        return binary(positive ? NKind::Or : NKind::And, from_ltl(f->lhs, positive),
                      from_ltl(f->rhs, positive));
      case Kind::And:
        return binary(positive ? NKind::And : NKind::Or, from_ltl(f->lhs, positive),
                      from_ltl(f->rhs, positive));
      case Kind::Next:
        return unary(NKind::Next, from_ltl(f->lhs, positive));
      case Kind::Until:
        return binary(positive ? NKind::Until : NKind::Release,
                      from_ltl(f->lhs, positive), from_ltl(f->rhs, positive));
    }
    throw Error("corrupt formula node");
  }
};

// ---------------------------------------------------------------------------
// Tableau node expansion (on-the-fly construction of a generalized Buchi
// automaton whose states read the letter they are entered on).
// ---------------------------------------------------------------------------

constexpr int kInit = -1;

struct TableauNode {
  std::set<int> incoming;
  std::set<int> fresh;  // obligations not yet processed
  std::set<int> old;    // processed obligations
  std::set<int> later;  // obligations for the next instant
};

struct Tableau {
  NnfPool& pool;
  std::vector<TableauNode> done;

  explicit Tableau(NnfPool& pool) : pool(pool) {}

  void build(int root) {
    TableauNode start;
    start.incoming.insert(kInit);
    start.fresh.insert(root);
    expand(std::move(start));
  }

  void expand(TableauNode q) {
    if (q.fresh.empty()) {
      for (auto& existing : done) {
        if (existing.old == q.old && existing.later == q.later) {
          existing.incoming.insert(q.incoming.begin(), q.incoming.end());
          return;
        }
      }
      int id = static_cast<int>(done.size());
      done.push_back(q);
      TableauNode next;
      next.incoming.insert(id);
      next.fresh = q.later;
      expand(std::move(next));
      return;
    }

    int eta = *q.fresh.begin();
    q.fresh.erase(q.fresh.begin());
    if (q.old.count(eta)) {
      expand(std::move(q));
      return;
    }
    const NnfNode& node = pool.nodes[eta];
    switch (node.kind) {
      case NKind::False:
        return;  // inconsistent node, dropped
      case NKind::True:
        expand(std::move(q));
        return;
      case NKind::Lit: {
        int negation = pool.lit(node.atom, !node.positive);
        if (q.old.count(negation)) return;  // contradictory literals
        q.old.insert(eta);
        expand(std::move(q));
        return;
      }
      case NKind::And: {
        q.old.insert(eta);
        if (!q.old.count(node.lhs)) q.fresh.insert(node.lhs);
        if (!q.old.count(node.rhs)) q.fresh.insert(node.rhs);
        expand(std::move(q));
        return;
      }
      case NKind::Or: {
        q.old.insert(eta);
        TableauNode left = q;
        if (!left.old.count(node.lhs)) left.fresh.insert(node.lhs);
        TableauNode right = std::move(q);
        if (!right.old.count(node.rhs)) right.fresh.insert(node.rhs);
        expand(std::move(left));
        expand(std::move(right));
        return;
      }
      case NKind::Next: {
        q.old.insert(eta);
        q.later.insert(node.lhs);
        expand(std::move(q));
        return;
      }
      case NKind::Until: {
        q.old.insert(eta);
        TableauNode wait = q;
        if (!wait.old.count(node.lhs)) wait.fresh.insert(node.lhs);
        wait.later.insert(eta);
        TableauNode fulfil = std::move(q);
        if (!fulfil.old.count(node.rhs)) fulfil.fresh.insert(node.rhs);
        expand(std::move(wait));
        expand(std::move(fulfil));
        return;
      }
      case NKind::Release: {
        q.old.insert(eta);
        TableauNode wait = q;
        if (!wait.old.count(node.rhs)) wait.fresh.insert(node.rhs);
        wait.later.insert(eta);
        TableauNode fulfil = std::move(q);
        if (!fulfil.old.count(node.lhs)) fulfil.fresh.insert(node.lhs);
        if (!fulfil.old.count(node.rhs)) fulfil.fresh.insert(node.rhs);
        expand(std::move(wait));
        expand(std::move(fulfil));
        return;
      }
    }
  }
};

std::vector<BuchiLiteral> constraint_of(const NnfPool& pool, const std::set<int>& old) {
  std::vector<BuchiLiteral> literals;
  for (int id : old) {
    const NnfNode& node = pool.nodes[id];
    if (node.kind == NKind::Lit) literals.push_back({node.atom, node.positive});
  }
  std::sort(literals.begin(), literals.end());
  return literals;
}

}  // namespace

std::vector<BuchiTransition> BuchiAutomaton::transitions() const {
  std::vector<BuchiTransition> result;
  for (int from = 0; from < static_cast<int>(succ.size()); ++from) {
    for (int to : succ[from]) {
      result.push_back({from, to, states[to].constraint});
    }
  }
  return result;
}

BuchiAutomaton ltl_to_buchi(const LtlPtr& formula) {
  NnfPool pool;
  int root = pool.from_ltl(formula, true);

  Tableau tableau(pool);
  tableau.build(root);

  // Generalized acceptance: one set per Until subformula u = a U b,
  // containing the nodes with u not pending or already fulfilled.
  std::vector<int> untils;
  for (int i = 0; i < static_cast<int>(pool.nodes.size()); ++i) {
    if (pool.nodes[i].kind == NKind::Until) untils.push_back(i);
  }
  int phases = std::max<int>(1, static_cast<int>(untils.size()));
  auto in_accepting_set = [&](int node, int phase) {
    if (untils.empty()) return true;
    int u = untils[phase];
    return !tableau.done[node].old.count(u) ||
           tableau.done[node].old.count(pool.nodes[u].rhs) > 0;
  };

  // Counter-based degeneralization: state (node, phase); the phase advances
  // when the node lies in the phase's acceptance set, and a wrap from the
  // last phase marks acceptance.
  int node_count = static_cast<int>(tableau.done.size());
  auto pack = [&](int node, int phase) { return node * phases + phase; };

  BuchiAutomaton automaton;
  automaton.states.assign(node_count * phases, {});
  automaton.succ.assign(node_count * phases, {});
  for (int node = 0; node < node_count; ++node) {
    auto constraint = constraint_of(pool, tableau.done[node].old);
    for (int phase = 0; phase < phases; ++phase) {
      BuchiState& state = automaton.states[pack(node, phase)];
      state.constraint = constraint;
      state.accepting = phase == phases - 1 && in_accepting_set(node, phase);
    }
  }
  for (int node = 0; node < node_count; ++node) {
    for (int phase = 0; phase < phases; ++phase) {
      int next_phase = in_accepting_set(node, phase) ? (phase + 1) % phases : phase;
      // Successors of `node` are the nodes listing it as incoming.
      for (int to = 0; to < node_count; ++to) {
        if (tableau.done[to].incoming.count(node)) {
          automaton.succ[pack(node, phase)].push_back(pack(to, next_phase));
        }
      }
    }
  }
  for (int to = 0; to < node_count; ++to) {
    if (tableau.done[to].incoming.count(kInit)) {
      automaton.initial.push_back(pack(to, 0));
    }
  }
  std::sort(automaton.initial.begin(), automaton.initial.end());
  for (auto& list : automaton.succ) std::sort(list.begin(), list.end());
  return automaton;
}

bool buchi_accepts(const BuchiAutomaton& automaton, const LassoWord& word) {
  if (word.letters.empty()) throw InputError("empty lasso word");
  int n = word.size();

  auto satisfied = [&](const std::vector<BuchiLiteral>& constraint, int position) {
    for (const auto& lit : constraint) {
      bool present = word.letters[position].count(lit.atom) > 0;
      if (present != lit.positive) return false;
    }
    return true;
  };

  // Product of the lasso graph with the automaton; nonempty iff some
  // accepting product state lies on a cycle reachable from an initial pair.
  auto pack = [&](int position, int state) {
    return position * static_cast<int>(automaton.states.size()) + state;
  };
  int total = n * static_cast<int>(automaton.states.size());
  std::vector<char> reached(total, 0);
  std::vector<int> stack;
  for (int q : automaton.initial) {
    if (satisfied(automaton.states[q].constraint, 0)) {
      int id = pack(0, q);
      if (!reached[id]) {
        reached[id] = 1;
        stack.push_back(id);
      }
    }
  }
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    int position = id / static_cast<int>(automaton.states.size());
    int state = id % static_cast<int>(automaton.states.size());
    int next_position = word.successor(position);
    for (int q : automaton.succ[state]) {
      if (!satisfied(automaton.states[q].constraint, next_position)) continue;
      int next_id = pack(next_position, q);
      if (!reached[next_id]) {
        reached[next_id] = 1;
        stack.push_back(next_id);
      }
    }
  }

  // From every reached accepting pair, look for a cycle back to itself.
  for (int id = 0; id < total; ++id) {
    if (!reached[id]) continue;
    int state = id % static_cast<int>(automaton.states.size());
    if (!automaton.states[state].accepting) continue;

    std::vector<char> seen(total, 0);
    std::vector<int> dfs;
    auto push_succs = [&](int from) {
      int position = from / static_cast<int>(automaton.states.size());
      int q0 = from % static_cast<int>(automaton.states.size());
      int next_position = word.successor(position);
      for (int q : automaton.succ[q0]) {
        if (!satisfied(automaton.states[q].constraint, next_position)) continue;
        int next_id = pack(next_position, q);
        if (!seen[next_id]) {
          seen[next_id] = 1;
          dfs.push_back(next_id);
        }
      }
    };
    push_succs(id);
    bool found = false;
    while (!dfs.empty() && !found) {
      int at = dfs.back();
      dfs.pop_back();
      if (at == id) {
        found = true;
        break;
      }
      push_succs(at);
    }
    if (found) return true;
  }
  return false;
}

}  // namespace spsmc
