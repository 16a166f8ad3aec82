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
#ifndef SPSMC_BUCHI_HPP
#define SPSMC_BUCHI_HPP

#include <string>
#include <vector>

#include "spsmc/ltl.hpp"

namespace spsmc {

struct BuchiLiteral {
  std::string atom;
  bool positive = true;

  auto operator<=>(const BuchiLiteral&) const = default;
};

/// A state reads the letter it is entered on: a run q0 q1 q2 ... over
/// x0 x1 x2 ... requires q0 initial, every q(i+1) a successor of q(i), and
/// x(i) to satisfy the constraint (a conjunction of literals) of q(i).
struct BuchiState {
  std::vector<BuchiLiteral> constraint;  // sorted, consistent
  bool accepting = false;
};

struct BuchiTransition {
  int from = 0;
  int to = 0;
  std::vector<BuchiLiteral> constraint;  // the target state's constraint
};

struct BuchiAutomaton {
  std::vector<BuchiState> states;
  std::vector<int> initial;             // sorted state ids
  std::vector<std::vector<int>> succ;   // adjacency, sorted

  std::vector<BuchiTransition> transitions() const;
};

/// Tableau construction followed by counter-based degeneralization. The
/// automaton accepts exactly the infinite atom-set sequences satisfying
/// the formula; its size is at most exponential in the formula size.
BuchiAutomaton ltl_to_buchi(const LtlPtr& formula);

/// Membership of an ultimately periodic word, decided on the product of the
/// word's lasso graph with the automaton. Used by tests as a language probe.
bool buchi_accepts(const BuchiAutomaton& automaton, const LassoWord& word);

}  // namespace spsmc

#endif  // SPSMC_BUCHI_HPP
