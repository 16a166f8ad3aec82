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
#ifndef SPSMC_CHECKER_HPP
#define SPSMC_CHECKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "spsmc/buchi.hpp"
#include "spsmc/expansion.hpp"
#include "spsmc/ltl.hpp"

namespace spsmc {

struct LassoStep {
  ExtendedAction action;
  int state = 0;  // id into the checked KripkeStructure

  auto operator<=>(const LassoStep&) const = default;
};

/// A counterexample: an ultimately periodic path start, stem*, (cycle)^w.
/// Quiescent steps stand for the self-loops completing deadlock states.
struct LassoCounterexample {
  int start = 0;  // initial state id
  std::vector<LassoStep> stem;
  std::vector<LassoStep> cycle;  // non-empty; ends back at the cycle's first state
};

struct Verdict {
  bool holds = false;
  std::optional<LassoCounterexample> counterexample;
  bool deadlock_completed = false;     // quiescent self-loops were added
  std::vector<std::string> warnings;   // e.g. atoms unknown to the structure
};

/// Model checks "every infinite path of K satisfies phi" by translating the
/// negation to a Buchi automaton, building the product, and searching for an
/// accepting lasso. Deadlock states are completed with quiescent self-loops
/// so the path semantics is total; the completion is reported in the
/// verdict. Counterexamples are minimal: shortest stem, then shortest
/// cycle, then lexicographically least action sequence; every returned
/// lasso is replayed and re-evaluated before being reported.
Verdict check(const KripkeStructure& k, const LtlPtr& phi);

/// Independent oracle: enumerates every lasso with the given size limits in
/// canonical order and evaluates phi directly on the unrolled word. Only
/// suitable for desk-scale structures (CapacityError beyond ~200 states or
/// an enumeration budget).
Verdict brute_force_check(const KripkeStructure& k, const LtlPtr& phi, int stem_max,
                          int cycle_max);

/// Builds the infinite word of label sets induced by a counterexample.
LassoWord counterexample_word(const LassoCounterexample& lasso, const KripkeStructure& k);

/// True iff the lasso replays in K: every step is a transition of K (or a
/// quiescent self-loop at a deadlock state) and the cycle closes.
bool replays(const LassoCounterexample& lasso, const KripkeStructure& k);

/// Stable numbered-step rendering for golden tests.
std::string render_verdict(const Verdict& verdict, const KripkeStructure& k);

}  // namespace spsmc

#endif  // SPSMC_CHECKER_HPP
