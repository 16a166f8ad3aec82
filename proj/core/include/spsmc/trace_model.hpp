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
#ifndef SPSMC_TRACE_MODEL_HPP
#define SPSMC_TRACE_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spsmc/alphabet.hpp"
#include "spsmc/ast.hpp"

namespace spsmc {

/// One time instant of a model: the server propositions that hold, the
/// per-type domains of live clients, and the client predicates each live
/// client satisfies. Interpretations are defined exactly on the domain;
/// a domain member absent from `interp` satisfies no predicate.
struct TraceInstant {
  std::set<std::string> server_props;
  std::vector<std::set<int>> domains;                         // per type
  std::vector<std::map<int, std::set<std::string>>> interp;   // per type
};

/// An explicit model: a sequence of instants, either a finite prefix or a
/// lasso (`loop_start` set) finitely representing an ultimately periodic
/// infinite model. Infinite-horizon operators require the lasso shape.
struct TraceModel {
  ServiceAlphabet alphabet;
  std::vector<TraceInstant> instants;
  std::optional<int> loop_start;

  bool is_lasso() const { return loop_start.has_value(); }

  /// Maps a time index to an instant index, unrolling through the loop.
  /// Throws EvalError for indices past the end of a finite prefix.
  int resolve(long long time) const;

  /// Structural sanity: domain element counts, interp keys within domains,
  /// loop_start within range. Throws InputError on violation.
  void validate() const;
};

/// A valuation: variable name -> (type index, client index).
struct ClientRef {
  int type = 0;
  int index = 0;

  auto operator<=>(const ClientRef&) const = default;
};
using Valuation = std::map<std::string, ClientRef>;

/// Truth of a client formula at instant `time` under valuation `pi`.
/// A predicate applied to a client outside the instant's domain is false.
/// Unbound variables raise EvalError.
bool eval_mfo(const TraceModel& model, const Valuation& pi, long long time,
              const MfoPtr& formula);

/// Truth of a server formula at instant `time`. Until (and derived F/G)
/// requires a lasso model; Next past the end of a finite prefix raises
/// EvalError.
bool eval_mfstl(const TraceModel& model, long long time, const MfstlPtr& formula);

}  // namespace spsmc

#endif  // SPSMC_TRACE_MODEL_HPP
