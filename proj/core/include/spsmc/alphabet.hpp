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
#ifndef SPSMC_ALPHABET_HPP
#define SPSMC_ALPHABET_HPP

#include <compare>
#include <string>
#include <vector>

namespace spsmc {

/// The finite set of client types offered by a server. The declaration order
/// is significant: it fixes the numeric index of each type used everywhere
/// else (bounds, counters, flag atoms).
class ServiceAlphabet {
 public:
  ServiceAlphabet() = default;

  /// Throws InputError if `types` is empty or contains duplicates.
  explicit ServiceAlphabet(std::vector<std::string> types);

  const std::vector<std::string>& types() const { return types_; }
  int size() const { return static_cast<int>(types_.size()); }

  const std::string& name(int index) const { return types_.at(index); }

  /// Index of a type name, or -1 if unknown.
  int index_of(const std::string& name) const;

  /// Index of a type name; throws InputError if unknown.
  int require(const std::string& name) const;

  bool operator==(const ServiceAlphabet&) const = default;

 private:
  std::vector<std::string> types_;
};

/// Kind of a transition label. The declared order (tau < req < ans) is the
/// canonical action order used for deterministic iteration and tie-breaking.
/// `Quiescent` never occurs in a model; the checker uses it to complete
/// deadlock states with self-loops.
enum class ActionKind { Tau = 0, Req = 1, Ans = 2, Quiescent = 3 };

/// A letter of the extended alphabet: tau, or req/ans of a client type.
struct ExtendedAction {
  ActionKind kind = ActionKind::Tau;
  int type = -1;  // index into ServiceAlphabet; -1 for Tau/Quiescent

  auto operator<=>(const ExtendedAction&) const = default;
};

inline ExtendedAction tau_action() { return {ActionKind::Tau, -1}; }
inline ExtendedAction req_action(int type) { return {ActionKind::Req, type}; }
inline ExtendedAction ans_action(int type) { return {ActionKind::Ans, type}; }
inline ExtendedAction quiescent_action() { return {ActionKind::Quiescent, -1}; }

/// Renders an action as "tau", "req(h)", "ans(h)" or "quiescent".
std::string to_string(const ExtendedAction& action, const ServiceAlphabet& alphabet);

}  // namespace spsmc

#endif  // SPSMC_ALPHABET_HPP
