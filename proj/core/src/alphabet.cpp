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
#include "spsmc/alphabet.hpp"

#include <set>

#include "spsmc/errors.hpp"

namespace spsmc {

ServiceAlphabet::ServiceAlphabet(std::vector<std::string> types)
    : types_(std::move(types)) {
  if (types_.empty()) {
    throw InputError("service alphabet must declare at least one client type");
  }
  std::set<std::string> seen;
  for (const auto& t : types_) {
    if (t.empty()) {
      throw InputError("client type names must be non-empty");
    }
    if (!seen.insert(t).second) {
      throw InputError("duplicate client type name '" + t + "'");
    }
  }
}

int ServiceAlphabet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (types_[i] == name) return i;
  }
  return -1;
}

int ServiceAlphabet::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) {
    throw InputError("unknown client type '" + name + "'");
  }
  return i;
}

std::string to_string(const ExtendedAction& action, const ServiceAlphabet& alphabet) {
  switch (action.kind) {
    case ActionKind::Tau:
      return "tau";
    case ActionKind::Req:
      return "req(" + alphabet.name(action.type) + ")";
    case ActionKind::Ans:
      return "ans(" + alphabet.name(action.type) + ")";
    case ActionKind::Quiescent:
      return "quiescent";
  }
  return "?";
}

}  // namespace spsmc
