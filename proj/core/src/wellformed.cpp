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
#include "spsmc/wellformed.hpp"

#include <map>

namespace spsmc {

namespace {

struct Checker {
  const ServiceAlphabet& alphabet;
  std::vector<Diagnostic>& out;
  // Global sort assignment: one name, one sort, anywhere in the formula.
  std::map<std::string, std::string> global_sort;

  void error(std::string message) {
    out.push_back({Diagnostic::Severity::Error, std::move(message), std::nullopt});
  }

  // Returns the sort of a typed predicate name (req_<type>/ans_<type>), or
  // empty when the predicate carries no sort of its own.
  std::string predicate_sort(const std::string& pred) {
    for (const char* prefix : {"req_", "ans_"}) {
      if (pred.rfind(prefix, 0) == 0) {
        std::string tail = pred.substr(4);
        if (alphabet.index_of(tail) >= 0) return tail;
      }
    }
    return {};
  }

  void check_mfo(const MfoPtr& f, std::map<std::string, std::string>& bound) {
    using Kind = MfoFormula::Kind;
    switch (f->kind) {
      case Kind::Pred: {
        auto it = bound.find(f->var);
        if (it == bound.end()) {
          error("free variable '" + f->var + "' in client formula");
          return;
        }
        std::string psort = predicate_sort(f->pred);
        if (!psort.empty() && psort != it->second) {
          error("predicate '" + f->pred + "' applied to variable '" + f->var +
                "' of type '" + it->second + "'");
        }
        return;
      }
      case Kind::Eq: {
        auto a = bound.find(f->var);
        auto b = bound.find(f->var2);
        if (a == bound.end()) error("free variable '" + f->var + "' in equality");
        if (b == bound.end()) error("free variable '" + f->var2 + "' in equality");
        if (a != bound.end() && b != bound.end() && a->second != b->second) {
          error("equality between variables of different types ('" + f->var + ":" +
                a->second + "' vs '" + f->var2 + ":" + b->second + "')");
        }
        return;
      }
      case Kind::Not:
        check_mfo(f->lhs, bound);
        return;
      case Kind::Or:
        check_mfo(f->lhs, bound);
        check_mfo(f->rhs, bound);
        return;
      case Kind::Exists: {
        if (alphabet.index_of(f->type) < 0) {
          error("unknown client type '" + f->type + "' at binder of '" + f->var + "'");
        }
        if (bound.count(f->var)) {
          error("variable '" + f->var + "' shadows an enclosing binding");
        }
        auto global = global_sort.find(f->var);
        if (global != global_sort.end() && global->second != f->type) {
          error("variable '" + f->var + "' is used at two sorts ('" + global->second +
                "' and '" + f->type + "')");
        } else {
          global_sort.emplace(f->var, f->type);
        }
        auto scope = bound;
        scope[f->var] = f->type;
        check_mfo(f->lhs, scope);
        return;
      }
    }
  }

  void check_temporal(const MfstlPtr& f) {
    using Kind = MfstlFormula::Kind;
    switch (f->kind) {
      case Kind::True:
      case Kind::ServerProp:
        return;
      case Kind::Sentence: {
        std::map<std::string, std::string> empty;
        check_mfo(f->sentence, empty);
        return;
      }
      case Kind::Not:
      case Kind::Next:
        check_temporal(f->lhs);
        return;
      case Kind::Or:
      case Kind::Until:
        check_temporal(f->lhs);
        check_temporal(f->rhs);
        return;
    }
  }
};

}  // namespace

std::vector<Diagnostic> check_well_formed(const MfstlPtr& formula,
                                          const ServiceAlphabet& alphabet) {
  std::vector<Diagnostic> diagnostics;
  Checker checker{alphabet, diagnostics, {}};
  checker.check_temporal(formula);
  return diagnostics;
}

}  // namespace spsmc
