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
#include "spsmc/grounding.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "spsmc/errors.hpp"

namespace spsmc {

std::string GroundingMap::request_atom(int type, int index) const {
  std::string base = single_type() ? "p" : "p" + std::to_string(type);
  return base + "[" + std::to_string(index) + "]";
}

std::string GroundingMap::answer_atom(int type, int index) const {
  std::string base = single_type() ? "q" : "q" + std::to_string(type);
  return base + "[" + std::to_string(index) + "]";
}

std::vector<std::string> GroundingMap::all_atoms() const {
  std::vector<std::string> atoms;
  for (int i = 0; i < alphabet.size(); ++i) {
    for (int j = 1; j <= bound_n[i]; ++j) {
      atoms.push_back(request_atom(i, j));
      atoms.push_back(answer_atom(i, j));
    }
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

GroundingMap make_grounding_map(const BoundProfile& bounds) {
  GroundingMap map;
  map.alphabet = bounds.alphabet;
  for (int i = 0; i < bounds.alphabet.size(); ++i) map.bound_n.push_back(bounds.n_of(i));
  return map;
}

namespace {

struct Grounder {
  const BoundProfile& bounds;
  const GroundingMap& map;
  const GroundingOptions& options;
  // Variable name -> (type index, assigned domain index).
  std::map<std::string, std::pair<int, int>> env;

  int domain_size(int type) const {
    return options.domain == ExpansionDomain::Bound ? bounds.n_of(type)
                                                    : bounds.r_of(type);
  }

  LtlPtr ground(const MfoPtr& f) {
    using Kind = MfoFormula::Kind;
    switch (f->kind) {
      case Kind::Pred: {
        auto it = env.find(f->var);
        if (it == env.end()) {
          throw GroundingError("free variable '" + f->var + "' in sentence");
        }
        auto [type, index] = it->second;
        const std::string& tname = bounds.alphabet.name(type);
        if (f->pred == "req_" + tname) return ltl::atom(map.request_atom(type, index));
        if (f->pred == "ans_" + tname) return ltl::atom(map.answer_atom(type, index));
        throw GroundingError("cannot ground predicate '" + f->pred +
                             "' applied to a variable of type '" + tname +
                             "' (only req_" + tname + "/ans_" + tname + ")");
      }
      case Kind::Eq: {
        auto a = env.find(f->var);
        auto b = env.find(f->var2);
        if (a == env.end() || b == env.end()) {
          throw GroundingError("free variable in equality");
        }
        return a->second == b->second ? ltl::tt() : ltl::ff();
      }
      case Kind::Not:
        return ltl::not_(ground(f->lhs));
      case Kind::Or:
        return ltl::or_(ground(f->lhs), ground(f->rhs));
      case Kind::Exists: {
        int type = bounds.alphabet.require(f->type);
        int n = domain_size(type);
        if (n < 1) {
          throw GroundingError("type '" + f->type +
                               "' is quantified over but has bound 0");
        }
        auto shadowed = env.find(f->var);
        std::optional<std::pair<int, int>> saved;
        if (shadowed != env.end()) saved = shadowed->second;

        LtlPtr expansion = ltl::ff();
        for (int j = 1; j <= n; ++j) {
          env[f->var] = {type, j};
          expansion = ltl::or_(expansion, ground(f->lhs));
          // Short-circuit: the disjunction is already constant TRUE.
          if (expansion->kind == LtlFormula::Kind::True) break;
        }
        if (saved) {
          env[f->var] = *saved;
        } else {
          env.erase(f->var);
        }
        return expansion;
      }
    }
    throw GroundingError("corrupt formula node");
  }
};

}  // namespace

LtlPtr ground_mfo(const MfoPtr& sentence, const BoundProfile& bounds,
                  const GroundingOptions& options) {
  GroundingMap map = make_grounding_map(bounds);
  Grounder grounder{bounds, map, options, {}};
  return grounder.ground(sentence);
}

LtlPtr ground_mfstl(const MfstlPtr& formula, const BoundProfile& bounds,
                    const GroundingOptions& options) {
  using Kind = MfstlFormula::Kind;
  switch (formula->kind) {
    case Kind::True:
      return ltl::tt();
    case Kind::ServerProp:
      return ltl::atom(formula->prop);
    case Kind::Sentence:
      return ground_mfo(formula->sentence, bounds, options);
    case Kind::Not:
      return ltl::not_(ground_mfstl(formula->lhs, bounds, options));
    case Kind::Or:
      return ltl::or_(ground_mfstl(formula->lhs, bounds, options),
                      ground_mfstl(formula->rhs, bounds, options));
    case Kind::Next:
      return ltl::next(ground_mfstl(formula->lhs, bounds, options));
    case Kind::Until:
      return ltl::until(ground_mfstl(formula->lhs, bounds, options),
                        ground_mfstl(formula->rhs, bounds, options));
  }
  throw GroundingError("corrupt formula node");
}

}  // namespace spsmc
