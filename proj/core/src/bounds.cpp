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
#include "spsmc/bounds.hpp"

#include <sstream>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace {

void collect_mfo(const MfoPtr& f, const ServiceAlphabet& alphabet,
                 std::vector<TypeBound>& per_type) {
  if (!f) return;
  if (f->kind == MfoFormula::Kind::Exists) {
    per_type[alphabet.require(f->type)].vars.insert(f->var);
  }
  collect_mfo(f->lhs, alphabet, per_type);
  collect_mfo(f->rhs, alphabet, per_type);
}

void collect(const MfstlPtr& f, const ServiceAlphabet& alphabet,
             std::vector<TypeBound>& per_type) {
  if (!f) return;
  if (f->kind == MfstlFormula::Kind::Sentence) {
    collect_mfo(f->sentence, alphabet, per_type);
    return;
  }
  collect(f->lhs, alphabet, per_type);
  collect(f->rhs, alphabet, per_type);
}

}  // namespace

BoundProfile bound_profile(const MfstlPtr& formula, const ServiceAlphabet& alphabet) {
  BoundProfile profile;
  profile.alphabet = alphabet;
  profile.per_type.assign(alphabet.size(), {});
  collect(formula, alphabet, profile.per_type);
  for (auto& tb : profile.per_type) {
    tb.r = static_cast<int>(tb.vars.size());
    tb.n = 4 * tb.r;
  }
  return profile;
}

std::string to_string(const BoundProfile& profile) {
  std::ostringstream out;
  for (int i = 0; i < profile.alphabet.size(); ++i) {
    out << profile.alphabet.name(i) << ": r=" << profile.per_type[i].r
        << " n=" << profile.per_type[i].n << "\n";
  }
  return out.str();
}

}  // namespace spsmc
