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
#ifndef SPSMC_BOUNDS_HPP
#define SPSMC_BOUNDS_HPP

#include <set>
#include <string>
#include <vector>

#include "spsmc/alphabet.hpp"
#include "spsmc/ast.hpp"

namespace spsmc {

/// The formula-derived domain bound for one client type: the distinct
/// variable names of that type, their count r, and the bound n = 4*r.
struct TypeBound {
  std::set<std::string> vars;
  int r = 0;
  int n = 0;
};

struct BoundProfile {
  ServiceAlphabet alphabet;
  std::vector<TypeBound> per_type;

  int r_of(int type) const { return per_type.at(type).r; }
  int n_of(int type) const { return per_type.at(type).n; }
};

/// Counts distinct variable names per type across the whole formula and
/// derives n = 4*r. Types not quantified over get r = n = 0.
BoundProfile bound_profile(const MfstlPtr& formula, const ServiceAlphabet& alphabet);

/// "u0: r=1 n=4" lines, one per type, in alphabet order.
std::string to_string(const BoundProfile& profile);

}  // namespace spsmc

#endif  // SPSMC_BOUNDS_HPP
