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
#ifndef SPSMC_WELLFORMED_HPP
#define SPSMC_WELLFORMED_HPP

#include <vector>

#include "spsmc/alphabet.hpp"
#include "spsmc/ast.hpp"
#include "spsmc/diagnostics.hpp"

namespace spsmc {

/// Sort/well-formedness checking. Diagnoses:
///   - free variables inside an MFO atom of the temporal layer,
///   - a variable name bound at two different sorts, or shadowed,
///   - unknown type names at binders,
///   - equality between variables of different sorts,
///   - typed predicates (req_u / ans_u) applied to a variable of another sort.
/// An empty result means the formula is well formed.
std::vector<Diagnostic> check_well_formed(const MfstlPtr& formula,
                                          const ServiceAlphabet& alphabet);

}  // namespace spsmc

#endif  // SPSMC_WELLFORMED_HPP
