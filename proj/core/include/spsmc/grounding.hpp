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
#ifndef SPSMC_GROUNDING_HPP
#define SPSMC_GROUNDING_HPP

#include <string>
#include <vector>

#include "spsmc/bounds.hpp"
#include "spsmc/ltl.hpp"

namespace spsmc {

/// Names of the request/answer flag atoms, per type. With a single client
/// type the atoms are p[j]/q[j]; with several they carry the numeric type
/// index (p0[j], q1[j], ...), which also matches the emitted SMV array
/// names.
struct GroundingMap {
  ServiceAlphabet alphabet;
  std::vector<int> bound_n;  // per type

  bool single_type() const { return alphabet.size() == 1; }
  std::string request_atom(int type, int index) const;
  std::string answer_atom(int type, int index) const;

  /// All declared flag atoms, sorted.
  std::vector<std::string> all_atoms() const;
};

GroundingMap make_grounding_map(const BoundProfile& bounds);

/// Domain used when expanding a quantifier of type u_i.
enum class ExpansionDomain {
  Bound,       // {1..n_i}, the worked-example reading (default)
  ProseCount,  // {1..r_i}, the prose reading, for experimentation
};

struct GroundingOptions {
  ExpansionDomain domain = ExpansionDomain::Bound;
};

/// Quantifier elimination of an MFO sentence: existentials expand to
/// disjunctions over the finite index domain, equalities resolve to
/// constants, req_u(j)/ans_u(j) become flag atoms. Constants are folded
/// away; the result is propositional. Quantifying over a type with a zero
/// bound, or predicates other than req/ans of a known type, raise
/// GroundingError.
LtlPtr ground_mfo(const MfoPtr& sentence, const BoundProfile& bounds,
                  const GroundingOptions& options = {});

/// Homomorphic extension to server formulae: boolean/temporal structure is
/// preserved, each embedded sentence is grounded, server propositions pass
/// through.
LtlPtr ground_mfstl(const MfstlPtr& formula, const BoundProfile& bounds,
                    const GroundingOptions& options = {});

}  // namespace spsmc

#endif  // SPSMC_GROUNDING_HPP
