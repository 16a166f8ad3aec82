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
#ifndef SPSMC_SMV_HPP
#define SPSMC_SMV_HPP

#include <map>
#include <string>

#include "spsmc/bounds.hpp"
#include "spsmc/diagnostics.hpp"
#include "spsmc/ltl.hpp"
#include "spsmc/sps.hpp"

namespace spsmc {

/// An emitted SMV module plus a manifest mapping every emitted artifact
/// (variables, arrays, the input encoding) to its origin.
struct SmvDocument {
  std::string text;
  std::map<std::string, std::string> manifest;
};

/// Emits the bounded encoding of the model for external cross-validation:
/// a location variable driven by the transition relation, one saturating
/// counter per type, request/answer flag arrays with one-instant answer
/// pulses, and the specification as an LTLSPEC. A single-type model without
/// tau uses a boolean input (ip=TRUE is the request); otherwise the input
/// is an enumeration over the extended alphabet. Counters freeze at their
/// bounds (case fallthrough), so the document encodes the freeze
/// discipline. Types used by transitions need a positive bound
/// (EmissionError otherwise); emission is byte-deterministic.
SmvDocument emit_smv(const Sps& sps, const BoundProfile& bounds, const LtlPtr& phi);

/// Minimal syntax checker for the emitted subset (MODULE, IVAR, VAR with
/// boolean/enum/range/array-of-boolean, ASSIGN with init/next and
/// case/esac, LTLSPEC). Also checks that every array index in the text is
/// within the declared bounds. An empty result means the text parses.
std::vector<Diagnostic> validate_smv(const std::string& text);

}  // namespace spsmc

#endif  // SPSMC_SMV_HPP
