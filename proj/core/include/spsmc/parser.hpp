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
#ifndef SPSMC_PARSER_HPP
#define SPSMC_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "spsmc/ast.hpp"
#include "spsmc/diagnostics.hpp"
#include "spsmc/sps.hpp"

namespace spsmc {

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && !has_errors(diagnostics); }
};

/// Model DSL:
///   types h, l, m;  states s0, s1;  init s0;  final s0;
///   labels s0: idle;  trans s0 -req(h)-> s1;  trans s1 -tau-> s1;
/// Sections may repeat and appear in any order; final and labels are
/// optional; '#' starts a line comment. Undeclared names and an empty init
/// are errors; duplicate transitions are warnings.
ParseResult<Sps> parse_sps(const std::string& text);

/// Specification syntax: quantifiers "(E x:h)" / "(A x:h)" (the compact
/// "(Ex)" form of a one-letter variable is accepted; the annotation may be
/// dropped when exactly one type exists), predicates "req_h(x)" (bare
/// p/q map to req/ans of the sole type), equality "x = y", booleans
/// ! & | ->, temporal X U F G, TRUE/FALSE, precedence
/// unary > U > & > | > ->. Maximal quantifier-free-of-temporal subtrees
/// built from predicates become MFO sentences.
ParseResult<MfstlPtr> parse_mfstl(const std::string& text,
                                  const ServiceAlphabet& alphabet);

/// A model followed by exactly one MFSTLSPEC section holding a formula.
struct CombinedFile {
  Sps sps;
  MfstlPtr spec;
};
ParseResult<CombinedFile> parse_combined(const std::string& text);

/// Comma-separated action word: "req(h),ans(h),tau".
ParseResult<std::vector<ExtendedAction>> parse_word(const std::string& text,
                                                    const ServiceAlphabet& alphabet);

/// DSL rendering of a model; reparsing yields a structurally equal Sps.
std::string print_sps(const Sps& sps);

}  // namespace spsmc

#endif  // SPSMC_PARSER_HPP
