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
#ifndef SPSMC_AST_HPP
#define SPSMC_AST_HPP

#include <memory>
#include <string>

namespace spsmc {

// ---------------------------------------------------------------------------
// Client (MFO) layer: monadic predicates over typed variables, equality,
// negation, disjunction and typed existential quantification. Conjunction,
// implication and universal quantification are derived forms built from the
// core connectives; the printers below recognize the derived patterns.
// ---------------------------------------------------------------------------

class MfoFormula;
using MfoPtr = std::shared_ptr<const MfoFormula>;

class MfoFormula {
 public:
  enum class Kind { Pred, Eq, Not, Or, Exists };

  Kind kind;
  std::string pred;   // Pred: predicate name (e.g. "req_h")
  std::string var;    // Pred operand, Eq lhs, Exists binder
  std::string var2;   // Eq rhs
  std::string type;   // Exists: binder type name
  MfoPtr lhs;         // Not/Exists child; Or lhs
  MfoPtr rhs;         // Or rhs
};

namespace mfo {

MfoPtr pred(std::string name, std::string var);
MfoPtr eq(std::string lhs, std::string rhs);
MfoPtr not_(MfoPtr a);
MfoPtr or_(MfoPtr a, MfoPtr b);
MfoPtr exists(std::string var, std::string type, MfoPtr body);

// Derived connectives.
MfoPtr and_(MfoPtr a, MfoPtr b);      // !(!a | !b)
MfoPtr implies(MfoPtr a, MfoPtr b);   // !a | b
MfoPtr forall(std::string var, std::string type, MfoPtr body);  // !(E x)!body

}  // namespace mfo

bool equal(const MfoPtr& a, const MfoPtr& b);

/// Surface-syntax rendering; reparsing the result yields a structurally
/// equal formula.
std::string print_mfo(const MfoPtr& formula);

// ---------------------------------------------------------------------------
// Server (temporal) layer: server propositions and MFO sentences closed
// under boolean and temporal connectives. F/G/and/implies are derived.
// ---------------------------------------------------------------------------

class MfstlFormula;
using MfstlPtr = std::shared_ptr<const MfstlFormula>;

class MfstlFormula {
 public:
  enum class Kind { True, ServerProp, Sentence, Not, Or, Next, Until };

  Kind kind;
  std::string prop;    // ServerProp name
  MfoPtr sentence;     // Sentence payload
  MfstlPtr lhs;        // Not/Next child; Or/Until lhs
  MfstlPtr rhs;        // Or/Until rhs
};

namespace mfstl {

MfstlPtr tt();
MfstlPtr ff();  // !TRUE
MfstlPtr server_prop(std::string name);
MfstlPtr sentence(MfoPtr body);
MfstlPtr not_(MfstlPtr a);
MfstlPtr or_(MfstlPtr a, MfstlPtr b);
MfstlPtr next(MfstlPtr a);
MfstlPtr until(MfstlPtr a, MfstlPtr b);

// Derived connectives and modalities.
MfstlPtr and_(MfstlPtr a, MfstlPtr b);
MfstlPtr implies(MfstlPtr a, MfstlPtr b);
MfstlPtr finally(MfstlPtr a);   // TRUE U a
MfstlPtr globally(MfstlPtr a);  // !(TRUE U !a)

}  // namespace mfstl

bool equal(const MfstlPtr& a, const MfstlPtr& b);

/// True iff the formula contains an Until node (including derived F/G).
bool has_until(const MfstlPtr& formula);

std::string print_mfstl(const MfstlPtr& formula);

}  // namespace spsmc

#endif  // SPSMC_AST_HPP
