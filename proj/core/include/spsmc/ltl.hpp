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
#ifndef SPSMC_LTL_HPP
#define SPSMC_LTL_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace spsmc {

/// Propositional LTL over named atoms (server propositions and p/q flag
/// atoms). Grounding produces these; the checker and the SMV backend
/// consume them.
class LtlFormula;
using LtlPtr = std::shared_ptr<const LtlFormula>;

class LtlFormula {
 public:
  enum class Kind { True, False, Atom, Not, Or, And, Next, Until };

  Kind kind;
  std::string atom;
  LtlPtr lhs;
  LtlPtr rhs;
};

namespace ltl {

LtlPtr tt();
LtlPtr ff();
LtlPtr atom(std::string name);

// Boolean constructors fold constant operands away, so grounding output
// contains TRUE/FALSE leaves only when the whole formula is constant.
// Temporal constructors never fold.
LtlPtr not_(LtlPtr a);
LtlPtr or_(LtlPtr a, LtlPtr b);
LtlPtr and_(LtlPtr a, LtlPtr b);
LtlPtr next(LtlPtr a);
LtlPtr until(LtlPtr a, LtlPtr b);
LtlPtr finally(LtlPtr a);   // TRUE U a
LtlPtr globally(LtlPtr a);  // !(TRUE U !a)

}  // namespace ltl

bool equal(const LtlPtr& a, const LtlPtr& b);

/// All atom names occurring in the formula.
std::set<std::string> atoms_of(const LtlPtr& formula);

bool is_constant(const LtlPtr& formula);

/// True iff the formula contains a temporal node (Next or Until).
bool has_temporal(const LtlPtr& formula);

/// Canonical ASCII rendering: operators G F X U ! & | ->; unary operators
/// bind tightest and wrap their operand in parentheses, binary operators
/// parenthesize both operands; derived F/G patterns print as F/G.
std::string render_ltl(const LtlPtr& formula);

/// Finite presentation of an ultimately periodic word of atom sets:
/// positions 0..size-1 with the successor of the last wrapping back to
/// loop_start.  loop_start < letters.size().
struct LassoWord {
  std::vector<std::set<std::string>> letters;
  int loop_start = 0;

  int size() const { return static_cast<int>(letters.size()); }
  int successor(int position) const {
    return position + 1 < size() ? position + 1 : loop_start;
  }
};

/// Direct LTL truth on the infinite word represented by `word`, at
/// `position` (0 <= position < word.size()). Exact for ultimately periodic
/// words: an Until witness within stem+cycle steps exists iff one exists
/// at all.
bool eval_ltl(const LtlPtr& formula, const LassoWord& word, int position = 0);

}  // namespace spsmc

#endif  // SPSMC_LTL_HPP
