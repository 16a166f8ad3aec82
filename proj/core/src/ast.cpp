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
#include "spsmc/ast.hpp"

namespace spsmc {

namespace mfo {

namespace {
MfoPtr make(MfoFormula node) { return std::make_shared<MfoFormula>(std::move(node)); }
}  // namespace

MfoPtr pred(std::string name, std::string var) {
  MfoFormula node;
  node.kind = MfoFormula::Kind::Pred;
  node.pred = std::move(name);
  node.var = std::move(var);
  return make(std::move(node));
}

MfoPtr eq(std::string lhs, std::string rhs) {
  MfoFormula node;
  node.kind = MfoFormula::Kind::Eq;
  node.var = std::move(lhs);
  node.var2 = std::move(rhs);
  return make(std::move(node));
}

MfoPtr not_(MfoPtr a) {
  MfoFormula node;
  node.kind = MfoFormula::Kind::Not;
  node.lhs = std::move(a);
  return make(std::move(node));
}

MfoPtr or_(MfoPtr a, MfoPtr b) {
  MfoFormula node;
  node.kind = MfoFormula::Kind::Or;
  node.lhs = std::move(a);
  node.rhs = std::move(b);
  return make(std::move(node));
}

MfoPtr exists(std::string var, std::string type, MfoPtr body) {
  MfoFormula node;
  node.kind = MfoFormula::Kind::Exists;
  node.var = std::move(var);
  node.type = std::move(type);
  node.lhs = std::move(body);
  return make(std::move(node));
}

MfoPtr and_(MfoPtr a, MfoPtr b) { return not_(or_(not_(std::move(a)), not_(std::move(b)))); }

MfoPtr implies(MfoPtr a, MfoPtr b) { return or_(not_(std::move(a)), std::move(b)); }

MfoPtr forall(std::string var, std::string type, MfoPtr body) {
  return not_(exists(std::move(var), std::move(type), not_(std::move(body))));
}

}  // namespace mfo

bool equal(const MfoPtr& a, const MfoPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case MfoFormula::Kind::Pred:
      return a->pred == b->pred && a->var == b->var;
    case MfoFormula::Kind::Eq:
      return a->var == b->var && a->var2 == b->var2;
    case MfoFormula::Kind::Not:
      return equal(a->lhs, b->lhs);
    case MfoFormula::Kind::Or:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case MfoFormula::Kind::Exists:
      return a->var == b->var && a->type == b->type && equal(a->lhs, b->lhs);
  }
  return false;
}

namespace {

std::string mfo_operand(const MfoPtr& f);

// Recognizes the derived patterns so the printed text matches the input
// surface syntax: and = !(!a | !b), implies = !a | b, forall = !(E x)!b.
std::string mfo_str(const MfoPtr& f) {
  using Kind = MfoFormula::Kind;
  switch (f->kind) {
    case Kind::Pred:
      return f->pred + "(" + f->var + ")";
    case Kind::Eq:
      return f->var + " = " + f->var2;
    case Kind::Not: {
      const MfoPtr& c = f->lhs;
      if (c->kind == Kind::Or && c->lhs->kind == Kind::Not && c->rhs->kind == Kind::Not) {
        return "(" + mfo_str(c->lhs->lhs) + " & " + mfo_str(c->rhs->lhs) + ")";
      }
      if (c->kind == Kind::Exists && c->lhs->kind == Kind::Not) {
        return "(A " + c->var + ":" + c->type + ")" + mfo_operand(c->lhs->lhs);
      }
      return "!" + mfo_operand(c);
    }
    case Kind::Or:
      if (f->lhs->kind == Kind::Not) {
        return "(" + mfo_str(f->lhs->lhs) + " -> " + mfo_str(f->rhs) + ")";
      }
      return "(" + mfo_str(f->lhs) + " | " + mfo_str(f->rhs) + ")";
    case Kind::Exists:
      return "(E " + f->var + ":" + f->type + ")" + mfo_operand(f->lhs);
  }
  return "?";
}

// Operands of a prefix operator: predicates parse as a single primary, but
// equalities and other loose renderings need explicit parentheses.
std::string mfo_operand(const MfoPtr& f) {
  std::string s = mfo_str(f);
  if (f->kind == MfoFormula::Kind::Pred || s.front() == '(') return s;
  return "(" + s + ")";
}

}  // namespace

std::string print_mfo(const MfoPtr& formula) { return mfo_str(formula); }

namespace mfstl {

namespace {
MfstlPtr make(MfstlFormula node) { return std::make_shared<MfstlFormula>(std::move(node)); }
}  // namespace

MfstlPtr tt() {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::True;
  return make(std::move(node));
}

MfstlPtr ff() { return not_(tt()); }

MfstlPtr server_prop(std::string name) {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::ServerProp;
  node.prop = std::move(name);
  return make(std::move(node));
}

MfstlPtr sentence(MfoPtr body) {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::Sentence;
  node.sentence = std::move(body);
  return make(std::move(node));
}

MfstlPtr not_(MfstlPtr a) {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::Not;
  node.lhs = std::move(a);
  return make(std::move(node));
}

MfstlPtr or_(MfstlPtr a, MfstlPtr b) {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::Or;
  node.lhs = std::move(a);
  node.rhs = std::move(b);
  return make(std::move(node));
}

MfstlPtr next(MfstlPtr a) {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::Next;
  node.lhs = std::move(a);
  return make(std::move(node));
}

MfstlPtr until(MfstlPtr a, MfstlPtr b) {
  MfstlFormula node;
  node.kind = MfstlFormula::Kind::Until;
  node.lhs = std::move(a);
  node.rhs = std::move(b);
  return make(std::move(node));
}

MfstlPtr and_(MfstlPtr a, MfstlPtr b) { return not_(or_(not_(std::move(a)), not_(std::move(b)))); }

MfstlPtr implies(MfstlPtr a, MfstlPtr b) { return or_(not_(std::move(a)), std::move(b)); }

MfstlPtr finally(MfstlPtr a) { return until(tt(), std::move(a)); }

MfstlPtr globally(MfstlPtr a) { return not_(finally(not_(std::move(a)))); }

}  // namespace mfstl

bool equal(const MfstlPtr& a, const MfstlPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case MfstlFormula::Kind::True:
      return true;
    case MfstlFormula::Kind::ServerProp:
      return a->prop == b->prop;
    case MfstlFormula::Kind::Sentence:
      return equal(a->sentence, b->sentence);
    case MfstlFormula::Kind::Not:
    case MfstlFormula::Kind::Next:
      return equal(a->lhs, b->lhs);
    case MfstlFormula::Kind::Or:
    case MfstlFormula::Kind::Until:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

bool has_until(const MfstlPtr& formula) {
  if (!formula) return false;
  if (formula->kind == MfstlFormula::Kind::Until) return true;
  return has_until(formula->lhs) || has_until(formula->rhs);
}

namespace {

using TKind = MfstlFormula::Kind;

std::string mfstl_operand(const MfstlPtr& f);

std::string mfstl_str(const MfstlPtr& f) {
  switch (f->kind) {
    case TKind::True:
      return "TRUE";
    case TKind::ServerProp:
      return f->prop;
    case TKind::Sentence:
      return print_mfo(f->sentence);
    case TKind::Not: {
      const MfstlPtr& c = f->lhs;
      // G a == !(TRUE U !a)
      if (c->kind == TKind::Until && c->lhs->kind == TKind::True &&
          c->rhs->kind == TKind::Not) {
        return "G " + mfstl_operand(c->rhs->lhs);
      }
      if (c->kind == TKind::Or && c->lhs->kind == TKind::Not && c->rhs->kind == TKind::Not) {
        return "(" + mfstl_str(c->lhs->lhs) + " & " + mfstl_str(c->rhs->lhs) + ")";
      }
      return "!" + mfstl_operand(c);
    }
    case TKind::Or:
      if (f->lhs->kind == TKind::Not) {
        return "(" + mfstl_str(f->lhs->lhs) + " -> " + mfstl_str(f->rhs) + ")";
      }
      return "(" + mfstl_str(f->lhs) + " | " + mfstl_str(f->rhs) + ")";
    case TKind::Next:
      return "X " + mfstl_operand(f->lhs);
    case TKind::Until:
      if (f->lhs->kind == TKind::True) {
        return "F " + mfstl_operand(f->rhs);
      }
      return "(" + mfstl_str(f->lhs) + " U " + mfstl_str(f->rhs) + ")";
  }
  return "?";
}

std::string mfstl_operand(const MfstlPtr& f) {
  std::string s = mfstl_str(f);
  bool self_delimiting = f->kind == TKind::True || f->kind == TKind::ServerProp ||
                         (f->kind == TKind::Sentence &&
                          f->sentence->kind == MfoFormula::Kind::Pred);
  if (self_delimiting || s.front() == '(') return s;
  return "(" + s + ")";
}

}  // namespace

std::string print_mfstl(const MfstlPtr& formula) { return mfstl_str(formula); }

}  // namespace spsmc
