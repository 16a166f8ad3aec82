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
#include "spsmc/ltl.hpp"

#include <map>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace ltl {

namespace {
LtlPtr make(LtlFormula node) { return std::make_shared<LtlFormula>(std::move(node)); }
}  // namespace

LtlPtr tt() {
  LtlFormula node;
  node.kind = LtlFormula::Kind::True;
  return make(std::move(node));
}

LtlPtr ff() {
  LtlFormula node;
  node.kind = LtlFormula::Kind::False;
  return make(std::move(node));
}

LtlPtr atom(std::string name) {
  LtlFormula node;
  node.kind = LtlFormula::Kind::Atom;
  node.atom = std::move(name);
  return make(std::move(node));
}

LtlPtr not_(LtlPtr a) {
  if (a->kind == LtlFormula::Kind::True) return ff();
  if (a->kind == LtlFormula::Kind::False) return tt();
  LtlFormula node;
  node.kind = LtlFormula::Kind::Not;
  node.lhs = std::move(a);
  return make(std::move(node));
}

LtlPtr or_(LtlPtr a, LtlPtr b) {
  if (a->kind == LtlFormula::Kind::True || b->kind == LtlFormula::Kind::True) return tt();
  if (a->kind == LtlFormula::Kind::False) return b;
  if (b->kind == LtlFormula::Kind::False) return a;
  LtlFormula node;
  node.kind = LtlFormula::Kind::Or;
  node.lhs = std::move(a);
  node.rhs = std::move(b);
  return make(std::move(node));
}

LtlPtr and_(LtlPtr a, LtlPtr b) {
  if (a->kind == LtlFormula::Kind::False || b->kind == LtlFormula::Kind::False) return ff();
  if (a->kind == LtlFormula::Kind::True) return b;
  if (b->kind == LtlFormula::Kind::True) return a;
  LtlFormula node;
  node.kind = LtlFormula::Kind::And;
  node.lhs = std::move(a);
  node.rhs = std::move(b);
  return make(std::move(node));
}

LtlPtr next(LtlPtr a) {
  LtlFormula node;
  node.kind = LtlFormula::Kind::Next;
  node.lhs = std::move(a);
  return make(std::move(node));
}

LtlPtr until(LtlPtr a, LtlPtr b) {
  LtlFormula node;
  node.kind = LtlFormula::Kind::Until;
  node.lhs = std::move(a);
  node.rhs = std::move(b);
  return make(std::move(node));
}

LtlPtr finally(LtlPtr a) { return until(tt(), std::move(a)); }

LtlPtr globally(LtlPtr a) { return not_(until(tt(), not_(std::move(a)))); }

}  // namespace ltl

bool equal(const LtlPtr& a, const LtlPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case LtlFormula::Kind::True:
    case LtlFormula::Kind::False:
      return true;
    case LtlFormula::Kind::Atom:
      return a->atom == b->atom;
    case LtlFormula::Kind::Not:
    case LtlFormula::Kind::Next:
      return equal(a->lhs, b->lhs);
    case LtlFormula::Kind::Or:
    case LtlFormula::Kind::And:
    case LtlFormula::Kind::Until:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

namespace {

void collect_atoms(const LtlPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == LtlFormula::Kind::Atom) out.insert(f->atom);
  collect_atoms(f->lhs, out);
  collect_atoms(f->rhs, out);
}

}  // namespace

std::set<std::string> atoms_of(const LtlPtr& formula) {
  std::set<std::string> atoms;
  collect_atoms(formula, atoms);
  return atoms;
}

bool is_constant(const LtlPtr& formula) {
  return formula->kind == LtlFormula::Kind::True ||
         formula->kind == LtlFormula::Kind::False;
}

bool has_temporal(const LtlPtr& formula) {
  if (!formula) return false;
  if (formula->kind == LtlFormula::Kind::Next ||
      formula->kind == LtlFormula::Kind::Until) {
    return true;
  }
  return has_temporal(formula->lhs) || has_temporal(formula->rhs);
}

namespace {

std::string render(const LtlPtr& f) {
  using Kind = LtlFormula::Kind;
  switch (f->kind) {
    case Kind::True:
      return "TRUE";
    case Kind::False:
      return "FALSE";
    case Kind::Atom:
      return f->atom;
    case Kind::Not:
      // G a == !(TRUE U !a)
      if (f->lhs->kind == Kind::Until && f->lhs->lhs->kind == Kind::True &&
          f->lhs->rhs->kind == Kind::Not) {
        return "G (" + render(f->lhs->rhs->lhs) + ")";
      }
      return "! (" + render(f->lhs) + ")";
    case Kind::Or:
      // a -> b == !a | b
      if (f->lhs->kind == Kind::Not) {
        return "(" + render(f->lhs->lhs) + ") -> (" + render(f->rhs) + ")";
      }
      return "(" + render(f->lhs) + ") | (" + render(f->rhs) + ")";
    case Kind::And:
      return "(" + render(f->lhs) + ") & (" + render(f->rhs) + ")";
    case Kind::Next:
      return "X (" + render(f->lhs) + ")";
    case Kind::Until:
      if (f->lhs->kind == Kind::True) {
        return "F (" + render(f->rhs) + ")";
      }
      return "(" + render(f->lhs) + ") U (" + render(f->rhs) + ")";
  }
  return "?";
}

}  // namespace

std::string render_ltl(const LtlPtr& formula) { return render(formula); }

bool eval_ltl(const LtlPtr& formula, const LassoWord& word, int position) {
  if (word.letters.empty() || word.loop_start < 0 || word.loop_start >= word.size()) {
    throw InputError("malformed lasso word");
  }
  if (position < 0 || position >= word.size()) {
    throw InputError("lasso position out of range");
  }

  // Bottom-up truth tables per node; an Until witness search over the lasso
  // graph needs at most size+1 steps from any position.
  std::map<const LtlFormula*, std::vector<char>> tables;
  int n = word.size();

  auto compute = [&](const LtlPtr& f, auto&& self) -> const std::vector<char>& {
    auto hit = tables.find(f.get());
    if (hit != tables.end()) return hit->second;

    std::vector<char> row(n, 0);
    using Kind = LtlFormula::Kind;
    switch (f->kind) {
      case Kind::True:
        row.assign(n, 1);
        break;
      case Kind::False:
        break;
      case Kind::Atom:
        for (int i = 0; i < n; ++i) row[i] = word.letters[i].count(f->atom) ? 1 : 0;
        break;
      case Kind::Not: {
        const auto& c = self(f->lhs, self);
        for (int i = 0; i < n; ++i) row[i] = !c[i];
        break;
      }
      case Kind::Or: {
        const auto& a = self(f->lhs, self);
        const auto& b = self(f->rhs, self);
        for (int i = 0; i < n; ++i) row[i] = a[i] || b[i];
        break;
      }
      case Kind::And: {
        const auto& a = self(f->lhs, self);
        const auto& b = self(f->rhs, self);
        for (int i = 0; i < n; ++i) row[i] = a[i] && b[i];
        break;
      }
      case Kind::Next: {
        const auto& c = self(f->lhs, self);
        for (int i = 0; i < n; ++i) row[i] = c[word.successor(i)];
        break;
      }
      case Kind::Until: {
        const auto& a = self(f->lhs, self);
        const auto& b = self(f->rhs, self);
        for (int i = 0; i < n; ++i) {
          int at = i;
          for (int step = 0; step <= n; ++step) {
            if (b[at]) {
              row[i] = 1;
              break;
            }
            if (!a[at]) break;
            at = word.successor(at);
          }
        }
        break;
      }
    }
    return tables.emplace(f.get(), std::move(row)).first->second;
  };

  return compute(formula, compute)[position] != 0;
}

}  // namespace spsmc
