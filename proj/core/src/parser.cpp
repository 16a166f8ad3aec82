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
#include "spsmc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace spsmc {

namespace {

// ---------------------------------------------------------------------------
// Shared tokenizer.
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  Span span;
};

std::vector<Token> tokenize(const std::string& src, std::vector<Diagnostic>& problems,
                            int base_line = 1) {
  std::vector<Token> tokens;
  int line = base_line;
  int column = 1;
  size_t at = 0;

  auto advance = [&](size_t count) {
    for (size_t i = 0; i < count && at < src.size(); ++i) {
      if (src[at] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++at;
    }
  };

  while (at < src.size()) {
    char c = src[at];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (at < src.size() && src[at] != '\n') advance(1);
      continue;
    }
    Span span{line, column, line, column};
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t begin = at;
      while (at < src.size() && (std::isalnum(static_cast<unsigned char>(src[at])) ||
                                 src[at] == '_')) {
        advance(1);
      }
      span.end_column = column - 1;
      tokens.push_back({Token::Kind::Ident, src.substr(begin, at - begin), span});
      continue;
    }
    if (src.compare(at, 2, "->") == 0) {
      advance(2);
      span.end_column = column - 1;
      tokens.push_back({Token::Kind::Punct, "->", span});
      continue;
    }
    if (std::string("();:,=!&|-<>").find(c) != std::string::npos) {
      advance(1);
      span.end_column = column - 1;
      tokens.push_back({Token::Kind::Punct, std::string(1, c), span});
      continue;
    }
    problems.push_back({Diagnostic::Severity::Error,
                        std::string("unexpected character '") + c + "'", span});
    advance(1);
  }
  Span end{line, column, line, column};
  tokens.push_back({Token::Kind::End, "", end});
  return tokens;
}

struct Cursor {
  const std::vector<Token>& tokens;
  size_t at = 0;
  std::vector<Diagnostic>& problems;

  const Token& peek(int ahead = 0) const {
    size_t i = at + ahead;
    return i < tokens.size() - 1 ? tokens[i] : tokens.back();
  }
  bool done() const { return peek().kind == Token::Kind::End; }

  void error(const std::string& message) { error_at(peek().span, message); }
  void error_at(const Span& span, const std::string& message) {
    problems.push_back({Diagnostic::Severity::Error, message, span});
  }
  void warn(const Span& span, const std::string& message) {
    problems.push_back({Diagnostic::Severity::Warning, message, span});
  }

  bool accept(const std::string& text) {
    if (!done() && peek().text == text) {
      ++at;
      return true;
    }
    return false;
  }
  bool expect(const std::string& text) {
    if (accept(text)) return true;
    error("expected '" + text + "' but found '" +
          (done() ? "end of input" : peek().text) + "'");
    return false;
  }
  std::optional<Token> expect_ident() {
    if (peek().kind == Token::Kind::Ident) {
      Token t = peek();
      ++at;
      return t;
    }
    error("expected a name but found '" + (done() ? "end of input" : peek().text) + "'");
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Model DSL.
// ---------------------------------------------------------------------------

struct SpsParser {
  Cursor& cur;
  SpsDescription desc;
  std::set<std::string> declared_types;
  std::set<std::string> declared_states;
  std::set<std::tuple<std::string, ExtendedAction, std::string>> seen_transitions;
  // Transitions are resolved after all declarations so section order is free.
  struct PendingTransition {
    std::string from, to, kind, type;
    Span span;
  };
  std::vector<PendingTransition> pending;
  std::vector<std::pair<std::string, Span>> pending_inits, pending_finals;
  std::vector<std::tuple<std::string, std::vector<std::string>, Span>> pending_labels;
  bool saw_final = false;

  void name_list(std::vector<std::pair<std::string, Span>>& out) {
    do {
      if (auto t = cur.expect_ident()) out.push_back({t->text, t->span});
    } while (cur.accept(","));
    cur.expect(";");
  }

  void statement() {
    if (cur.accept("types")) {
      std::vector<std::pair<std::string, Span>> names;
      name_list(names);
      for (auto& [name, span] : names) {
        if (!declared_types.insert(name).second) {
          cur.error_at(span, "duplicate client type '" + name + "'");
        } else {
          desc.types.push_back(name);
        }
      }
    } else if (cur.accept("states")) {
      std::vector<std::pair<std::string, Span>> names;
      name_list(names);
      for (auto& [name, span] : names) {
        if (!declared_states.insert(name).second) {
          cur.error_at(span, "duplicate state '" + name + "'");
        } else {
          desc.states.push_back(name);
        }
      }
    } else if (cur.accept("init")) {
      name_list(pending_inits);
    } else if (cur.accept("final")) {
      saw_final = true;
      name_list(pending_finals);
    } else if (cur.accept("labels")) {
      auto state = cur.expect_ident();
      cur.expect(":");
      std::vector<std::string> props;
      do {
        if (auto t = cur.expect_ident()) props.push_back(t->text);
      } while (cur.accept(","));
      cur.expect(";");
      if (state) pending_labels.push_back({state->text, props, state->span});
    } else if (cur.accept("trans")) {
      PendingTransition t;
      if (auto from = cur.expect_ident()) {
        t.from = from->text;
        t.span = from->span;
      }
      cur.expect("-");
      if (auto kind = cur.expect_ident()) {
        t.kind = kind->text;
        if (t.kind != "tau") {
          cur.expect("(");
          if (auto type = cur.expect_ident()) t.type = type->text;
          cur.expect(")");
        }
      }
      cur.expect("->");
      if (auto to = cur.expect_ident()) t.to = to->text;
      cur.expect(";");
      pending.push_back(std::move(t));
    } else {
      cur.error("expected a statement (types/states/init/final/labels/trans)");
      ++cur.at;
    }
  }

  std::optional<Sps> run() {
    while (!cur.done()) statement();

    for (auto& [name, span] : pending_inits) {
      if (!declared_states.count(name)) {
        cur.error_at(span, "undeclared state '" + name + "' in init");
      }
      desc.initial.push_back(name);
    }
    if (saw_final) {
      desc.final.emplace();
      for (auto& [name, span] : pending_finals) {
        if (!declared_states.count(name)) {
          cur.error_at(span, "undeclared state '" + name + "' in final");
        }
        desc.final->push_back(name);
      }
    }
    for (auto& [state, props, span] : pending_labels) {
      if (!declared_states.count(state)) {
        cur.error_at(span, "undeclared state '" + state + "' in labels");
      }
      auto& slot = desc.labels[state];
      slot.insert(slot.end(), props.begin(), props.end());
    }
    for (auto& t : pending) {
      if (!declared_states.count(t.from)) {
        cur.error_at(t.span, "undeclared state '" + t.from + "' in trans");
        continue;
      }
      if (!declared_states.count(t.to)) {
        cur.error_at(t.span, "undeclared state '" + t.to + "' in trans");
        continue;
      }
      ExtendedAction action;
      if (t.kind == "tau") {
        action = tau_action();
      } else if (t.kind == "req" || t.kind == "ans") {
        auto it = std::find(desc.types.begin(), desc.types.end(), t.type);
        if (it == desc.types.end()) {
          cur.error_at(t.span, "undeclared client type '" + t.type + "' in trans");
          continue;
        }
        int index = static_cast<int>(it - desc.types.begin());
        action = t.kind == "req" ? req_action(index) : ans_action(index);
      } else {
        cur.error_at(t.span, "unknown action '" + t.kind + "' (req/ans/tau)");
        continue;
      }
      auto triple = std::make_tuple(t.from, action, t.to);
      if (!seen_transitions.insert(triple).second) {
        cur.warn(t.span, "duplicate transition ignored");
        continue;
      }
      desc.transitions.push_back(triple);
    }

    if (desc.types.empty()) {
      cur.error_at(Span{1, 1, 1, 1}, "a model must declare at least one type");
    }
    if (desc.states.empty()) {
      cur.error_at(Span{1, 1, 1, 1}, "a model must declare at least one state");
    }
    if (desc.initial.empty()) {
      cur.error_at(Span{1, 1, 1, 1}, "a model must declare at least one initial state");
    }
    if (has_errors(cur.problems)) return std::nullopt;
    return make_sps(desc);
  }
};

// ---------------------------------------------------------------------------
// Formula parsing: a transient tree is built first, then stratified into
// the temporal and client layers (maximal temporal-free subtrees built of
// predicates become MFO sentences).
// ---------------------------------------------------------------------------

struct PNode;
using PPtr = std::shared_ptr<PNode>;

struct PNode {
  enum class Kind {
    True, False, ServerProp, Pred, Eq, Not, And, Or, Implies,
    Exists, Forall, Next, Until, Finally, Globally,
  };
  Kind kind;
  std::string name;  // prop / predicate / binder variable
  std::string var;   // predicate operand / eq lhs
  std::string var2;  // eq rhs
  std::string type;  // binder type
  PPtr lhs, rhs;
  Span span;
};

PPtr pnode(PNode node) { return std::make_shared<PNode>(std::move(node)); }

struct FormulaParser {
  Cursor& cur;
  const ServiceAlphabet& alphabet;

  bool is_reserved(const std::string& s) {
    return s == "X" || s == "F" || s == "G" || s == "U" || s == "TRUE" || s == "FALSE";
  }

  bool starts_formula(const Token& t) {
    if (t.kind == Token::Kind::Punct) return t.text == "(" || t.text == "!";
    return t.kind == Token::Kind::Ident;
  }

  // Quantifier lookahead after '(': "E x", "A x", or the compact "Ex"/"Ax"
  // form (only when followed by ':' or by ')' that begins a formula).
  bool at_quantifier() {
    if (cur.peek().text != "(") return false;
    const Token& head = cur.peek(1);
    if (head.kind != Token::Kind::Ident) return false;
    if (head.text == "E" || head.text == "A") {
      return cur.peek(2).kind == Token::Kind::Ident;
    }
    if (head.text.size() >= 2 && (head.text[0] == 'E' || head.text[0] == 'A')) {
      if (cur.peek(2).text == ":") return true;
      if (cur.peek(2).text == ")" && starts_formula(cur.peek(3))) return true;
    }
    return false;
  }

  PPtr quantifier() {
    Span span = cur.peek().span;
    cur.expect("(");
    Token head = *cur.expect_ident();
    bool universal;
    std::string var;
    if (head.text == "E" || head.text == "A") {
      universal = head.text == "A";
      if (auto v = cur.expect_ident()) var = v->text;
    } else {
      universal = head.text[0] == 'A';
      var = head.text.substr(1);
    }
    std::string type;
    if (cur.accept(":")) {
      if (auto t = cur.expect_ident()) type = t->text;
    } else if (alphabet.size() == 1) {
      type = alphabet.name(0);
    } else {
      cur.error_at(head.span, "type annotation required for '" + var +
                                  "' (several client types exist)");
    }
    cur.expect(")");
    PNode node;
    node.kind = universal ? PNode::Kind::Forall : PNode::Kind::Exists;
    node.name = var;
    node.type = type;
    node.span = span;
    node.lhs = unary();
    return pnode(std::move(node));
  }

  // Bare p/q name sugar in single-type mode.
  std::string resolve_predicate(const std::string& name) {
    if (alphabet.size() == 1) {
      if (name == "p") return "req_" + alphabet.name(0);
      if (name == "q") return "ans_" + alphabet.name(0);
    }
    return name;
  }

  PPtr primary() {
    Span span = cur.peek().span;
    if (at_quantifier()) return quantifier();
    if (cur.accept("(")) {
      PPtr inner = implies();
      cur.expect(")");
      return inner;
    }
    if (cur.accept("TRUE")) {
      PNode node;
      node.kind = PNode::Kind::True;
      node.span = span;
      return pnode(std::move(node));
    }
    if (cur.accept("FALSE")) {
      PNode node;
      node.kind = PNode::Kind::False;
      node.span = span;
      return pnode(std::move(node));
    }
    auto ident = cur.expect_ident();
    if (!ident) {
      PNode node;
      node.kind = PNode::Kind::True;
      node.span = span;
      return pnode(std::move(node));
    }
    if (is_reserved(ident->text)) {
      cur.error_at(ident->span, "'" + ident->text + "' cannot be used as a name");
    }
    if (cur.accept("(")) {
      PNode node;
      node.kind = PNode::Kind::Pred;
      node.name = resolve_predicate(ident->text);
      if (auto v = cur.expect_ident()) node.var = v->text;
      cur.expect(")");
      node.span = span;
      return pnode(std::move(node));
    }
    if (cur.accept("=")) {
      PNode node;
      node.kind = PNode::Kind::Eq;
      node.var = ident->text;
      if (auto v = cur.expect_ident()) node.var2 = v->text;
      node.span = span;
      return pnode(std::move(node));
    }
    PNode node;
    node.kind = PNode::Kind::ServerProp;
    node.name = ident->text;
    node.span = span;
    return pnode(std::move(node));
  }

  PPtr unary() {
    Span span = cur.peek().span;
    auto wrap = [&](PNode::Kind kind) {
      PNode node;
      node.kind = kind;
      node.span = span;
      node.lhs = unary();
      return pnode(std::move(node));
    };
    if (cur.accept("!")) return wrap(PNode::Kind::Not);
    if (cur.peek().kind == Token::Kind::Ident) {
      if (cur.accept("X")) return wrap(PNode::Kind::Next);
      if (cur.accept("F")) return wrap(PNode::Kind::Finally);
      if (cur.accept("G")) return wrap(PNode::Kind::Globally);
    }
    return primary();
  }

  PPtr until() {
    PPtr lhs = unary();
    if (cur.peek().text == "U" && cur.peek().kind == Token::Kind::Ident) {
      Span span = cur.peek().span;
      ++cur.at;
      PNode node;
      node.kind = PNode::Kind::Until;
      node.lhs = std::move(lhs);
      node.rhs = until();  // right associative
      node.span = span;
      return pnode(std::move(node));
    }
    return lhs;
  }

  PPtr conjunction() {
    PPtr lhs = until();
    while (cur.peek().text == "&") {
      Span span = cur.peek().span;
      ++cur.at;
      PNode node;
      node.kind = PNode::Kind::And;
      node.lhs = std::move(lhs);
      node.rhs = until();
      node.span = span;
      lhs = pnode(std::move(node));
    }
    return lhs;
  }

  PPtr disjunction() {
    PPtr lhs = conjunction();
    while (cur.peek().text == "|") {
      Span span = cur.peek().span;
      ++cur.at;
      PNode node;
      node.kind = PNode::Kind::Or;
      node.lhs = std::move(lhs);
      node.rhs = conjunction();
      node.span = span;
      lhs = pnode(std::move(node));
    }
    return lhs;
  }

  PPtr implies() {
    PPtr lhs = disjunction();
    if (cur.accept("->")) {
      PNode node;
      node.kind = PNode::Kind::Implies;
      node.span = lhs->span;
      node.lhs = std::move(lhs);
      node.rhs = implies();  // right associative
      return pnode(std::move(node));
    }
    return lhs;
  }

  // --- stratification ---

  bool is_client_layer(const PPtr& n) {
    switch (n->kind) {
      case PNode::Kind::Pred:
      case PNode::Kind::Eq:
      case PNode::Kind::Exists:
      case PNode::Kind::Forall:
        return true;
      case PNode::Kind::Not:
        return is_client_layer(n->lhs);
      case PNode::Kind::And:
      case PNode::Kind::Or:
      case PNode::Kind::Implies:
        return is_client_layer(n->lhs) && is_client_layer(n->rhs);
      default:
        return false;
    }
  }

  MfoPtr to_mfo(const PPtr& n) {
    switch (n->kind) {
      case PNode::Kind::Pred:
        return mfo::pred(n->name, n->var);
      case PNode::Kind::Eq:
        return mfo::eq(n->var, n->var2);
      case PNode::Kind::Not:
        return mfo::not_(to_mfo(n->lhs));
      case PNode::Kind::And:
        return mfo::and_(to_mfo(n->lhs), to_mfo(n->rhs));
      case PNode::Kind::Or:
        return mfo::or_(to_mfo(n->lhs), to_mfo(n->rhs));
      case PNode::Kind::Implies:
        return mfo::implies(to_mfo(n->lhs), to_mfo(n->rhs));
      case PNode::Kind::Exists:
      case PNode::Kind::Forall: {
        if (!is_client_layer(n->lhs)) {
          cur.error_at(n->span, "temporal operator in the scope of a quantifier");
          return mfo::pred("req_" + n->type, n->name);  // recovery placeholder
        }
        MfoPtr body = to_mfo(n->lhs);
        return n->kind == PNode::Kind::Exists ? mfo::exists(n->name, n->type, body)
                                              : mfo::forall(n->name, n->type, body);
      }
      default:
        cur.error_at(n->span, "server-level construct inside a client formula");
        return mfo::eq(n->name, n->name);
    }
  }

  MfstlPtr to_mfstl(const PPtr& n) {
    if (is_client_layer(n)) return mfstl::sentence(to_mfo(n));
    switch (n->kind) {
      case PNode::Kind::True:
        return mfstl::tt();
      case PNode::Kind::False:
        return mfstl::ff();
      case PNode::Kind::ServerProp:
        return mfstl::server_prop(n->name);
      case PNode::Kind::Not:
        return mfstl::not_(to_mfstl(n->lhs));
      case PNode::Kind::And:
        return mfstl::and_(to_mfstl(n->lhs), to_mfstl(n->rhs));
      case PNode::Kind::Or:
        return mfstl::or_(to_mfstl(n->lhs), to_mfstl(n->rhs));
      case PNode::Kind::Implies:
        return mfstl::implies(to_mfstl(n->lhs), to_mfstl(n->rhs));
      case PNode::Kind::Next:
        return mfstl::next(to_mfstl(n->lhs));
      case PNode::Kind::Until:
        return mfstl::until(to_mfstl(n->lhs), to_mfstl(n->rhs));
      case PNode::Kind::Finally:
        return mfstl::finally(to_mfstl(n->lhs));
      case PNode::Kind::Globally:
        return mfstl::globally(to_mfstl(n->lhs));
      case PNode::Kind::Exists:
      case PNode::Kind::Forall: {
        // Quantifier over a temporal body: inexpressible; report and recover.
        cur.error_at(n->span, "temporal operator in the scope of a quantifier");
        return to_mfstl(n->lhs);
      }
      default:
        cur.error_at(n->span, "malformed formula");
        return mfstl::tt();
    }
  }

  std::optional<MfstlPtr> run() {
    PPtr tree = implies();
    if (!cur.done()) cur.error("unexpected trailing input after the formula");
    MfstlPtr formula = to_mfstl(tree);
    if (has_errors(cur.problems)) return std::nullopt;
    return formula;
  }
};

}  // namespace

ParseResult<Sps> parse_sps(const std::string& text) {
  ParseResult<Sps> result;
  auto tokens = tokenize(text, result.diagnostics);
  Cursor cur{tokens, 0, result.diagnostics};
  SpsParser parser{cur, {}, {}, {}, {}, {}, {}, {}, {}, false};
  if (auto sps = parser.run()) result.value = std::move(*sps);
  return result;
}

ParseResult<MfstlPtr> parse_mfstl(const std::string& text,
                                  const ServiceAlphabet& alphabet) {
  ParseResult<MfstlPtr> result;
  auto tokens = tokenize(text, result.diagnostics);
  Cursor cur{tokens, 0, result.diagnostics};
  FormulaParser parser{cur, alphabet};
  if (auto formula = parser.run()) result.value = std::move(*formula);
  return result;
}

ParseResult<CombinedFile> parse_combined(const std::string& text) {
  ParseResult<CombinedFile> result;

  // Split at the MFSTLSPEC line. Exactly one section is required.
  std::istringstream in(text);
  std::string line;
  std::string model_part, spec_part;
  int line_number = 0;
  int spec_line = 0;
  int sections = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.rfind("MFSTLSPEC", 0) == 0) {
      ++sections;
      spec_line = line_number;
      spec_part = trimmed.substr(9);
      while (std::getline(in, line)) {
        std::string rest = line;
        rest.erase(0, rest.find_first_not_of(" \t\r"));
        if (rest.rfind("MFSTLSPEC", 0) == 0) ++sections;
        spec_part += "\n" + line;
      }
      break;
    }
    model_part += line + "\n";
  }
  if (sections != 1) {
    result.diagnostics.push_back(
        {Diagnostic::Severity::Error,
         "a combined file must contain exactly one MFSTLSPEC section",
         Span{line_number, 1, line_number, 1}});
    return result;
  }

  auto sps = parse_sps(model_part);
  result.diagnostics.insert(result.diagnostics.end(), sps.diagnostics.begin(),
                            sps.diagnostics.end());
  if (!sps.value) return result;

  ParseResult<MfstlPtr> spec;
  {
    auto tokens = tokenize(spec_part, spec.diagnostics, spec_line);
    Cursor cur{tokens, 0, spec.diagnostics};
    FormulaParser parser{cur, sps.value->alphabet};
    if (auto formula = parser.run()) spec.value = std::move(*formula);
  }
  result.diagnostics.insert(result.diagnostics.end(), spec.diagnostics.begin(),
                            spec.diagnostics.end());
  if (!spec.value) return result;

  result.value = CombinedFile{std::move(*sps.value), std::move(*spec.value)};
  return result;
}

ParseResult<std::vector<ExtendedAction>> parse_word(const std::string& text,
                                                    const ServiceAlphabet& alphabet) {
  ParseResult<std::vector<ExtendedAction>> result;
  auto tokens = tokenize(text, result.diagnostics);
  Cursor cur{tokens, 0, result.diagnostics};

  std::vector<ExtendedAction> word;
  if (!cur.done()) {
    do {
      auto kind = cur.expect_ident();
      if (!kind) break;
      if (kind->text == "tau") {
        word.push_back(tau_action());
        continue;
      }
      if (kind->text != "req" && kind->text != "ans") {
        cur.error_at(kind->span, "unknown action '" + kind->text + "' (req/ans/tau)");
        break;
      }
      cur.expect("(");
      auto type = cur.expect_ident();
      cur.expect(")");
      if (!type) break;
      int index = alphabet.index_of(type->text);
      if (index < 0) {
        cur.error_at(type->span, "unknown client type '" + type->text + "'");
        break;
      }
      word.push_back(kind->text == "req" ? req_action(index) : ans_action(index));
    } while (cur.accept(","));
    if (!cur.done()) cur.error("unexpected trailing input after the word");
  }
  if (!has_errors(result.diagnostics)) result.value = std::move(word);
  return result;
}

std::string print_sps(const Sps& sps) {
  std::ostringstream out;
  out << "types ";
  for (int i = 0; i < sps.alphabet.size(); ++i) {
    if (i) out << ", ";
    out << sps.alphabet.name(i);
  }
  out << ";\nstates ";
  for (size_t i = 0; i < sps.states.size(); ++i) {
    if (i) out << ", ";
    out << sps.states[i];
  }
  out << ";\ninit ";
  for (size_t i = 0; i < sps.initial.size(); ++i) {
    if (i) out << ", ";
    out << sps.states[sps.initial[i]];
  }
  out << ";\n";
  if (sps.final.has_value()) {
    out << "final ";
    for (size_t i = 0; i < sps.final->size(); ++i) {
      if (i) out << ", ";
      out << sps.states[(*sps.final)[i]];
    }
    out << ";\n";
  }
  for (size_t s = 0; s < sps.states.size(); ++s) {
    if (sps.labels[s].empty()) continue;
    out << "labels " << sps.states[s] << ": ";
    for (size_t i = 0; i < sps.labels[s].size(); ++i) {
      if (i) out << ", ";
      out << sps.labels[s][i];
    }
    out << ";\n";
  }
  for (const auto& t : sps.transitions) {
    out << "trans " << sps.states[t.from] << " -";
    switch (t.action.kind) {
      case ActionKind::Tau:
        out << "tau";
        break;
      case ActionKind::Req:
        out << "req(" << sps.alphabet.name(t.action.type) << ")";
        break;
      case ActionKind::Ans:
        out << "ans(" << sps.alphabet.name(t.action.type) << ")";
        break;
      case ActionKind::Quiescent:
        out << "quiescent";
        break;
    }
    out << "-> " << sps.states[t.to] << ";\n";
  }
  return out.str();
}

}  // namespace spsmc
