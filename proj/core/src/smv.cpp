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
#include "spsmc/smv.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "spsmc/errors.hpp"

namespace spsmc {

namespace {

struct Emitter {
  const Sps& sps;
  const BoundProfile& bounds;
  bool boolean_input;  // single type, no tau: the paper's ip encoding

  // Types that get a counter and flag arrays.
  std::vector<int> active_types() const {
    std::vector<int> types;
    for (int i = 0; i < sps.alphabet.size(); ++i) {
      if (bounds.n_of(i) >= 1) types.push_back(i);
    }
    return types;
  }

  std::string ctr_name(int type) const {
    return boolean_input || sps.alphabet.size() == 1 ? "ctr"
                                                     : "ctr" + std::to_string(type);
  }
  std::string array_name(char base, int type) const {
    std::string name(1, base);
    if (!boolean_input && sps.alphabet.size() > 1) name += std::to_string(type);
    return name;
  }

  std::string input_guard(const ExtendedAction& action) const {
    if (boolean_input) {
      return action.kind == ActionKind::Req ? "ip=TRUE" : "ip=FALSE";
    }
    switch (action.kind) {
      case ActionKind::Tau:
        return "act=tau";
      case ActionKind::Req:
        return "act=req_" + sps.alphabet.name(action.type);
      case ActionKind::Ans:
        return "act=ans_" + sps.alphabet.name(action.type);
      case ActionKind::Quiescent:
        break;
    }
    throw EmissionError("cannot encode action");
  }

  bool needs_input() const {
    return !sps.transitions.empty() || !active_types().empty();
  }

  void emit(std::ostream& out, const LtlPtr& phi) {
    out << "MODULE main\n";
    if (needs_input()) {
      if (boolean_input) {
        out << "IVAR ip : boolean;\n";
      } else {
        out << "IVAR act : {";
        bool first = true;
        for (int i : active_types()) {
          if (!first) out << ", ";
          out << "req_" << sps.alphabet.name(i);
          out << ", ans_" << sps.alphabet.name(i);
          first = false;
        }
        if (sps.has_tau()) {
          if (!first) out << ", ";
          out << "tau";
        }
        out << "};\n";
      }
    }

    out << "VAR loc : {";
    for (size_t i = 0; i < sps.states.size(); ++i) {
      if (i) out << ", ";
      out << sps.states[i];
    }
    out << "};\n";
    for (int i : active_types()) {
      out << "VAR " << ctr_name(i) << " : 0.." << bounds.n_of(i) << ";\n";
      out << "VAR " << array_name('p', i) << " : array 1.." << bounds.n_of(i)
          << " of boolean;\n";
      out << "VAR " << array_name('q', i) << " : array 1.." << bounds.n_of(i)
          << " of boolean;\n";
    }

    out << "ASSIGN\n";
    out << " init(loc) := ";
    if (sps.initial.size() == 1) {
      out << sps.states[sps.initial[0]];
    } else {
      out << "{";
      for (size_t i = 0; i < sps.initial.size(); ++i) {
        if (i) out << ", ";
        out << sps.states[sps.initial[i]];
      }
      out << "}";
    }
    out << ";\n";
    for (int i : active_types()) {
      out << " init(" << ctr_name(i) << ") := 0;\n";
      for (int j = 1; j <= bounds.n_of(i); ++j) {
        out << " init(" << array_name('p', i) << "[" << j << "]) := FALSE;\n";
      }
      for (int j = 1; j <= bounds.n_of(i); ++j) {
        out << " init(" << array_name('q', i) << "[" << j << "]) := FALSE;\n";
      }
    }

    emit_loc_next(out);
    for (int i : active_types()) {
      emit_ctr_next(out, i);
      emit_flag_next(out, i);
    }

    out << "\nLTLSPEC\n " << render_ltl(phi) << "\n";
  }

  void emit_loc_next(std::ostream& out) {
    out << " next(loc) := case\n";
    // One case line per (state, action) group; groups whose only target is
    // the source itself are left to the fallthrough, which reproduces the
    // paper's listing.
    size_t i = 0;
    while (i < sps.transitions.size()) {
      int from = sps.transitions[i].from;
      ExtendedAction action = sps.transitions[i].action;
      std::vector<int> targets;
      while (i < sps.transitions.size() && sps.transitions[i].from == from &&
             sps.transitions[i].action == action) {
        targets.push_back(sps.transitions[i].to);
        ++i;
      }
      if (targets.size() == 1 && targets[0] == from) continue;
      out << "  loc=" << sps.states[from] << " & " << input_guard(action) << " : ";
      if (targets.size() == 1) {
        out << sps.states[targets[0]];
      } else {
        out << "{";
        for (size_t t = 0; t < targets.size(); ++t) {
          if (t) out << ", ";
          out << sps.states[targets[t]];
        }
        out << "}";
      }
      out << ";\n";
    }
    out << "  TRUE : loc;\n esac;\n";
  }

  void emit_ctr_next(std::ostream& out, int type) {
    const std::string ctr = ctr_name(type);
    out << " next(" << ctr << ") := case\n";
    out << "  " << input_guard(req_action(type)) << " & " << ctr << "<"
        << bounds.n_of(type) << " : " << ctr << " + 1;\n";
    out << "  " << input_guard(ans_action(type)) << " & " << ctr << ">0 : " << ctr
        << " - 1;\n";
    out << "  TRUE : " << ctr << ";\n esac;\n";
  }

  void emit_flag_next(std::ostream& out, int type) {
    const std::string ctr = ctr_name(type);
    const std::string p = array_name('p', type);
    const std::string q = array_name('q', type);
    const std::string req = input_guard(req_action(type));
    const std::string ans = input_guard(ans_action(type));
    for (int j = 1; j <= bounds.n_of(type); ++j) {
      std::string pj = p + "[" + std::to_string(j) + "]";
      out << " next(" << pj << ") := case\n";
      out << "  " << pj << "=FALSE & " << req << " & " << ctr << "=" << j - 1
          << " : TRUE;\n";
      out << "  " << pj << "=TRUE & " << ans << " & " << ctr << "=" << j
          << " : FALSE;\n";
      out << "  TRUE : " << pj << ";\n esac;\n";
    }
    for (int j = 1; j <= bounds.n_of(type); ++j) {
      std::string qj = q + "[" + std::to_string(j) + "]";
      out << " next(" << qj << ") := case\n";
      out << "  " << qj << "=FALSE & " << ans << " & " << ctr << "=" << j
          << " : TRUE;\n";
      out << "  " << qj << "=TRUE : FALSE;\n";
      out << "  TRUE : " << qj << ";\n esac;\n";
    }
  }
};

}  // namespace

SmvDocument emit_smv(const Sps& sps, const BoundProfile& bounds, const LtlPtr& phi) {
  if (bounds.alphabet != sps.alphabet) {
    throw EmissionError("bound profile computed for a different service alphabet");
  }
  for (const auto& t : sps.transitions) {
    if (t.action.kind == ActionKind::Tau) continue;
    if (bounds.n_of(t.action.type) < 1) {
      throw EmissionError("type '" + sps.alphabet.name(t.action.type) +
                          "' is used by the model but has bound 0");
    }
  }

  Emitter emitter{sps, bounds, sps.alphabet.size() == 1 && !sps.has_tau()};
  std::ostringstream out;
  emitter.emit(out, phi);

  SmvDocument document;
  document.text = out.str();

  document.manifest["at_bound"] = "freeze";
  document.manifest["loc"] = "server location over " +
                             std::to_string(sps.states.size()) + " states";
  if (emitter.needs_input()) {
    if (emitter.boolean_input) {
      document.manifest["ip"] = "input: TRUE=req(" + sps.alphabet.name(0) +
                                "), FALSE=ans(" + sps.alphabet.name(0) + ")";
    } else {
      document.manifest["act"] = "input over the extended alphabet";
    }
  }
  for (int i : emitter.active_types()) {
    std::string type = sps.alphabet.name(i);
    document.manifest[emitter.ctr_name(i)] =
        "active-client counter for type " + type + ", bound " +
        std::to_string(bounds.n_of(i));
    document.manifest[emitter.array_name('p', i)] =
        "request flags for type " + type + ", slots 1.." +
        std::to_string(bounds.n_of(i));
    document.manifest[emitter.array_name('q', i)] =
        "answer flags for type " + type + ", slots 1.." +
        std::to_string(bounds.n_of(i)) + " (one-instant pulse)";
  }

  auto problems = validate_smv(document.text);
  if (has_errors(problems)) {
    throw EmissionError("emitted document failed validation: " + problems[0].message);
  }
  return document;
}

// ---------------------------------------------------------------------------
// Minimal validator for the emitted subset.
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
};

struct Lexer {
  const std::string& src;
  size_t at = 0;
  int line = 1;

  Token next() {
    while (at < src.size()) {
      char c = src[at];
      if (c == '\n') {
        ++line;
        ++at;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++at;
      } else if (c == '-' && at + 1 < src.size() && src[at + 1] == '-') {
        while (at < src.size() && src[at] != '\n') ++at;
      } else {
        break;
      }
    }
    if (at >= src.size()) return {Token::Kind::End, "", line};

    char c = src[at];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t begin = at;
      while (at < src.size() && (std::isalnum(static_cast<unsigned char>(src[at])) ||
                                 src[at] == '_')) {
        ++at;
      }
      return {Token::Kind::Ident, src.substr(begin, at - begin), line};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t begin = at;
      while (at < src.size() && std::isdigit(static_cast<unsigned char>(src[at]))) ++at;
      return {Token::Kind::Number, src.substr(begin, at - begin), line};
    }
    // Multi-character punctuation of the subset.
    for (const char* op : {":=", "..", "->", "<=", ">="}) {
      if (src.compare(at, 2, op) == 0) {
        at += 2;
        return {Token::Kind::Punct, op, line};
      }
    }
    ++at;
    return {Token::Kind::Punct, std::string(1, c), line};
  }
};

struct Validator {
  std::vector<Token> tokens;
  size_t at = 0;
  std::vector<Diagnostic> problems;
  std::map<std::string, std::pair<int, int>> arrays;  // name -> index range

  const Token& peek(int ahead = 0) const {
    size_t i = at + ahead;
    return i < tokens.size() ? tokens[i] : tokens.back();
  }
  bool done() const { return peek().kind == Token::Kind::End; }

  void fail(const std::string& message) {
    Span span;
    span.line = span.end_line = peek().line;
    problems.push_back({Diagnostic::Severity::Error, message, span});
  }

  bool accept(const std::string& text) {
    if (peek().text == text && peek().kind != Token::Kind::End) {
      ++at;
      return true;
    }
    return false;
  }

  bool expect(const std::string& text) {
    if (accept(text)) return true;
    fail("expected '" + text + "' but found '" + peek().text + "'");
    return false;
  }

  bool expect_ident(std::string* out = nullptr) {
    if (peek().kind == Token::Kind::Ident) {
      if (out) *out = peek().text;
      ++at;
      return true;
    }
    fail("expected an identifier but found '" + peek().text + "'");
    return false;
  }

  bool expect_number(int* out = nullptr) {
    if (peek().kind == Token::Kind::Number) {
      if (out) *out = std::stoi(peek().text);
      ++at;
      return true;
    }
    fail("expected a number but found '" + peek().text + "'");
    return false;
  }

  void check_array_access(const std::string& name, int index) {
    auto it = arrays.find(name);
    if (it == arrays.end()) {
      fail("access to undeclared array '" + name + "'");
      return;
    }
    if (index < it->second.first || index > it->second.second) {
      fail("array index " + std::to_string(index) + " outside " + name + "[" +
           std::to_string(it->second.first) + ".." + std::to_string(it->second.second) +
           "]");
    }
  }

  // lvalue := IDENT | IDENT '[' NUM ']'
  void lvalue() {
    std::string name;
    if (!expect_ident(&name)) return;
    if (accept("[")) {
      int index = 0;
      if (expect_number(&index)) check_array_access(name, index);
      expect("]");
    }
  }

  // Expression subset: atoms, comparisons, & | -> !, parentheses, sets,
  // temporal operators (as plain identifiers X/G/F/U are Idents; treated
  // via the generic expression structure below).
  void primary() {
    if (accept("(")) {
      expression();
      expect(")");
      return;
    }
    if (accept("{")) {
      do {
        if (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::Number) {
          ++at;
        } else {
          fail("expected a set member");
          return;
        }
      } while (accept(","));
      expect("}");
      return;
    }
    if (accept("!")) {
      primary();
      return;
    }
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) {
      // Unary temporal operators of the emitted LTL.
      if (t.text == "X" || t.text == "G" || t.text == "F") {
        ++at;
        primary();
        return;
      }
      std::string name = t.text;
      ++at;
      if (accept("[")) {
        int index = 0;
        if (expect_number(&index)) check_array_access(name, index);
        expect("]");
      }
      return;
    }
    if (t.kind == Token::Kind::Number) {
      ++at;
      return;
    }
    fail("expected an expression but found '" + t.text + "'");
    ++at;
  }

  void arithmetic() {
    primary();
    while (peek().text == "+" || peek().text == "-") {
      ++at;
      primary();
    }
  }

  void comparison() {
    arithmetic();
    while (peek().text == "=" || peek().text == "<" || peek().text == ">" ||
           peek().text == "<=" || peek().text == ">=") {
      ++at;
      arithmetic();
    }
  }

  void expression() {
    comparison();
    while (peek().text == "&" || peek().text == "|" || peek().text == "->" ||
           peek().text == "U") {
      ++at;
      comparison();
    }
  }

  void case_block() {
    expect("case");
    while (!done() && peek().text != "esac") {
      expression();
      expect(":");
      expression();
      expect(";");
    }
    expect("esac");
  }

  void var_decl() {
    std::string name;
    if (!expect_ident(&name)) return;
    expect(":");
    if (accept("boolean")) {
    } else if (accept("array")) {
      int lo = 0, hi = 0;
      expect_number(&lo);
      expect("..");
      expect_number(&hi);
      expect("of");
      expect("boolean");
      if (lo > hi) fail("empty array range for '" + name + "'");
      arrays[name] = {lo, hi};
    } else if (peek().kind == Token::Kind::Number) {
      int lo = 0, hi = 0;
      expect_number(&lo);
      expect("..");
      expect_number(&hi);
      if (lo > hi) fail("empty integer range for '" + name + "'");
    } else if (accept("{")) {
      do {
        if (!expect_ident()) return;
      } while (accept(","));
      expect("}");
    } else {
      fail("unsupported type for '" + name + "'");
    }
    expect(";");
  }

  void run() {
    expect("MODULE");
    expect_ident();
    while (!done()) {
      if (accept("IVAR") || accept("VAR")) {
        var_decl();
      } else if (accept("ASSIGN")) {
        while (peek().text == "init" || peek().text == "next") {
          bool is_next = peek().text == "next";
          ++at;
          expect("(");
          lvalue();
          expect(")");
          expect(":=");
          if (is_next && peek().text == "case") {
            case_block();
          } else {
            expression();
          }
          expect(";");
        }
      } else if (accept("LTLSPEC")) {
        expression();
      } else {
        fail("unexpected token '" + peek().text + "'");
        ++at;
      }
      if (problems.size() > 20) return;  // avoid error cascades
    }
  }
};

}  // namespace

std::vector<Diagnostic> validate_smv(const std::string& text) {
  Lexer lexer{text};
  Validator validator;
  for (Token t = lexer.next();; t = lexer.next()) {
    bool end = t.kind == Token::Kind::End;
    validator.tokens.push_back(std::move(t));
    if (end) break;
  }
  validator.run();
  return validator.problems;
}

}  // namespace spsmc
