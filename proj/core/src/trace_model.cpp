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
#include "spsmc/trace_model.hpp"

#include "spsmc/errors.hpp"

namespace spsmc {

int TraceModel::resolve(long long time) const {
  if (time < 0) throw EvalError("negative time index");
  long long n = static_cast<long long>(instants.size());
  if (time < n) return static_cast<int>(time);
  if (!loop_start.has_value()) {
    throw EvalError("finite model asked an infinite-horizon question");
  }
  long long m = *loop_start;
  long long p = n - m;
  return static_cast<int>(m + (time - m) % p);
}

void TraceModel::validate() const {
  int k = alphabet.size();
  if (instants.empty()) throw InputError("trace model must have at least one instant");
  if (loop_start.has_value() &&
      (*loop_start < 0 || *loop_start >= static_cast<int>(instants.size()))) {
    throw InputError("lasso loop start out of range");
  }
  for (const auto& instant : instants) {
    if (static_cast<int>(instant.domains.size()) != k ||
        static_cast<int>(instant.interp.size()) != k) {
      throw InputError("trace instant has wrong number of per-type entries");
    }
    for (int i = 0; i < k; ++i) {
      for (const auto& [client, props] : instant.interp[i]) {
        if (!instant.domains[i].count(client)) {
          throw InputError("interpretation defined outside the domain");
        }
        (void)props;
      }
    }
  }
}

bool eval_mfo(const TraceModel& model, const Valuation& pi, long long time,
              const MfoPtr& formula) {
  int node = model.resolve(time);
  const TraceInstant& instant = model.instants[node];
  using Kind = MfoFormula::Kind;
  switch (formula->kind) {
    case Kind::Pred: {
      auto it = pi.find(formula->var);
      if (it == pi.end()) {
        throw EvalError("unbound variable '" + formula->var + "'");
      }
      const ClientRef& ref = it->second;
      if (!instant.domains[ref.type].count(ref.index)) return false;
      auto props = instant.interp[ref.type].find(ref.index);
      if (props == instant.interp[ref.type].end()) return false;
      return props->second.count(formula->pred) > 0;
    }
    case Kind::Eq: {
      auto a = pi.find(formula->var);
      auto b = pi.find(formula->var2);
      if (a == pi.end() || b == pi.end()) {
        throw EvalError("unbound variable in equality");
      }
      return a->second == b->second;
    }
    case Kind::Not:
      return !eval_mfo(model, pi, time, formula->lhs);
    case Kind::Or:
      return eval_mfo(model, pi, time, formula->lhs) ||
             eval_mfo(model, pi, time, formula->rhs);
    case Kind::Exists: {
      int type = model.alphabet.require(formula->type);
      for (int client : instant.domains[type]) {
        Valuation extended = pi;
        extended[formula->var] = ClientRef{type, client};
        if (eval_mfo(model, extended, time, formula->lhs)) return true;
      }
      return false;
    }
  }
  throw EvalError("corrupt formula node");
}

namespace {

// Lasso evaluation works on instant indices with the wrap-around successor;
// from any position at most stem+cycle steps reach every position, so an
// Until witness search can stop after that many steps.
int successor(const TraceModel& model, int node) {
  int n = static_cast<int>(model.instants.size());
  if (node + 1 < n) return node + 1;
  return *model.loop_start;
}

struct MfstlEval {
  const TraceModel& model;
  std::map<std::pair<const MfstlFormula*, int>, bool> memo;

  bool eval(const MfstlPtr& f, int node) {
    auto key = std::make_pair(f.get(), node);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    bool value = compute(f, node);
    memo.emplace(key, value);
    return value;
  }

  bool compute(const MfstlPtr& f, int node) {
    using Kind = MfstlFormula::Kind;
    switch (f->kind) {
      case Kind::True:
        return true;
      case Kind::ServerProp:
        return model.instants[node].server_props.count(f->prop) > 0;
      case Kind::Sentence:
        return eval_mfo(model, {}, node, f->sentence);
      case Kind::Not:
        return !eval(f->lhs, node);
      case Kind::Or:
        return eval(f->lhs, node) || eval(f->rhs, node);
      case Kind::Next:
        return eval(f->lhs, successor(model, node));
      case Kind::Until: {
        int horizon = static_cast<int>(model.instants.size());
        int at = node;
        for (int step = 0; step <= horizon; ++step) {
          if (eval(f->rhs, at)) return true;
          if (!eval(f->lhs, at)) return false;
          at = successor(model, at);
        }
        return false;
      }
    }
    throw EvalError("corrupt formula node");
  }
};

}  // namespace

bool eval_mfstl(const TraceModel& model, long long time, const MfstlPtr& formula) {
  model.validate();
  if (!model.is_lasso()) {
    if (has_until(formula)) {
      throw EvalError("finite model asked an infinite-horizon question");
    }
    // Finite prefix: direct recursion; Next past the end raises EvalError
    // through resolve().
    using Kind = MfstlFormula::Kind;
    int node = model.resolve(time);
    switch (formula->kind) {
      case Kind::True:
        return true;
      case Kind::ServerProp:
        return model.instants[node].server_props.count(formula->prop) > 0;
      case Kind::Sentence:
        return eval_mfo(model, {}, node, formula->sentence);
      case Kind::Not:
        return !eval_mfstl(model, time, formula->lhs);
      case Kind::Or:
        return eval_mfstl(model, time, formula->lhs) ||
               eval_mfstl(model, time, formula->rhs);
      case Kind::Next:
        return eval_mfstl(model, time + 1, formula->lhs);
      case Kind::Until:
        break;  // unreachable, excluded above
    }
    throw EvalError("corrupt formula node");
  }
  MfstlEval evaluator{model, {}};
  return evaluator.eval(formula, model.resolve(time));
}

}  // namespace spsmc
