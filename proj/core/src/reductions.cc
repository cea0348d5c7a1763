// Copyright 2026 The hybridsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hybridsat/reductions.h"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hybridsat/error.h"

namespace hybridsat {
namespace {

std::string V(int i) { return "v" + std::to_string(i); }
std::string X(int i) { return "x" + std::to_string(i); }

Formula AndAll(const std::vector<Formula>& parts) {
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::And(out, parts[i]);
  return out;
}

Formula OrAll(const std::vector<Formula>& parts) {
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::Or(out, parts[i]);
  return out;
}

// α^n as a list of (k, l) steps: @v_k ↓v_l for (k, l) in S with l != s.
std::vector<std::pair<int, int>> Alpha(const OrdInstance& inst) {
  std::vector<std::pair<int, int>> one, all;
  for (auto [k, l] : inst.succ) {
    if (l != inst.s) one.emplace_back(k, l);
  }
  for (int r = 0; r < inst.n; ++r) all.insert(all.end(), one.begin(), one.end());
  return all;
}

Formula WrapAlpha(const std::vector<std::pair<int, int>>& alpha, Formula tail) {
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
    tail = Formula::At(Atom::Var(V(it->first)), Formula::Down(V(it->second), tail));
  }
  return tail;
}

void CheckVertex(int v, int n, const char* what) {
  if (v < 1 || v > n) throw PreconditionError(std::string(what) + " out of range");
}

std::map<std::string, std::string> KeyValues(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + token + "'", 0);
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return kv;
}

int ToInt(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError("bad integer '" + s + "'", 0);
  return v;
}

std::vector<std::pair<int, int>> Pairs(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("bad pair '" + item + "'", 0);
    out.emplace_back(ToInt(item.substr(0, dash)), ToInt(item.substr(dash + 1)));
  }
  return out;
}

}  // namespace

void Validate(const OrdInstance& inst) {
  if (inst.n < 1) throw PreconditionError("ORD instance needs a vertex");
  CheckVertex(inst.s, inst.n, "s");
  CheckVertex(inst.t, inst.n, "t");
  if (static_cast<int>(inst.succ.size()) != inst.n - 1) {
    throw PreconditionError("successor relation must have n-1 pairs");
  }
  std::map<int, int> next;
  std::set<int> has_pred;
  for (auto [a, b] : inst.succ) {
    CheckVertex(a, inst.n, "vertex");
    CheckVertex(b, inst.n, "vertex");
    if (next.contains(a) || has_pred.contains(b) || a == b) {
      throw PreconditionError("successor relation is not a path");
    }
    next[a] = b;
    has_pred.insert(b);
  }
  int start = 0;
  for (int v = 1; v <= inst.n; ++v) {
    if (!has_pred.contains(v)) start = v;
  }
  int seen = 0;
  for (int v = start; v != 0; v = next.contains(v) ? next[v] : 0) ++seen;
  if (seen != inst.n) throw PreconditionError("successor relation is not a path");
}

bool OrdHolds(const OrdInstance& inst) {
  Validate(inst);
  std::map<int, int> next(inst.succ.begin(), inst.succ.end());
  for (int v = inst.s;; v = next[v]) {
    if (v == inst.t) return true;
    if (!next.contains(v)) return false;
  }
}

Formula GenOrd(const OrdInstance& inst) {
  Validate(inst);
  Formula phi = WrapAlpha(Alpha(inst), Formula::At(Atom::Var(V(inst.t)),
                                                   Formula::Box(Formula::Constant(false))));
  phi = Formula::Dia(Formula::Down(V(inst.s), phi));
  for (int i = inst.n; i >= 1; --i) phi = Formula::Down(V(i), phi);
  return phi;
}

Formula GenOrdNeg(const OrdInstance& inst) {
  Validate(inst);
  Formula phi = WrapAlpha(Alpha(inst), Formula::At(Atom::Var(V(inst.s)),
                                                   Formula::Negate(Formula::Var(V(inst.t)))));
  for (int i = inst.n; i >= 1; --i) {
    phi = Formula::Down(V(i), phi);
    if (i > 1) phi = Formula::Dia(phi);
  }
  return phi;
}

void Validate(const QbfInstance& inst) {
  if (inst.universal.empty()) throw PreconditionError("QBF needs a quantified variable");
  for (std::size_t i = 0; i < inst.universal.size(); ++i) {
    if (inst.universal[i] != (i % 2 == 1)) {
      throw PreconditionError("QBF prefix must alternate starting with exists");
    }
  }
  if (inst.clauses.empty()) throw PreconditionError("QBF needs a clause");
  const int n = static_cast<int>(inst.universal.size());
  for (const auto& c : inst.clauses) {
    if (c.empty()) throw PreconditionError("empty clause");
    for (int lit : c) {
      if (lit == 0 || lit > n || -lit > n) throw PreconditionError("literal out of range");
    }
  }
}

bool QbfHolds(const QbfInstance& inst) {
  Validate(inst);
  const int n = static_cast<int>(inst.universal.size());
  std::vector<bool> value(n + 1, false);
  std::function<bool(int)> eval = [&](int i) -> bool {
    if (i > n) {
      for (const auto& c : inst.clauses) {
        bool sat = false;
        for (int lit : c) sat = sat || (lit > 0 ? value[lit] : !value[-lit]);
        if (!sat) return false;
      }
      return true;
    }
    bool results[2];
    for (int b = 0; b < 2; ++b) {
      value[i] = b;
      results[b] = eval(i + 1);
    }
    return inst.universal[i - 1] ? results[0] && results[1] : results[0] || results[1];
  };
  return eval(1);
}

Formula GenQbf(const QbfInstance& inst) {
  Validate(inst);
  const Atom s = Atom::Nom("s");
  const Formula one = Formula::Constant(true);
  const Formula zero = Formula::Constant(false);
  std::vector<Formula> clauses;
  for (const auto& c : inst.clauses) {
    std::vector<Formula> lits;
    for (int lit : c) {
      const Atom x = Atom::Var(X(lit > 0 ? lit : -lit));
      lits.push_back(lit > 0 ? Formula::At(x, Formula::Dia(one)) : Formula::At(x, Formula::Box(zero)));
    }
    clauses.push_back(OrAll(lits));
  }
  Formula body = AndAll(clauses);
  for (int i = static_cast<int>(inst.universal.size()); i >= 1; --i) {
    body = Formula::Down(X(i), body);
    body = inst.universal[i - 1] ? Formula::Box(body) : Formula::Dia(body);
    body = Formula::At(s, body);
  }
  return AndAll({Formula::At(s, Formula::Dia(Formula::Dia(one))),
                 Formula::At(s, Formula::Dia(Formula::Box(zero))), body});
}

QbfInstance ParseQdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<bool, int>> prefix;  // (universal, input variable)
  std::vector<std::vector<int>> clauses;
  std::set<int> quantified, mentioned;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") continue;
    std::vector<int> values;
    const bool quant = head == "e" || head == "a";
    if (!quant) values.push_back(ToInt(head));
    std::string tok;
    while (ls >> tok) values.push_back(ToInt(tok));
    if (values.empty() || values.back() != 0) throw ParseError("line must end with 0", 0);
    values.pop_back();
    if (quant) {
      for (int v : values) {
        if (v <= 0 || !quantified.insert(v).second) throw ParseError("bad quantified variable", 0);
        prefix.emplace_back(head == "a", v);
      }
    } else {
      if (values.empty()) throw ParseError("empty clause", 0);
      for (int lit : values) mentioned.insert(lit > 0 ? lit : -lit);
      clauses.push_back(values);
    }
  }
  std::vector<std::pair<bool, int>> full;
  for (int v : mentioned) {
    if (!quantified.contains(v)) full.emplace_back(false, v);
  }
  full.insert(full.end(), prefix.begin(), prefix.end());

  QbfInstance inst;
  std::map<int, int> position;
  for (auto [universal, v] : full) {
    // Pad with an unused variable of the missing quantifier.
    if (universal != (inst.universal.size() % 2 == 1)) inst.universal.push_back(!universal);
    inst.universal.push_back(universal);
    position[v] = static_cast<int>(inst.universal.size());
  }
  for (auto& c : clauses) {
    for (int& lit : c) lit = lit > 0 ? position.at(lit) : -position.at(-lit);
  }
  inst.clauses = std::move(clauses);
  Validate(inst);
  return inst;
}

void Validate(const DagInstance& inst) {
  if (inst.n < 1) throw PreconditionError("DAG needs a vertex");
  CheckVertex(inst.s, inst.n, "s");
  CheckVertex(inst.t, inst.n, "t");
  for (auto [a, b] : inst.edges) {
    CheckVertex(a, inst.n, "vertex");
    CheckVertex(b, inst.n, "vertex");
  }
  // Kahn's algorithm.
  std::vector<int> indegree(inst.n + 1, 0);
  for (auto [a, b] : inst.edges) ++indegree[b];
  std::vector<int> ready;
  for (int v = 1; v <= inst.n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (auto [a, b] : inst.edges) {
      if (a == v && --indegree[b] == 0) ready.push_back(b);
    }
  }
  if (removed != inst.n) throw PreconditionError("graph has a cycle");
}

bool Reachable(const DagInstance& inst) {
  Validate(inst);
  std::vector<bool> seen(inst.n + 1, false);
  std::vector<int> stack = {inst.s};
  seen[inst.s] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : inst.edges) {
      if (a == v && !seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return seen[inst.t];
}

Formula GenUnreach(const DagInstance& inst) {
  Validate(inst);
  const Formula one = Formula::Constant(true);
  Formula dias = one;
  for (int i = 0; i < inst.n; ++i) dias = Formula::Dia(dias);
  Formula boxes = Formula::Constant(false);
  for (int i = 0; i <= inst.n; ++i) boxes = Formula::Box(boxes);
  const Formula phi1 = Formula::And(dias, boxes);

  std::vector<Formula> conj;
  auto step = [](int i, int j) {
    return Formula::At(Atom::Var(X(i)), Formula::Dia(Formula::Var(X(j))));
  };
  for (auto [i, j] : inst.edges) conj.push_back(step(i, j));
  conj.push_back(step(inst.t, inst.s));
  Formula phi2 = AndAll(conj);
  for (int i = inst.n; i >= 1; --i) {
    phi2 = Formula::At(Atom::Var("r"), Formula::Dia(Formula::Down(X(i), phi2)));
  }
  phi2 = Formula::Down("r", phi2);
  return Formula::And(phi1, phi2);
}

Formula GenParity(std::string_view bits) {
  Formula phi = Formula::Var("x");
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it == '1') {
      phi = Formula::Negate(phi);
    } else if (*it != '0') {
      throw PreconditionError("parity input must be a 0/1 string");
    }
  }
  return Formula::Down("x", phi);
}

Formula Totalize(const Formula& phi) {
  const std::set<BoolFun> allowed = {fn::And(), fn::Or(), fn::Not(), fn::Zero(), fn::One()};
  for (const BoolFun& f : FunctionsUsed(phi)) {
    if (!allowed.contains(f)) throw PreconditionError("totalize needs connectives in {and, or, not, 0, 1}");
  }
  FreshNames fresh;
  fresh.Reserve(phi);
  const Formula p = Formula::Prop(fresh.Next());
  // pos: even number of enclosing negations. Under a negation @t takes the
  // dual form, as if the input were first put in negation normal form.
  std::function<Formula(const Formula&, bool)> r = [&](const Formula& f, bool pos) -> Formula {
    switch (f.kind()) {
      case NodeKind::kAtom:
        return f;
      case NodeKind::kApply: {
        const bool flip = f.fun() == fn::Not();
        std::vector<Formula> args;
        for (const Formula& a : f.args()) args.push_back(r(a, flip ? !pos : pos));
        return Formula::Apply(f.fun(), std::move(args));
      }
      case NodeKind::kDia:
        return Formula::Dia(Formula::And(p, r(f.body(), pos)));
      case NodeKind::kBox:
        return Formula::Box(Formula::Or(Formula::Negate(p), r(f.body(), pos)));
      case NodeKind::kDown:
        return Formula::Down(f.var(), r(f.body(), pos));
      case NodeKind::kAt:
        return Formula::At(f.atom(), pos ? Formula::And(p, r(f.body(), pos))
                                         : Formula::Or(Formula::Negate(p), r(f.body(), pos)));
    }
    return f;
  };
  return r(phi, true);
}

OrdInstance ParseOrd(std::string_view text) {
  auto kv = KeyValues(text);
  OrdInstance inst;
  if (!kv.contains("n") || !kv.contains("s") || !kv.contains("t")) {
    throw ParseError("ORD instance needs n, s and t", 0);
  }
  inst.n = ToInt(kv["n"]);
  inst.s = ToInt(kv["s"]);
  inst.t = ToInt(kv["t"]);
  inst.succ = Pairs(kv["succ"]);
  Validate(inst);
  return inst;
}

DagInstance ParseDag(std::string_view text) {
  auto kv = KeyValues(text);
  DagInstance inst;
  if (!kv.contains("n") || !kv.contains("s") || !kv.contains("t")) {
    throw ParseError("DAG instance needs n, s and t", 0);
  }
  inst.n = ToInt(kv["n"]);
  inst.s = ToInt(kv["s"]);
  inst.t = ToInt(kv["t"]);
  inst.edges = Pairs(kv["edges"]);
  Validate(inst);
  return inst;
}

}  // namespace hybridsat
