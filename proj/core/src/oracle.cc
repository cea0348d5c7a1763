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

#include "hybridsat/oracle.h"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hybridsat/error.h"
#include "minisat/core/Solver.h"

namespace hybridsat {
namespace {

struct CNode {
  NodeKind kind;
  AtomKind atom_kind = AtomKind::kProposition;
  int id = -1;  // proposition, nominal or variable index
  BoolFun fun;
  std::vector<int> kids;
  std::vector<int> free_vars;
};

struct Compiled {
  std::vector<CNode> nodes;
  int root = -1;
  std::vector<std::string> props, noms, vars;
  std::vector<int> free_vars;

  explicit Compiled(const Formula& phi) {
    for (const auto& p : Propositions(phi)) props.push_back(p);
    for (const auto& i : Nominals(phi)) noms.push_back(i);
    for (const auto& x : VariableNames(phi)) vars.push_back(x);
    for (const auto& x : FreeVariables(phi)) free_vars.push_back(VarId(x));
    root = Add(phi);
  }

  int VarId(const std::string& name) const {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), name) - vars.begin());
  }

  int IdOf(const Atom& a) const {
    const std::vector<std::string>& names =
        a.kind == AtomKind::kProposition ? props
        : a.kind == AtomKind::kNominal   ? noms
                                         : vars;
    return static_cast<int>(std::lower_bound(names.begin(), names.end(), a.name) -
                            names.begin());
  }

  int Add(const Formula& phi) {
    CNode node;
    node.kind = phi.kind();
    std::vector<int> fv;
    switch (phi.kind()) {
      case NodeKind::kAtom:
        node.atom_kind = phi.atom().kind;
        node.id = IdOf(phi.atom());
        if (node.atom_kind == AtomKind::kStateVar) fv.push_back(node.id);
        break;
      case NodeKind::kApply:
        node.fun = phi.fun();
        for (const Formula& a : phi.args()) {
          const int k = Add(a);
          node.kids.push_back(k);
          fv.insert(fv.end(), nodes[k].free_vars.begin(), nodes[k].free_vars.end());
        }
        break;
      case NodeKind::kDia:
      case NodeKind::kBox: {
        const int k = Add(phi.body());
        node.kids.push_back(k);
        fv = nodes[k].free_vars;
        break;
      }
      case NodeKind::kDown: {
        node.id = IdOf(phi.atom());
        const int k = Add(phi.body());
        node.kids.push_back(k);
        for (int v : nodes[k].free_vars) {
          if (v != node.id) fv.push_back(v);
        }
        break;
      }
      case NodeKind::kAt: {
        node.atom_kind = phi.atom().kind;
        node.id = IdOf(phi.atom());
        const int k = Add(phi.body());
        node.kids.push_back(k);
        fv = nodes[k].free_vars;
        if (node.atom_kind == AtomKind::kStateVar) fv.push_back(node.id);
        break;
      }
    }
    std::sort(fv.begin(), fv.end());
    fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
    node.free_vars = std::move(fv);
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }
};

// CNF encoding of "phi holds at state 0" over models with exactly n states,
// for fixed positions of nominals and free variables.
class Search {
 public:
  Search(const Compiled& c, FrameClass f, int n, const std::vector<int>& nom_pos,
         const std::vector<int>& free_pos)
      : c_(c), f_(f), n_(n), nom_pos_(nom_pos), memo_(c.nodes.size()) {
    env_.assign(c_.vars.size(), -1);
    for (std::size_t k = 0; k < c_.free_vars.size(); ++k) env_[c_.free_vars[k]] = free_pos[k];
    true_ = Minisat::mkLit(solver_.newVar());
    solver_.addClause(true_);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) edge_.push_back(Minisat::mkLit(solver_.newVar()));
    }
    for (std::size_t p = 0; p < c_.props.size() * n_; ++p) {
      label_.push_back(Minisat::mkLit(solver_.newVar()));
    }
    Frame();
  }

  std::optional<Witness> Run() {
    solver_.addClause(Encode(c_.root, 0));
    if (!solver_.okay() || !solver_.solve()) return std::nullopt;
    Witness w{KripkeModel(n_), {}, 0};
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (Value(Edge(a, b))) w.model.AddEdge(a, b);
      }
    }
    for (std::size_t p = 0; p < c_.props.size(); ++p) {
      std::set<State> states;
      for (int s = 0; s < n_; ++s) {
        if (Value(label_[p * n_ + s])) states.insert(s);
      }
      w.model.SetProposition(c_.props[p], std::move(states));
    }
    for (std::size_t i = 0; i < c_.noms.size(); ++i) w.model.SetNominal(c_.noms[i], nom_pos_[i]);
    for (int x : c_.free_vars) w.assignment[c_.vars[x]] = env_[x];
    return w;
  }

 private:
  using Lit = Minisat::Lit;

  Lit Edge(int a, int b) const { return edge_[a * n_ + b]; }
  Lit Const(bool v) const { return v ? true_ : ~true_; }
  bool Value(Lit l) const { return solver_.modelValue(l) == Minisat::l_True; }
  Lit Fresh() { return Minisat::mkLit(solver_.newVar()); }
  void Clause(std::initializer_list<Lit> lits) {
    Minisat::vec<Lit> v;
    for (Lit l : lits) v.push(l);
    solver_.addClause(v);
  }

  void Frame() {
    if (f_ == FrameClass::kTotal) {
      for (int a = 0; a < n_; ++a) {
        Minisat::vec<Lit> some;
        for (int b = 0; b < n_; ++b) some.push(Edge(a, b));
        solver_.addClause(some);
      }
    }
    if (f_ == FrameClass::kER) {
      for (int a = 0; a < n_; ++a) {
        solver_.addClause(Edge(a, a));
        for (int b = 0; b < n_; ++b) Clause({~Edge(a, b), Edge(b, a)});
      }
    }
    if (f_ == FrameClass::kTrans || f_ == FrameClass::kER) {
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
          for (int c = 0; c < n_; ++c) Clause({~Edge(a, b), ~Edge(b, c), Edge(a, c)});
        }
      }
    }
  }

  // g <-> OR of terms (dia) or g <-> AND of terms (box, passed negated).
  Lit Disjunction(const std::vector<Lit>& terms) {
    const Lit g = Fresh();
    Minisat::vec<Lit> big;
    big.push(~g);
    for (Lit t : terms) {
      big.push(t);
      Clause({~t, g});
    }
    solver_.addClause(big);
    return g;
  }

  Lit Encode(int id, int s) {
    const CNode& node = c_.nodes[id];
    std::uint64_t key = s;
    for (int v : node.free_vars) key = key * (n_ + 1) + static_cast<std::uint64_t>(env_[v] + 1);
    if (auto it = memo_[id].find(key); it != memo_[id].end()) return it->second;
    const Lit out = Compute(node, s);
    memo_[id].emplace(key, out);
    return out;
  }

  Lit Compute(const CNode& node, int s) {
    switch (node.kind) {
      case NodeKind::kAtom:
        if (node.atom_kind == AtomKind::kProposition) return label_[node.id * n_ + s];
        if (node.atom_kind == AtomKind::kNominal) return Const(nom_pos_[node.id] == s);
        return Const(env_[node.id] == s);
      case NodeKind::kApply: {
        const int k = static_cast<int>(node.kids.size());
        std::vector<Lit> kids;
        for (int kid : node.kids) kids.push_back(Encode(kid, s));
        const Lit g = Fresh();
        for (std::uint32_t row = 0; row < static_cast<std::uint32_t>(node.fun.rows()); ++row) {
          Minisat::vec<Lit> clause;
          for (int i = 0; i < k; ++i) {
            const bool bit = row & (1u << (k - 1 - i));
            clause.push(bit ? ~kids[i] : kids[i]);
          }
          clause.push(node.fun.at(row) ? g : ~g);
          solver_.addClause(clause);
        }
        return g;
      }
      case NodeKind::kDia:
      case NodeKind::kBox: {
        const bool dia = node.kind == NodeKind::kDia;
        std::vector<Lit> terms;
        for (int v = 0; v < n_; ++v) {
          const Lit body = Encode(node.kids[0], v);
          const Lit t = Fresh();
          // t <-> edge and (body or its negation for box).
          const Lit b = dia ? body : ~body;
          Clause({~t, Edge(s, v)});
          Clause({~t, b});
          Clause({t, ~Edge(s, v), ~b});
          terms.push_back(t);
        }
        const Lit g = Disjunction(terms);
        return dia ? g : ~g;
      }
      case NodeKind::kDown: {
        const int saved = env_[node.id];
        env_[node.id] = s;
        const Lit out = Encode(node.kids[0], s);
        env_[node.id] = saved;
        return out;
      }
      case NodeKind::kAt: {
        const int target =
            node.atom_kind == AtomKind::kNominal ? nom_pos_[node.id] : env_[node.id];
        return Encode(node.kids[0], target);
      }
    }
    return Const(false);
  }

  const Compiled& c_;
  FrameClass f_;
  int n_;
  std::vector<int> nom_pos_, env_;
  Minisat::Solver solver_;
  Lit true_;
  std::vector<Lit> edge_, label_;
  std::vector<std::unordered_map<std::uint64_t, Lit>> memo_;
};

// Nominals and free variables take states 0..n-1 in canonical order: each
// new position is at most one past the largest used so far (state 0 is the
// evaluation state).
std::optional<Witness> Positions(const Compiled& c, FrameClass f, int n, std::vector<int>& pos,
                                 std::size_t i, int used) {
  if (i == pos.size()) {
    const std::vector<int> noms(pos.begin(), pos.begin() + c.noms.size());
    const std::vector<int> free(pos.begin() + c.noms.size(), pos.end());
    return Search(c, f, n, noms, free).Run();
  }
  const int limit = std::min(used + 1, n - 1);
  for (int p = 0; p <= limit; ++p) {
    pos[i] = p;
    if (auto w = Positions(c, f, n, pos, i + 1, std::max(used, p))) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> SatBounded(const Formula& phi, FrameClass f, int max_states) {
  if (max_states < 1) throw PreconditionError("bound must be at least 1");
  if (max_states > 16) throw PreconditionError("bound above 16 is not supported");
  const Compiled compiled(phi);
  std::vector<int> pos(compiled.noms.size() + compiled.free_vars.size(), 0);
  std::optional<Witness> w;
  for (int n : {std::min(2, max_states), max_states}) {
    if (!w) w = Positions(compiled, f, n, pos, 0, 0);
  }
  if (w && (!FrameSatisfies(w->model, f) || !Check(w->model, w->assignment, w->state, phi))) {
    throw std::logic_error("bounded search produced an invalid witness");
  }
  return w;
}

std::optional<Witness> SatExhaustive(const Formula& phi, FrameClass f, int max_states) {
  if (max_states < 1) throw PreconditionError("bound must be at least 1");
  const AtomSets atoms = AtomsOf(phi);
  const std::set<std::string> free = FreeVariables(phi);
  const std::vector<std::string> vars(free.begin(), free.end());
  for (int n = 1; n <= max_states; ++n) {
    std::optional<Witness> found;
    EnumerateModels(atoms, n, f, [&](const KripkeModel& k) {
      std::vector<int> values(vars.size(), 0);
      while (true) {
        Assignment g;
        for (std::size_t i = 0; i < vars.size(); ++i) g[vars[i]] = values[i];
        for (State w = 0; w < n; ++w) {
          if (Check(k, g, w, phi)) {
            found = Witness{k, g, w};
            return false;
          }
        }
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == n) values[i++] = 0;
        if (i == values.size()) break;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace hybridsat
