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

#include "hybridsat/kripke.h"

#include <algorithm>

#include "hybridsat/error.h"

namespace hybridsat {

std::string_view FrameClassName(FrameClass f) {
  switch (f) {
    case FrameClass::kAll: return "all";
    case FrameClass::kTrans: return "trans";
    case FrameClass::kTotal: return "total";
    case FrameClass::kER: return "er";
  }
  return "?";
}

FrameClass ParseFrameClass(std::string_view text) {
  for (FrameClass f : AllFrameClasses()) {
    if (FrameClassName(f) == text) return f;
  }
  throw ParseError("unknown frame class '" + std::string(text) + "'", 0);
}

const std::vector<FrameClass>& AllFrameClasses() {
  static const std::vector<FrameClass> all = {FrameClass::kAll, FrameClass::kTrans,
                                              FrameClass::kTotal, FrameClass::kER};
  return all;
}

KripkeModel::KripkeModel(int size) {
  for (int i = 0; i < size; ++i) names_.push_back("w" + std::to_string(i));
  rel_.assign(static_cast<std::size_t>(size) * size, 0);
}

KripkeModel::KripkeModel(std::vector<std::string> state_names)
    : names_(std::move(state_names)) {
  rel_.assign(names_.size() * names_.size(), 0);
}

std::optional<State> KripkeModel::FindState(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<State>(it - names_.begin());
}

void KripkeModel::AddEdge(State from, State to) { rel_[from * size() + to] = 1; }
void KripkeModel::RemoveEdge(State from, State to) { rel_[from * size() + to] = 0; }

std::vector<State> KripkeModel::Successors(State s) const {
  std::vector<State> out;
  for (State t = 0; t < size(); ++t) {
    if (HasEdge(s, t)) out.push_back(t);
  }
  return out;
}

std::vector<std::pair<State, State>> KripkeModel::Edges() const {
  std::vector<std::pair<State, State>> out;
  for (State s = 0; s < size(); ++s) {
    for (State t = 0; t < size(); ++t) {
      if (HasEdge(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

void KripkeModel::SetProposition(const std::string& name, std::set<State> states) {
  props_[name] = std::move(states);
}

void KripkeModel::SetNominal(const std::string& name, State state) { noms_[name] = state; }

bool KripkeModel::PropHolds(const std::string& name, State s) const {
  auto it = props_.find(name);
  return it != props_.end() && it->second.contains(s);
}

std::optional<State> KripkeModel::NominalState(const std::string& name) const {
  auto it = noms_.find(name);
  if (it == noms_.end()) return std::nullopt;
  return it->second;
}

namespace {

State Resolve(const KripkeModel& k, const Assignment& g, const Atom& t) {
  if (t.kind == AtomKind::kStateVar) {
    auto it = g.find(t.name);
    if (it == g.end()) throw SemanticError("unbound state variable '" + t.name + "'");
    return it->second;
  }
  auto s = k.NominalState(t.name);
  if (!s) throw SemanticError("unlabeled nominal '" + t.name + "'");
  return *s;
}

bool Sat(const KripkeModel& k, Assignment& g, State w, const Formula& phi) {
  switch (phi.kind()) {
    case NodeKind::kAtom: {
      const Atom& a = phi.atom();
      if (a.kind == AtomKind::kProposition) return k.PropHolds(a.name, w);
      return Resolve(k, g, a) == w;
    }
    case NodeKind::kApply: {
      std::vector<char> values;
      for (const Formula& arg : phi.args()) values.push_back(Sat(k, g, w, arg));
      std::uint32_t row = 0;
      for (char v : values) row = (row << 1) | (v ? 1u : 0u);
      return phi.fun().at(row);
    }
    case NodeKind::kDia:
      for (State v = 0; v < k.size(); ++v) {
        if (k.HasEdge(w, v) && Sat(k, g, v, phi.body())) return true;
      }
      return false;
    case NodeKind::kBox:
      for (State v = 0; v < k.size(); ++v) {
        if (k.HasEdge(w, v) && !Sat(k, g, v, phi.body())) return false;
      }
      return true;
    case NodeKind::kDown: {
      auto it = g.find(phi.var());
      std::optional<State> saved;
      if (it != g.end()) saved = it->second;
      g[phi.var()] = w;
      const bool result = Sat(k, g, w, phi.body());
      if (saved) {
        g[phi.var()] = *saved;
      } else {
        g.erase(phi.var());
      }
      return result;
    }
    case NodeKind::kAt:
      return Sat(k, g, Resolve(k, g, phi.atom()), phi.body());
  }
  return false;
}

}  // namespace

bool Check(const KripkeModel& k, const Assignment& g, State w, const Formula& phi) {
  if (w < 0 || w >= k.size()) throw SemanticError("evaluation state out of range");
  for (const auto& [name, s] : g) {
    if (s < 0 || s >= k.size()) throw SemanticError("variable '" + name + "' out of range");
  }
  Assignment local = g;
  return Sat(k, local, w, phi);
}

bool FrameSatisfies(const KripkeModel& k, FrameClass f) {
  const int n = k.size();
  auto transitive = [&] {
    for (State a = 0; a < n; ++a)
      for (State b = 0; b < n; ++b)
        if (k.HasEdge(a, b))
          for (State c = 0; c < n; ++c)
            if (k.HasEdge(b, c) && !k.HasEdge(a, c)) return false;
    return true;
  };
  switch (f) {
    case FrameClass::kAll:
      return true;
    case FrameClass::kTrans:
      return transitive();
    case FrameClass::kTotal:
      for (State a = 0; a < n; ++a) {
        if (k.Successors(a).empty()) return false;
      }
      return true;
    case FrameClass::kER:
      for (State a = 0; a < n; ++a) {
        if (!k.HasEdge(a, a)) return false;
        for (State b = 0; b < n; ++b) {
          if (k.HasEdge(a, b) != k.HasEdge(b, a)) return false;
        }
      }
      return transitive();
  }
  return false;
}

AtomSets AtomsOf(const Formula& phi) {
  AtomSets atoms;
  for (const auto& p : Propositions(phi)) atoms.propositions.push_back(p);
  for (const auto& i : Nominals(phi)) atoms.nominals.push_back(i);
  return atoms;
}

namespace {

// Restricted-growth strings of length n, i.e. set partitions.
void Partitions(int n, std::vector<int>& block, int i, int max_block,
                const std::function<bool(const std::vector<int>&)>& visit, bool& go) {
  if (!go) return;
  if (i == n) {
    go = visit(block);
    return;
  }
  for (int b = 0; b <= max_block + 1 && go; ++b) {
    block[i] = b;
    Partitions(n, block, i + 1, std::max(max_block, b), visit, go);
  }
}

bool Labelings(KripkeModel& k, const AtomSets& atoms, std::size_t index,
               const std::function<bool(const KripkeModel&)>& visit) {
  const int n = k.size();
  const std::size_t props = atoms.propositions.size();
  if (index < props) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::set<State> states;
      for (State s = 0; s < n; ++s) {
        if (mask & (1u << s)) states.insert(s);
      }
      k.SetProposition(atoms.propositions[index], std::move(states));
      if (!Labelings(k, atoms, index + 1, visit)) return false;
    }
    return true;
  }
  if (index < props + atoms.nominals.size()) {
    for (State s = 0; s < n; ++s) {
      k.SetNominal(atoms.nominals[index - props], s);
      if (!Labelings(k, atoms, index + 1, visit)) return false;
    }
    return true;
  }
  return visit(k);
}

}  // namespace

void EnumerateModels(const AtomSets& atoms, int n, FrameClass f,
                     const std::function<bool(const KripkeModel&)>& visit) {
  if (n < 1) throw PreconditionError("models need at least one state");
  if (f == FrameClass::kER) {
    std::vector<int> block(n, 0);
    bool go = true;
    Partitions(
        n, block, 0, -1,
        [&](const std::vector<int>& b) {
          KripkeModel k(n);
          for (State x = 0; x < n; ++x)
            for (State y = 0; y < n; ++y)
              if (b[x] == b[y]) k.AddEdge(x, y);
          return Labelings(k, atoms, 0, visit);
        },
        go);
    return;
  }
  const int pairs = n * n;
  if (pairs > 30) throw PreconditionError("raw relation enumeration limited to 5 states");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    KripkeModel k(n);
    for (int e = 0; e < pairs; ++e) {
      if (mask & (std::uint64_t{1} << e)) k.AddEdge(e / n, e % n);
    }
    if (!FrameSatisfies(k, f)) continue;
    if (!Labelings(k, atoms, 0, visit)) return;
  }
}

KripkeModel SingletonModel(const Formula& phi) {
  KripkeModel k(std::vector<std::string>{"w1"});
  k.AddEdge(0, 0);
  for (const auto& p : Propositions(phi)) k.SetProposition(p, {0});
  for (const auto& i : Nominals(phi)) k.SetNominal(i, 0);
  return k;
}

Assignment SingletonAssignment(const Formula& phi) {
  Assignment g;
  for (const auto& x : FreeVariables(phi)) g[x] = 0;
  return g;
}

}  // namespace hybridsat
