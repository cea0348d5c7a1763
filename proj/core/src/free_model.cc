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

#include "hybridsat/free_model.h"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace hybridsat {
namespace {

// Only enforced together with a depth cap.
constexpr std::size_t kNodeLimit = 4000;

class Builder {
 public:
  Builder(const SimpleForm& sf, FrameClass f, int max_depth)
      : sf_(sf), f_(f), max_depth_(max_depth) {
    for (const PrefixOp& p : sf.prefix) {
      if (p.op == Operator::kDown) VarIndex(p.atom.name);
      if (p.op == Operator::kAt) Target(p.atom);
    }
    if (!sf.terminal.is_constant) Target(sf.terminal.atom);
    g0_.assign(vars_.size(), -1);
    // live_[k]: variables read at or after position k before a rebinding.
    live_.assign(sf.prefix.size() + 1, std::vector<char>(vars_.size(), 0));
    if (!sf.terminal.is_constant && sf.terminal.atom.kind == AtomKind::kStateVar) {
      live_.back()[vars_.at(sf.terminal.atom.name)] = 1;
    }
    for (std::size_t k = sf.prefix.size(); k-- > 0;) {
      live_[k] = live_[k + 1];
      const PrefixOp& p = sf.prefix[k];
      if (p.op == Operator::kDown) live_[k][vars_.at(p.atom.name)] = 0;
      if (p.op == Operator::kAt && p.atom.kind == AtomKind::kStateVar) {
        live_[k][vars_.at(p.atom.name)] = 1;
      }
    }
    NewNode(-1);
    // Free variables are those referenced before any binder.
    std::set<std::string> bound;
    auto note = [&](const Atom& a) {
      if (a.kind == AtomKind::kNominal && !noms_.contains(a.name)) {
        noms_[a.name] = NewNode(-1);
      } else if (a.kind == AtomKind::kStateVar && !bound.contains(a.name)) {
        int& slot = g0_[VarIndex(a.name)];
        if (slot < 0) slot = NewNode(-1);
        free_.insert(a.name);
      }
    };
    for (const PrefixOp& p : sf.prefix) {
      if (p.op == Operator::kDown) bound.insert(p.atom.name);
      if (p.op == Operator::kAt) note(p.atom);
    }
    if (!sf.terminal.is_constant) note(sf.terminal.atom);
  }

  FreeModelResult Run() {
    bool ok = true;
    std::size_t before = 0;
    do {
      before = nodes_.size();
      visited_.clear();
      ok = Visit(0, 0, g0_);
      if (max_depth_ >= 0 && nodes_.size() >= kNodeLimit) {
        truncated_ = true;
        break;
      }
    } while (ok && nodes_.size() != before);
    return {ok, truncated_, Extract()};
  }

 private:
  struct Node {
    int parent = -1;
    int component = 0;
    int depth = 0;
    std::vector<int> children;
    int sink = -1;
  };

  int VarIndex(const std::string& name) {
    auto [it, inserted] = vars_.emplace(name, static_cast<int>(vars_.size()));
    return it->second;
  }

  void Target(const Atom& a) {
    if (a.kind == AtomKind::kStateVar) VarIndex(a.name);
  }

  int NewNode(int parent) {
    Node n;
    n.parent = parent;
    n.component = parent < 0 ? static_cast<int>(nodes_.size()) : nodes_[parent].component;
    n.depth = parent < 0 ? 0 : nodes_[parent].depth + 1;
    nodes_.push_back(n);
    const int id = static_cast<int>(nodes_.size()) - 1;
    if (parent >= 0) nodes_[parent].children.push_back(id);
    return id;
  }

  // Children differ only in the bindings still read below them.
  int Child(int u, int k, std::vector<int> g) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!live_[k + 1][v]) g[v] = -1;
    }
    auto key = std::make_tuple(u, k, std::move(g));
    auto it = children_.find(key);
    if (it != children_.end()) return it->second;
    const int c = NewNode(u);
    children_.emplace(std::move(key), c);
    return c;
  }

  void Descendants(int u, std::vector<int>& out) const {
    for (int c : nodes_[u].children) {
      out.push_back(c);
      Descendants(c, out);
    }
  }

  std::vector<int> Successors(int u) {
    std::vector<int> out;
    switch (f_) {
      case FrameClass::kAll:
        out = nodes_[u].children;
        break;
      case FrameClass::kTrans:
        Descendants(u, out);
        break;
      case FrameClass::kTotal:
        if (nodes_[u].sink < 0 && (max_depth_ < 0 || nodes_[u].depth < max_depth_)) {
          const int s = NewNode(u);
          nodes_[u].sink = s;
        }
        out = nodes_[u].children;
        break;
      case FrameClass::kER:
        for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) {
          if (nodes_[v].component == nodes_[u].component) out.push_back(v);
        }
        break;
    }
    return out;
  }

  int Resolve(const Atom& a, const std::vector<int>& g) const {
    if (a.kind == AtomKind::kNominal) return noms_.at(a.name);
    return g[vars_.at(a.name)];
  }

  bool Final(int u, const std::vector<int>& g) const {
    const Terminal& t = sf_.terminal;
    if (t.is_constant) return t.value;
    if (t.atom.kind == AtomKind::kProposition) return true;
    return (Resolve(t.atom, g) == u) != t.negated;
  }

  bool Visit(std::size_t k, int u, std::vector<int> g) {
    std::vector<int> key = g;
    key.push_back(static_cast<int>(k));
    key.push_back(u);
    if (!visited_.insert(std::move(key)).second) return true;
    if (k == sf_.prefix.size()) return Final(u, g);
    const PrefixOp& p = sf_.prefix[k];
    switch (p.op) {
      case Operator::kDia:
        if (max_depth_ >= 0 &&
            (nodes_[u].depth >= max_depth_ || nodes_.size() >= kNodeLimit)) {
          truncated_ = true;
          return true;
        }
        return Visit(k + 1, Child(u, static_cast<int>(k), g), g);
      case Operator::kBox:
        for (int v : Successors(u)) {
          if (!Visit(k + 1, v, g)) return false;
        }
        return true;
      case Operator::kDown:
        g[vars_.at(p.atom.name)] = u;
        return Visit(k + 1, u, g);
      case Operator::kAt:
        return Visit(k + 1, Resolve(p.atom, g), g);
    }
    return true;
  }

  Witness Extract() const {
    const int n = static_cast<int>(nodes_.size());
    Witness w{KripkeModel(n), {}, 0};
    for (int u = 0; u < n; ++u) {
      switch (f_) {
        case FrameClass::kAll:
          for (int c : nodes_[u].children) w.model.AddEdge(u, c);
          break;
        case FrameClass::kTotal:
          for (int c : nodes_[u].children) w.model.AddEdge(u, c);
          if (nodes_[u].children.empty()) w.model.AddEdge(u, u);
          break;
        case FrameClass::kTrans: {
          std::vector<int> d;
          Descendants(u, d);
          for (int v : d) w.model.AddEdge(u, v);
          break;
        }
        case FrameClass::kER:
          for (int v = 0; v < n; ++v) {
            if (nodes_[v].component == nodes_[u].component) w.model.AddEdge(u, v);
          }
          break;
      }
    }
    const Terminal& t = sf_.terminal;
    if (!t.is_constant && t.atom.kind == AtomKind::kProposition) {
      std::set<State> all;
      if (!t.negated) {
        for (int u = 0; u < n; ++u) all.insert(u);
      }
      w.model.SetProposition(t.atom.name, all);
    }
    for (const auto& [name, node] : noms_) w.model.SetNominal(name, node);
    for (const std::string& x : free_) w.assignment[x] = g0_[vars_.at(x)];
    return w;
  }

  const SimpleForm& sf_;
  FrameClass f_;
  int max_depth_;
  bool truncated_ = false;
  std::map<std::string, int> vars_;
  std::map<std::string, int> noms_;
  std::set<std::string> free_;
  std::vector<int> g0_;
  std::vector<std::vector<char>> live_;
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, std::vector<int>>, int> children_;
  std::set<std::vector<int>> visited_;
};

}  // namespace

FreeModelResult EvaluateFreeModel(const SimpleForm& sf, FrameClass f, int max_depth) {
  return Builder(sf, f, max_depth).Run();
}

}  // namespace hybridsat
