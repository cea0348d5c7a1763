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

#include "hybridsat/formula.h"

#include <algorithm>
#include <functional>

#include "hybridsat/error.h"

namespace hybridsat {

struct Formula::Node {
  NodeKind kind;
  Atom atom;
  BoolFun fun;
  std::vector<Formula> children;
  std::size_t size;
};

std::string QualifiedName(const Atom& atom) {
  switch (atom.kind) {
    case AtomKind::kProposition: return "p:" + atom.name;
    case AtomKind::kNominal: return "n:" + atom.name;
    case AtomKind::kStateVar: return "x:" + atom.name;
  }
  return atom.name;
}

std::string_view OperatorName(Operator op) {
  switch (op) {
    case Operator::kDia: return "dia";
    case Operator::kBox: return "box";
    case Operator::kDown: return "down";
    case Operator::kAt: return "at";
  }
  return "?";
}

OperatorSet ParseOperatorSet(std::string_view text) {
  OperatorSet ops;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "dia" || item == "◇") {
      ops.insert(Operator::kDia);
    } else if (item == "box" || item == "□") {
      ops.insert(Operator::kBox);
    } else if (item == "down" || item == "↓") {
      ops.insert(Operator::kDown);
    } else if (item == "at" || item == "@") {
      ops.insert(Operator::kAt);
    } else if (!item.empty()) {
      throw ParseError("unknown operator '" + std::string(item) + "'", start);
    }
    start = end + 1;
  }
  return ops;
}

std::string ToString(const OperatorSet& ops) {
  std::string out;
  for (Operator op : ops) {
    if (!out.empty()) out += ",";
    out += OperatorName(op);
  }
  return out;
}

const OperatorSet& FullOperatorSet() {
  static const OperatorSet full = {Operator::kDia, Operator::kBox, Operator::kDown,
                                   Operator::kAt};
  return full;
}

Formula Formula::MakeAtom(Atom atom) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::kAtom, std::move(atom), BoolFun(), {}, 1}));
}

Formula Formula::Apply(BoolFun f, std::vector<Formula> args) {
  if (static_cast<int>(args.size()) != f.arity()) {
    throw PreconditionError("connective " + f.Literal() + " expects " +
                            std::to_string(f.arity()) + " arguments, got " +
                            std::to_string(args.size()));
  }
  std::size_t size = 1;
  for (const Formula& a : args) size += a.Size();
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::kApply, Atom{}, f, std::move(args), size}));
}

Formula Formula::Constant(bool value) { return Apply(BoolFun::Constant(value), {}); }
Formula Formula::Negate(Formula body) { return Apply(fn::Not(), {std::move(body)}); }
Formula Formula::And(Formula a, Formula b) {
  return Apply(fn::And(), {std::move(a), std::move(b)});
}
Formula Formula::Or(Formula a, Formula b) {
  return Apply(fn::Or(), {std::move(a), std::move(b)});
}

Formula Formula::Dia(Formula body) {
  const std::size_t size = body.Size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::kDia, Atom{}, BoolFun(), {std::move(body)}, size}));
}

Formula Formula::Box(Formula body) {
  const std::size_t size = body.Size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::kBox, Atom{}, BoolFun(), {std::move(body)}, size}));
}

Formula Formula::Down(std::string var, Formula body) {
  const std::size_t size = body.Size() + 1;
  return Formula(std::make_shared<const Node>(Node{
      NodeKind::kDown, Atom::Var(std::move(var)), BoolFun(), {std::move(body)}, size}));
}

Formula Formula::At(Atom target, Formula body) {
  if (target.kind == AtomKind::kProposition) {
    throw PreconditionError("@ target must be a nominal or state variable, got " +
                            QualifiedName(target));
  }
  const std::size_t size = body.Size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::kAt, std::move(target), BoolFun(), {std::move(body)}, size}));
}

NodeKind Formula::kind() const { return node_->kind; }
const Atom& Formula::atom() const { return node_->atom; }
const BoolFun& Formula::fun() const { return node_->fun; }
std::span<const Formula> Formula::args() const { return node_->children; }
const Formula& Formula::body() const { return node_->children.front(); }
std::size_t Formula::Size() const { return node_->size; }

bool Formula::IsConstant(bool value) const {
  return kind() == NodeKind::kApply && fun().arity() == 0 && fun().at(0) == value;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.Size() != b.Size()) return false;
  if (a.kind() == NodeKind::kApply) {
    if (a.fun() != b.fun()) return false;
  } else if (a.kind() != NodeKind::kDia && a.kind() != NodeKind::kBox) {
    if (a.atom() != b.atom()) return false;
  }
  const auto xs = a.args();
  const auto ys = b.args();
  return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
}

namespace {

void Visit(const Formula& phi, const std::function<void(const Formula&)>& f) {
  f(phi);
  for (const Formula& child : phi.args()) Visit(child, f);
}

void CollectFree(const Formula& phi, std::multiset<std::string>& bound,
                 std::set<std::string>& out) {
  switch (phi.kind()) {
    case NodeKind::kAtom:
      if (phi.atom().kind == AtomKind::kStateVar && !bound.contains(phi.atom().name)) {
        out.insert(phi.atom().name);
      }
      return;
    case NodeKind::kDown: {
      auto it = bound.insert(phi.var());
      CollectFree(phi.body(), bound, out);
      bound.erase(it);
      return;
    }
    case NodeKind::kAt:
      if (phi.atom().kind == AtomKind::kStateVar && !bound.contains(phi.atom().name)) {
        out.insert(phi.atom().name);
      }
      CollectFree(phi.body(), bound, out);
      return;
    default:
      for (const Formula& child : phi.args()) CollectFree(child, bound, out);
  }
}

}  // namespace

OperatorSet OperatorsUsed(const Formula& phi) {
  OperatorSet ops;
  Visit(phi, [&](const Formula& n) {
    switch (n.kind()) {
      case NodeKind::kDia: ops.insert(Operator::kDia); break;
      case NodeKind::kBox: ops.insert(Operator::kBox); break;
      case NodeKind::kDown: ops.insert(Operator::kDown); break;
      case NodeKind::kAt: ops.insert(Operator::kAt); break;
      default: break;
    }
  });
  return ops;
}

std::set<BoolFun> FunctionsUsed(const Formula& phi) {
  std::set<BoolFun> fs;
  Visit(phi, [&](const Formula& n) {
    if (n.kind() == NodeKind::kApply) fs.insert(n.fun());
  });
  return fs;
}

std::vector<BoolFun> FunctionsUsedList(const Formula& phi) {
  const auto fs = FunctionsUsed(phi);
  return {fs.begin(), fs.end()};
}

std::set<std::string> FreeVariables(const Formula& phi) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  CollectFree(phi, bound, out);
  return out;
}

std::set<std::string> Nominals(const Formula& phi) {
  std::set<std::string> out;
  Visit(phi, [&](const Formula& n) {
    if ((n.kind() == NodeKind::kAtom || n.kind() == NodeKind::kAt) &&
        n.atom().kind == AtomKind::kNominal) {
      out.insert(n.atom().name);
    }
  });
  return out;
}

std::set<std::string> Propositions(const Formula& phi) {
  std::set<std::string> out;
  Visit(phi, [&](const Formula& n) {
    if (n.kind() == NodeKind::kAtom && n.atom().kind == AtomKind::kProposition) {
      out.insert(n.atom().name);
    }
  });
  return out;
}

std::set<std::string> VariableNames(const Formula& phi) {
  std::set<std::string> out;
  Visit(phi, [&](const Formula& n) {
    if ((n.kind() == NodeKind::kAtom || n.kind() == NodeKind::kAt ||
         n.kind() == NodeKind::kDown) &&
        n.atom().kind == AtomKind::kStateVar) {
      out.insert(n.atom().name);
    }
  });
  return out;
}

void FreshNames::Reserve(const Formula& phi) {
  Visit(phi, [&](const Formula& n) {
    if (n.kind() == NodeKind::kAtom || n.kind() == NodeKind::kAt ||
        n.kind() == NodeKind::kDown) {
      used_.insert(n.atom().name);
    }
  });
}

std::string FreshNames::Next() {
  while (true) {
    std::string name = std::string(kFreshPrefix) + std::to_string(counter_++);
    if (used_.insert(name).second) return name;
  }
}

}  // namespace hybridsat
