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

#include "hybridsat/simple_form.h"

#include <map>
#include <set>

#include "hybridsat/error.h"

namespace hybridsat {

Formula SimpleForm::ToFormula() const {
  Formula phi = terminal.is_constant ? Formula::Constant(terminal.value)
                                     : Formula::MakeAtom(terminal.atom);
  if (!terminal.is_constant && terminal.negated) phi = Formula::Negate(phi);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    switch (it->op) {
      case Operator::kDia: phi = Formula::Dia(phi); break;
      case Operator::kBox: phi = Formula::Box(phi); break;
      case Operator::kDown: phi = Formula::Down(it->atom.name, phi); break;
      case Operator::kAt: phi = Formula::At(it->atom, phi); break;
    }
  }
  return phi;
}

SimpleForm SimpleFormOf(const Formula& input) {
  SimpleForm sf;
  bool negated = false;
  const Formula* cur = &input;
  while (true) {
    const Formula& phi = *cur;
    switch (phi.kind()) {
      case NodeKind::kAtom:
        sf.terminal = Terminal::Literal(phi.atom(), negated);
        return sf;
      case NodeKind::kApply: {
        const BoolFun& f = phi.fun();
        if (f.EssentialCount() > 1) {
          throw PreconditionError("connective " + f.Literal() +
                                  " depends on more than one argument");
        }
        if (f.IsConstant()) {
          sf.terminal = Terminal::Const(f.at(0) != negated);
          return sf;
        }
        int index = 0;
        while (!f.DependsOn(index)) ++index;
        // f is x_index or its negation.
        const std::uint32_t row = 1u << (f.arity() - 1 - index);
        if (f.at(row) == false) negated = !negated;
        cur = &phi.args()[index];
        break;
      }
      case NodeKind::kDia:
        sf.prefix.push_back({negated ? Operator::kBox : Operator::kDia, Atom{}});
        cur = &phi.body();
        break;
      case NodeKind::kBox:
        sf.prefix.push_back({negated ? Operator::kDia : Operator::kBox, Atom{}});
        cur = &phi.body();
        break;
      case NodeKind::kDown:
        sf.prefix.push_back({Operator::kDown, phi.atom()});
        cur = &phi.body();
        break;
      case NodeKind::kAt:
        sf.prefix.push_back({Operator::kAt, phi.atom()});
        cur = &phi.body();
        break;
    }
  }
}

Formula ToSimpleForm(const Formula& phi) { return SimpleFormOf(phi).ToFormula(); }

SimpleForm RenameBound(const SimpleForm& sf, FreshNames& fresh) {
  SimpleForm out;
  std::set<std::string> seen;
  std::map<std::string, std::string> current;
  auto resolve = [&](const Atom& a) {
    if (a.kind != AtomKind::kStateVar) return a;
    auto it = current.find(a.name);
    return it == current.end() ? a : Atom::Var(it->second);
  };
  for (const PrefixOp& p : sf.prefix) {
    if (p.op == Operator::kDown) {
      std::string name = p.atom.name;
      if (seen.contains(name)) {
        name = fresh.Next();
      }
      seen.insert(p.atom.name);
      seen.insert(name);
      current[p.atom.name] = name;
      out.prefix.push_back({Operator::kDown, Atom::Var(name)});
    } else if (p.op == Operator::kAt) {
      if (p.atom.kind == AtomKind::kStateVar) seen.insert(p.atom.name);
      out.prefix.push_back({Operator::kAt, resolve(p.atom)});
    } else {
      out.prefix.push_back(p);
    }
  }
  out.terminal = sf.terminal;
  if (!out.terminal.is_constant) out.terminal.atom = resolve(out.terminal.atom);
  return out;
}

}  // namespace hybridsat
