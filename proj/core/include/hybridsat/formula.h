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

#ifndef HYBRIDSAT_FORMULA_H_
#define HYBRIDSAT_FORMULA_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybridsat/bool_fun.h"

namespace hybridsat {

enum class AtomKind { kProposition, kNominal, kStateVar };

struct Atom {
  AtomKind kind = AtomKind::kProposition;
  std::string name;

  static Atom Prop(std::string name) { return {AtomKind::kProposition, std::move(name)}; }
  static Atom Nom(std::string name) { return {AtomKind::kNominal, std::move(name)}; }
  static Atom Var(std::string name) { return {AtomKind::kStateVar, std::move(name)}; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// "p:q", "n:i", "x:y".
std::string QualifiedName(const Atom& atom);

enum class Operator { kDia, kBox, kDown, kAt };
using OperatorSet = std::set<Operator>;

std::string_view OperatorName(Operator op);
// Comma separated keywords, e.g. "dia,box,down,at". Throws ParseError.
OperatorSet ParseOperatorSet(std::string_view text);
std::string ToString(const OperatorSet& ops);
const OperatorSet& FullOperatorSet();

enum class NodeKind { kAtom, kApply, kDia, kBox, kDown, kAt };

// Immutable hybrid formula. Copies share structure.
class Formula {
 public:
  static Formula MakeAtom(Atom atom);
  static Formula Prop(std::string name) { return MakeAtom(Atom::Prop(std::move(name))); }
  static Formula Nom(std::string name) { return MakeAtom(Atom::Nom(std::move(name))); }
  static Formula Var(std::string name) { return MakeAtom(Atom::Var(std::move(name))); }
  // Throws PreconditionError when args.size() != f.arity().
  static Formula Apply(BoolFun f, std::vector<Formula> args);
  static Formula Constant(bool value);
  static Formula Negate(Formula body);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Dia(Formula body);
  static Formula Box(Formula body);
  static Formula Down(std::string var, Formula body);
  // Throws PreconditionError when target is a proposition.
  static Formula At(Atom target, Formula body);

  NodeKind kind() const;
  // The atom itself, the @ target, or the ↓ variable (as a state variable).
  const Atom& atom() const;
  const std::string& var() const { return atom().name; }
  const BoolFun& fun() const;
  std::span<const Formula> args() const;
  // Operand of ◇, □, ↓ and @.
  const Formula& body() const;

  bool IsConstant(bool value) const;
  std::size_t Size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

OperatorSet OperatorsUsed(const Formula& phi);
std::set<BoolFun> FunctionsUsed(const Formula& phi);
std::vector<BoolFun> FunctionsUsedList(const Formula& phi);
std::set<std::string> FreeVariables(const Formula& phi);
std::set<std::string> Nominals(const Formula& phi);
std::set<std::string> Propositions(const Formula& phi);
// Every state variable name, bound or free.
std::set<std::string> VariableNames(const Formula& phi);

// Reserved prefix for generated names; the parser rejects it.
inline constexpr std::string_view kFreshPrefix = "_k";

// Produces _k0, _k1, ... skipping names already used in the seed formulas.
class FreshNames {
 public:
  FreshNames() = default;
  void Reserve(const Formula& phi);
  std::string Next();

 private:
  std::set<std::string> used_;
  int counter_ = 0;
};

}  // namespace hybridsat

#endif  // HYBRIDSAT_FORMULA_H_
