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

#ifndef HYBRIDSAT_SIMPLE_FORM_H_
#define HYBRIDSAT_SIMPLE_FORM_H_

#include <string>
#include <vector>

#include "hybridsat/formula.h"

namespace hybridsat {

// One operator of a simple-form prefix. atom is the ↓ variable or @ target.
struct PrefixOp {
  Operator op;
  Atom atom;

  friend bool operator==(const PrefixOp&, const PrefixOp&) = default;
};

// The final symbol: a constant, or a possibly negated atom.
struct Terminal {
  bool is_constant = false;
  bool value = false;  // for constants
  Atom atom;           // otherwise
  bool negated = false;

  static Terminal Const(bool v) { return Terminal{true, v, Atom{}, false}; }
  static Terminal Literal(Atom a, bool neg) { return Terminal{false, false, std::move(a), neg}; }

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

// P1 ... Pn λ.
struct SimpleForm {
  std::vector<PrefixOp> prefix;
  Terminal terminal;

  Formula ToFormula() const;
  friend bool operator==(const SimpleForm&, const SimpleForm&) = default;
};

// Pushes negations inward, flipping ◇/□, and collapses constant and
// projection connectives. Throws PreconditionError unless every connective
// depends on at most one argument.
SimpleForm SimpleFormOf(const Formula& phi);
Formula ToSimpleForm(const Formula& phi);

// Renames binders so each variable is bound at most once and no binder
// reuses a name occurring earlier. Free occurrences keep their names.
SimpleForm RenameBound(const SimpleForm& sf, FreshNames& fresh);

}  // namespace hybridsat

#endif  // HYBRIDSAT_SIMPLE_FORM_H_
