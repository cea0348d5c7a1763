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

#ifndef HYBRIDSAT_TESTS_SUPPORT_RANDOM_FORMULA_H_
#define HYBRIDSAT_TESTS_SUPPORT_RANDOM_FORMULA_H_

#include <random>
#include <string>
#include <vector>

#include "hybridsat/bool_fun.h"
#include "hybridsat/formula.h"

namespace hybridsat::testing {

struct RandomSpec {
  std::vector<BoolFun> connectives;
  OperatorSet ops = FullOperatorSet();
  std::vector<std::string> propositions = {"p", "q"};
  std::vector<std::string> nominals = {"i"};
  std::vector<std::string> variables = {"x", "y"};
  int max_depth = 3;
};

// Closed formulas: variables are only used under a binder for them.
class RandomFormulas {
 public:
  RandomFormulas(RandomSpec spec, std::uint64_t seed) : spec_(std::move(spec)), rng_(seed) {}

  Formula Next() { return Gen(spec_.max_depth, {}); }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Formula Leaf(const std::vector<std::string>& bound) {
    std::vector<Formula> options;
    for (const auto& p : spec_.propositions) options.push_back(Formula::Prop(p));
    for (const auto& i : spec_.nominals) options.push_back(Formula::Nom(i));
    for (const auto& x : bound) options.push_back(Formula::Var(x));
    for (const BoolFun& f : spec_.connectives) {
      if (f.arity() == 0) options.push_back(Formula::Apply(f, {}));
    }
    if (options.empty()) return Formula::Prop("p");
    return options[Pick(static_cast<int>(options.size()))];
  }

  Formula Gen(int depth, std::vector<std::string> bound) {
    if (depth == 0 || Pick(4) == 0) return Leaf(bound);
    std::vector<int> kinds;  // 0..3 operators, 4 connective
    for (Operator op : spec_.ops) {
      if (op == Operator::kAt && spec_.nominals.empty() && bound.empty()) continue;
      if (op == Operator::kDown && spec_.variables.empty()) continue;
      kinds.push_back(static_cast<int>(op));
    }
    bool has_connective = false;
    for (const BoolFun& f : spec_.connectives) has_connective |= f.arity() > 0;
    if (has_connective) {
      kinds.push_back(4);
      kinds.push_back(4);
    }
    if (kinds.empty()) return Leaf(bound);
    switch (kinds[Pick(static_cast<int>(kinds.size()))]) {
      case 0: return Formula::Dia(Gen(depth - 1, bound));
      case 1: return Formula::Box(Gen(depth - 1, bound));
      case 2: {
        const std::string& x = spec_.variables[Pick(static_cast<int>(spec_.variables.size()))];
        std::vector<std::string> inner = bound;
        inner.push_back(x);
        return Formula::Down(x, Gen(depth - 1, inner));
      }
      case 3: {
        std::vector<Atom> targets;
        for (const auto& i : spec_.nominals) targets.push_back(Atom::Nom(i));
        for (const auto& x : bound) targets.push_back(Atom::Var(x));
        return Formula::At(targets[Pick(static_cast<int>(targets.size()))], Gen(depth - 1, bound));
      }
      default: {
        std::vector<BoolFun> fs;
        for (const BoolFun& f : spec_.connectives) {
          if (f.arity() > 0) fs.push_back(f);
        }
        const BoolFun& f = fs[Pick(static_cast<int>(fs.size()))];
        std::vector<Formula> args;
        for (int a = 0; a < f.arity(); ++a) args.push_back(Gen(depth - 1, bound));
        return Formula::Apply(f, std::move(args));
      }
    }
  }

  RandomSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace hybridsat::testing

#endif  // HYBRIDSAT_TESTS_SUPPORT_RANDOM_FORMULA_H_
