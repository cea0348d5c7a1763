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

#include "hybridsat/rewrite.h"

#include <algorithm>
#include <map>
#include <optional>

#include "hybridsat/clones.h"
#include "hybridsat/error.h"

namespace hybridsat {
namespace {

class Rewriter {
 public:
  Rewriter(const Formula& phi, const std::vector<BoolFun>& base, OneReplacement mode)
      : base_(base), mode_(mode) {
    fresh_.Reserve(phi);
    extended_ = base;
    has_one_ = std::find(base.begin(), base.end(), fn::One()) != base.end();
    if (!has_one_) extended_.push_back(fn::One());
  }

  Formula Rewrite(const Formula& phi) {
    switch (phi.kind()) {
      case NodeKind::kAtom:
        return phi;
      case NodeKind::kDia:
        return Formula::Dia(Rewrite(phi.body()));
      case NodeKind::kBox:
        return Formula::Box(Rewrite(phi.body()));
      case NodeKind::kDown:
        return Formula::Down(phi.var(), Rewrite(phi.body()));
      case NodeKind::kAt:
        return Formula::At(phi.atom(), Rewrite(phi.body()));
      case NodeKind::kApply:
        break;
    }
    std::vector<Formula> args;
    for (const Formula& a : phi.args()) args.push_back(Rewrite(a));
    const BoolFun& f = phi.fun();
    if (std::find(base_.begin(), base_.end(), f) != base_.end()) {
      return Formula::Apply(f, std::move(args));
    }
    const CloneTerm& term = Witness(f);
    if (f.arity() == 0) {
      // The unary witness of a constant; any formula may fill its argument.
      args.push_back(One());
    }
    return Instantiate(term, args);
  }

 private:
  const CloneTerm& Witness(const BoolFun& f) {
    auto it = cache_.find(f);
    if (it == cache_.end()) {
      auto term = Express(f, extended_);
      if (!term) {
        throw PreconditionError("connective " + ConnectiveName(f) +
                                " is not expressible over the given base with 1");
      }
      it = cache_.emplace(f, *term).first;
    }
    return it->second;
  }

  Formula One() {
    const std::string z = fresh_.Next();
    if (mode_ == OneReplacement::kDownXx) return Formula::Down(z, Formula::Var(z));
    return Formula::At(Atom::Var(z), Formula::Var(z));
  }

  Formula Instantiate(const CloneTerm& term, const std::vector<Formula>& args) {
    if (term.is_projection) return args[term.index];
    const bool is_added_one =
        !has_one_ && term.index == static_cast<int>(extended_.size()) - 1;
    if (is_added_one) return One();
    std::vector<Formula> inner;
    for (const CloneTerm& a : term.args) inner.push_back(Instantiate(a, args));
    return Formula::Apply(extended_[term.index], std::move(inner));
  }

  std::vector<BoolFun> base_;
  std::vector<BoolFun> extended_;
  bool has_one_ = false;
  OneReplacement mode_;
  FreshNames fresh_;
  std::map<BoolFun, CloneTerm> cache_;
};

}  // namespace

Formula RewriteOverBase(const Formula& phi, const std::vector<BoolFun>& base,
                        OneReplacement mode) {
  return Rewriter(phi, base, mode).Rewrite(phi);
}

}  // namespace hybridsat
