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

#ifndef HYBRIDSAT_REWRITE_H_
#define HYBRIDSAT_REWRITE_H_

#include <vector>

#include "hybridsat/bool_fun.h"
#include "hybridsat/formula.h"

namespace hybridsat {

// How the auxiliary constant 1 is spelled with hybrid operators.
enum class OneReplacement {
  kDownXx,  // down z . z
  kAtXx,    // at z z
};

// Rewrites every connective of phi as a composition over base ∪ {1}, then
// replaces each introduced 1 by a fresh hybrid tautology. The result uses
// only connectives from base. Throws PreconditionError when a connective is
// not expressible.
Formula RewriteOverBase(const Formula& phi, const std::vector<BoolFun>& base,
                        OneReplacement mode);

}  // namespace hybridsat

#endif  // HYBRIDSAT_REWRITE_H_
