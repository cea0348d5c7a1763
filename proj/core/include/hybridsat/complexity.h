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

#ifndef HYBRIDSAT_COMPLEXITY_H_
#define HYBRIDSAT_COMPLEXITY_H_

#include <string>

#include "hybridsat/clones.h"
#include "hybridsat/formula.h"
#include "hybridsat/kripke.h"

namespace hybridsat {

// Tightest known complexity of SAT over `f` for operators `ops` and
// connectives whose clone is described by `report`.
std::string ComplexityLookup(const OperatorSet& ops, const CloneReport& report, FrameClass f);

}  // namespace hybridsat

#endif  // HYBRIDSAT_COMPLEXITY_H_
