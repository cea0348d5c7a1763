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

#ifndef HYBRIDSAT_FREE_MODEL_H_
#define HYBRIDSAT_FREE_MODEL_H_

#include "hybridsat/kripke.h"
#include "hybridsat/oracle.h"
#include "hybridsat/simple_form.h"

namespace hybridsat {

struct FreeModelResult {
  bool sat = false;
  // Some ◇ below the depth cap was dropped; sat is then only a lower bound.
  bool truncated = false;
  // The constructed model; a witness when sat and not truncated.
  Witness model;
};

// Evaluates a simple form on its most general model over `f`: every ◇ gets a
// fresh successor, nominals and free variables get their own states, and □
// ranges over whatever the frame class forces. Decides satisfiability when
// the terminal is a literal or constant. Over trans and ER the model can be
// infinite; states deeper than `max_depth` (when non-negative) are not built,
// so an unsat answer stays exact while sat may not be.
FreeModelResult EvaluateFreeModel(const SimpleForm& sf, FrameClass f, int max_depth = -1);

}  // namespace hybridsat

#endif  // HYBRIDSAT_FREE_MODEL_H_
