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

#ifndef HYBRIDSAT_ORACLE_H_
#define HYBRIDSAT_ORACLE_H_

#include <cstdint>
#include <optional>

#include "hybridsat/formula.h"
#include "hybridsat/kripke.h"

namespace hybridsat {

struct Witness {
  KripkeModel model;
  Assignment assignment;
  State state = 0;
};

// Bounded model search: a witness with at most max_states states in frame
// class f, or nullopt. nullopt means "none within the bound", never "unsat".
// Sizes 1..max_states are tried in turn, each as a CNF instance for MiniSat,
// so a witness has the fewest states possible. Every witness is verified with
// Check and FrameSatisfies.
std::optional<Witness> SatBounded(const Formula& phi, FrameClass f, int max_states);

// Same contract, by raw enumeration of models, assignments and evaluation
// states. Practical up to about 3 states.
std::optional<Witness> SatExhaustive(const Formula& phi, FrameClass f, int max_states);

}  // namespace hybridsat

#endif  // HYBRIDSAT_ORACLE_H_
