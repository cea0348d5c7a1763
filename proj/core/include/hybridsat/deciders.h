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

#ifndef HYBRIDSAT_DECIDERS_H_
#define HYBRIDSAT_DECIDERS_H_

#include <optional>
#include <string>
#include <string_view>

#include "hybridsat/clones.h"
#include "hybridsat/formula.h"
#include "hybridsat/kripke.h"
#include "hybridsat/oracle.h"

namespace hybridsat {

enum class Answer { kSat, kUnsat, kUnknown };
std::string_view AnswerName(Answer a);

enum class Procedure { kR1, kFinalSymbol, kN, kSingleton, kVSplit, kBoundedOracle };
std::string_view ProcedureName(Procedure p);

struct Verdict {
  Answer answer = Answer::kUnknown;
  std::optional<Witness> witness;
  std::string procedure;
  std::string label;
  bool complete = false;
};

// All deciders throw PreconditionError outside their fragment.
Verdict DecideR1(const Formula& phi);
Verdict DecideFinalSymbol(const Formula& phi, FrameClass f);
Verdict DecideSingleton(const Formula& phi, FrameClass f);
Verdict DecideVSplit(const Formula& phi);
Verdict DecideN(const Formula& phi, FrameClass f);

Procedure Route(const OperatorSet& ops, const CloneReport& report, FrameClass f);

// Routes to the matching procedure; the bounded oracle (with `bound` states)
// handles everything else and never answers unsat.
Verdict Dispatch(const Formula& phi, FrameClass f, int bound = 3);

}  // namespace hybridsat

#endif  // HYBRIDSAT_DECIDERS_H_
