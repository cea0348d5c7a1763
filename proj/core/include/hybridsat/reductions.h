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

#ifndef HYBRIDSAT_REDUCTIONS_H_
#define HYBRIDSAT_REDUCTIONS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hybridsat/formula.h"
#include "hybridsat/kripke.h"

namespace hybridsat {

// Vertices are 1..n and become state variables v1..vn.
struct OrdInstance {
  int n = 0;
  std::vector<std::pair<int, int>> succ;
  int s = 1;
  int t = 1;
};

// Throws PreconditionError unless succ is one directed path through all
// vertices and s, t are in range.
void Validate(const OrdInstance& inst);
// s <=_S t.
bool OrdHolds(const OrdInstance& inst);
// Sat iff s <=_S t; connectives {0}.
Formula GenOrd(const OrdInstance& inst);
// Sat iff not s <=_S t; connectives {not}.
Formula GenOrdNeg(const OrdInstance& inst);

// Variables 1..n quantified in order, strictly alternating from ∃.
struct QbfInstance {
  std::vector<bool> universal;            // universal[i] for variable i + 1
  std::vector<std::vector<int>> clauses;  // DIMACS literals
};

void Validate(const QbfInstance& inst);
bool QbfHolds(const QbfInstance& inst);
// Sat over trans iff the QBF is true; connectives {and, or, 0, 1}.
Formula GenQbf(const QbfInstance& inst);
// QDIMACS subset: optional "p cnf", "e"/"a" prefix lines, clause lines, all
// 0-terminated; "c" lines are comments. Free variables are quantified
// existentially up front, and dummy variables restore strict alternation.
QbfInstance ParseQdimacs(std::string_view text);

struct DagInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int s = 1;
  int t = 1;
};

void Validate(const DagInstance& inst);
bool Reachable(const DagInstance& inst);
// Sat over trans iff t is not reachable from s; connectives {and, 0, 1}.
Formula GenUnreach(const DagInstance& inst);

// Sat iff bits has an even number of ones; connectives {not}.
Formula GenParity(std::string_view bits);

// Sat over all frames iff the image is sat over total frames. Connectives
// must lie in {and, or, not}; the fresh proposition uses the reserved prefix.
Formula Totalize(const Formula& phi);

// "n=4 s=1 t=3 succ=1-2,2-3,3-4" and "n=3 s=1 t=3 edges=1-2,2-3".
OrdInstance ParseOrd(std::string_view text);
DagInstance ParseDag(std::string_view text);

}  // namespace hybridsat

#endif  // HYBRIDSAT_REDUCTIONS_H_
