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

#include "hybridsat/complexity.h"

namespace hybridsat {

std::string ComplexityLookup(const OperatorSet& ops, const CloneReport& report, FrameClass f) {
  const bool dia = ops.contains(Operator::kDia);
  const bool box = ops.contains(Operator::kBox);
  const bool down = ops.contains(Operator::kDown);
  const bool at = ops.contains(Operator::kAt);
  const bool cyclic = f == FrameClass::kTotal || f == FrameClass::kER;

  if (report.SubsetOf(CloneId::R1)) return "trivial";

  if (report.SubsetOf(CloneId::I)) {
    if (cyclic || !box) return "almost-trivial";
    if (dia && down && at) return "L-complete";
    if (!at) return "AC0";
    return "in L";
  }

  if (report.SubsetOf(CloneId::N)) {
    if (dia && down && at) return "L-complete";
    if (!at) return down ? "AC0[2]-complete" : "in AC0[2]";
    return "in L";
  }

  const bool v = report.SubsetOf(CloneId::V);
  const bool e = report.SubsetOf(CloneId::E);
  if (v || e) {
    if (cyclic || !box) return "AC0";
    if (v && f == FrameClass::kAll) return at && down ? "L-complete" : "in L";
    if (e && f == FrameClass::kAll) return "coNP-hard (upper open)";
    if (at && down) return e ? "NL-hard (upper open)" : "L-hard (upper open)";
    return "open";
  }

  if (report.SubsetOf(CloneId::M)) {
    if (cyclic || !box) return "NC1-complete";
    if (f == FrameClass::kAll) return "PSPACE-hard (upper open)";
    if (at && down) return "PSPACE-hard (upper open)";
    return "open";
  }

  if (report.bf_with_true) {
    if (!dia || !down) return "not classified";
    switch (f) {
      case FrameClass::kAll:
      case FrameClass::kTotal:
        return "coRE-complete";
      case FrameClass::kTrans:
        return at ? "coRE-complete" : "NEXP-complete";
      case FrameClass::kER:
        return "NEXP-complete";
    }
  }

  if (report.SubsetOf(CloneId::L)) return "open (clone L)";
  return "not classified";
}

}  // namespace hybridsat
