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

#ifndef HYBRIDSAT_TRIANGLE_H_
#define HYBRIDSAT_TRIANGLE_H_

#include <optional>
#include <string>
#include <vector>

#include "hybridsat/simple_form.h"

namespace hybridsat {

struct ModalityEntry {
  int pos = 0;  // 1-based index into the prefix
  Operator op = Operator::kDia;

  friend bool operator==(const ModalityEntry&, const ModalityEntry&) = default;
};

struct ModalitySequence {
  std::vector<ModalityEntry> entries;
  Terminal terminal;
  // Anchored form only: the @ target the surviving suffix starts from.
  std::optional<Atom> anchor;

  std::string ToString() const;
  friend bool operator==(const ModalitySequence&, const ModalitySequence&) = default;
};

// Deletes each ↓x ... @x segment (rightmost @ first) and then the remaining
// binders. nullopt when some @ has no binder to match.
std::optional<ModalitySequence> TriangleTransform(const SimpleForm& sf);

// Same, but an unmatched @t cuts everything left of it and becomes the anchor.
ModalitySequence AnchoredTriangle(const SimpleForm& sf);

}  // namespace hybridsat

#endif  // HYBRIDSAT_TRIANGLE_H_
