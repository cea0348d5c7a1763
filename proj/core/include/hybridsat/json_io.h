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

#ifndef HYBRIDSAT_JSON_IO_H_
#define HYBRIDSAT_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "hybridsat/deciders.h"
#include "hybridsat/kripke.h"
#include "hybridsat/oracle.h"

namespace hybridsat {

// {"states": [...], "rel": [[a, b], ...], "labels": {"p:name": [...], "n:name": [s]}}
// States are referenced by name; integer indices are accepted on input.
nlohmann::json ModelToJson(const KripkeModel& k);
// Throws SemanticError on unknown states or a nominal not naming exactly one
// state, PreconditionError on malformed structure.
KripkeModel ModelFromJson(const nlohmann::json& j);

State StateFromJson(const KripkeModel& k, const nlohmann::json& j);
nlohmann::json WitnessToJson(const Witness& w);
Witness WitnessFromJson(const nlohmann::json& j);

nlohmann::json VerdictToJson(const Verdict& v);
Verdict VerdictFromJson(const nlohmann::json& j);

}  // namespace hybridsat

#endif  // HYBRIDSAT_JSON_IO_H_
