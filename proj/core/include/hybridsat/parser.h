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

#ifndef HYBRIDSAT_PARSER_H_
#define HYBRIDSAT_PARSER_H_

#include <string>
#include <string_view>

#include "hybridsat/formula.h"

namespace hybridsat {

struct ParseOptions {
  // Accept names starting with the reserved fresh prefix.
  bool allow_reserved_names = false;
};

// Keyword syntax:
//   formula := atom | 0 | 1 | name(formula, ...) | name formula   (unary)
//            | dia formula | box formula | down x . formula
//            | at t formula | ( formula )
// Unicode ◇ □ ↓ @ ¬ are accepted. Bare identifiers are state variables when
// an enclosing down binds them and propositions otherwise; a bare @ target
// is a bound variable or else a nominal. Prefixes p: n: x: are explicit.
// '#' starts a comment that runs to the end of the line.
// Throws ParseError.
Formula Parse(std::string_view text, const ParseOptions& options = {});

// Inverse of Parse: Parse(ToText(phi), {true}) == phi.
std::string ToText(const Formula& phi);

}  // namespace hybridsat

#endif  // HYBRIDSAT_PARSER_H_
