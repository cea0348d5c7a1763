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

#ifndef HYBRIDSAT_ERROR_H_
#define HYBRIDSAT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hybridsat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula, model, or instance text. position is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input outside the fragment an operation is defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Evaluation problems: unbound variables, unlabeled nominals, bad models.
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridsat

#endif  // HYBRIDSAT_ERROR_H_
