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

#ifndef HYBRIDSAT_BOOL_FUN_H_
#define HYBRIDSAT_BOOL_FUN_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hybridsat {

// A Boolean function as a truth table. Entry k holds the value on the
// argument tuple whose bits spell k, first argument most significant.
class BoolFun {
 public:
  static constexpr int kMaxArity = 6;

  BoolFun() = default;
  // Throws std::invalid_argument on bad arity or stray table bits.
  BoolFun(int arity, std::uint64_t table);

  static BoolFun Constant(bool value);
  static BoolFun Projection(int arity, int index);

  int arity() const { return arity_; }
  std::uint64_t table() const { return table_; }
  int rows() const { return 1 << arity_; }

  bool at(std::uint32_t row) const { return (table_ >> row) & 1u; }
  // Throws std::invalid_argument when args.size() != arity().
  bool Eval(std::span<const bool> args) const;

  bool IsConstant() const;
  // Whether the value changes with argument i for some tuple.
  bool DependsOn(int i) const;
  int EssentialCount() const;

  // "0001" for AND: character k is table entry k.
  std::string Bits() const;
  // "f#0001/2".
  std::string Literal() const;

  friend bool operator==(const BoolFun&, const BoolFun&) = default;
  friend auto operator<=>(const BoolFun&, const BoolFun&) = default;

 private:
  int arity_ = 0;
  std::uint64_t table_ = 0;
};

namespace fn {
BoolFun And();
BoolFun Or();
BoolFun Not();
BoolFun Xor();
BoolFun Implies();
BoolFun Id();
BoolFun Zero();
BoolFun One();
// x and not y.
BoolFun AndNot();
// x and (y or z).
BoolFun AndOr();
// (x and not y) or (x and not z) or (not y and not z).
BoolFun DBase();
}  // namespace fn

// Accepts the aliases and, or, not, xor, impl, 0, 1, id and literals
// f#<bits>/<arity>.
std::optional<BoolFun> ParseConnective(std::string_view text);
// Alias when one exists, otherwise the literal.
std::string ConnectiveName(const BoolFun& f);

enum class Property {
  kZeroReproducing,
  kOneReproducing,
  kMonotone,
  kZeroSeparating,
  kOneSeparating,
  kSelfDual,
  kAffine,
  kDependsOnAtMostOne,
  kDisjunctionShaped,
  kConjunctionShaped,
  kIdentityOrConstant,
};

// Nullary constants are judged as the unary constant of the same value.
bool HasProperty(const BoolFun& f, Property property);

}  // namespace hybridsat

#endif  // HYBRIDSAT_BOOL_FUN_H_
