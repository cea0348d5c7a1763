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

#include "hybridsat/bool_fun.h"

#include <stdexcept>
#include <vector>

namespace hybridsat {
namespace {

std::uint64_t TableMask(int arity) {
  const int rows = 1 << arity;
  return rows == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
}

// Arity-0 constants behave as unary constants for property checks.
BoolFun Widen(const BoolFun& f) {
  if (f.arity() > 0) return f;
  return BoolFun(1, f.at(0) ? 0b11 : 0b00);
}

bool ArgBit(int arity, std::uint32_t row, int i) {
  return (row >> (arity - 1 - i)) & 1u;
}

}  // namespace

BoolFun::BoolFun(int arity, std::uint64_t table) : arity_(arity), table_(table) {
  if (arity < 0 || arity > kMaxArity) {
    throw std::invalid_argument("arity out of range: " + std::to_string(arity));
  }
  if ((table & ~TableMask(arity)) != 0) {
    throw std::invalid_argument("truth table has bits beyond 2^arity");
  }
}

BoolFun BoolFun::Constant(bool value) { return BoolFun(0, value ? 1 : 0); }

BoolFun BoolFun::Projection(int arity, int index) {
  if (index < 0 || index >= arity) {
    throw std::invalid_argument("projection index out of range");
  }
  std::uint64_t table = 0;
  for (std::uint32_t row = 0; row < (1u << arity); ++row) {
    if (ArgBit(arity, row, index)) table |= std::uint64_t{1} << row;
  }
  return BoolFun(arity, table);
}

bool BoolFun::Eval(std::span<const bool> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw std::invalid_argument("expected " + std::to_string(arity_) +
                                " arguments, got " +
                                std::to_string(args.size()));
  }
  std::uint32_t row = 0;
  for (bool a : args) row = (row << 1) | (a ? 1u : 0u);
  return at(row);
}

bool BoolFun::IsConstant() const {
  return table_ == 0 || table_ == TableMask(arity_);
}

bool BoolFun::DependsOn(int i) const {
  if (i < 0 || i >= arity_) return false;
  const std::uint32_t bit = 1u << (arity_ - 1 - i);
  for (std::uint32_t row = 0; row < static_cast<std::uint32_t>(rows()); ++row) {
    if ((row & bit) == 0 && at(row) != at(row | bit)) return true;
  }
  return false;
}

int BoolFun::EssentialCount() const {
  int count = 0;
  for (int i = 0; i < arity_; ++i) count += DependsOn(i) ? 1 : 0;
  return count;
}

std::string BoolFun::Bits() const {
  std::string out;
  for (int row = 0; row < rows(); ++row) out.push_back(at(row) ? '1' : '0');
  return out;
}

std::string BoolFun::Literal() const {
  return "f#" + Bits() + "/" + std::to_string(arity_);
}

namespace fn {
BoolFun And() { return BoolFun(2, 0b1000); }
BoolFun Or() { return BoolFun(2, 0b1110); }
BoolFun Not() { return BoolFun(1, 0b01); }
BoolFun Xor() { return BoolFun(2, 0b0110); }
// Rows 00,01,11 are true; row 10 is false.
BoolFun Implies() { return BoolFun(2, 0b1011); }
BoolFun Id() { return BoolFun(1, 0b10); }
BoolFun Zero() { return BoolFun::Constant(false); }
BoolFun One() { return BoolFun::Constant(true); }
BoolFun AndNot() { return BoolFun(2, 0b0100); }

BoolFun AndOr() {
  std::uint64_t t = 0;
  for (std::uint32_t row = 0; row < 8; ++row) {
    const bool x = ArgBit(3, row, 0), y = ArgBit(3, row, 1), z = ArgBit(3, row, 2);
    if (x && (y || z)) t |= std::uint64_t{1} << row;
  }
  return BoolFun(3, t);
}

BoolFun DBase() {
  std::uint64_t t = 0;
  for (std::uint32_t row = 0; row < 8; ++row) {
    const bool x = ArgBit(3, row, 0), y = ArgBit(3, row, 1), z = ArgBit(3, row, 2);
    if ((x && !y) || (x && !z) || (!y && !z)) t |= std::uint64_t{1} << row;
  }
  return BoolFun(3, t);
}
}  // namespace fn

std::optional<BoolFun> ParseConnective(std::string_view text) {
  if (text == "and") return fn::And();
  if (text == "or") return fn::Or();
  if (text == "not") return fn::Not();
  if (text == "xor") return fn::Xor();
  if (text == "impl") return fn::Implies();
  if (text == "id") return fn::Id();
  if (text == "0") return fn::Zero();
  if (text == "1") return fn::One();
  if (!text.starts_with("f#")) return std::nullopt;
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const std::string_view bits = text.substr(2, slash - 2);
  const std::string_view arity_text = text.substr(slash + 1);
  if (arity_text.empty() || arity_text.size() > 1) return std::nullopt;
  if (arity_text[0] < '0' || arity_text[0] > '6') return std::nullopt;
  const int arity = arity_text[0] - '0';
  if (bits.size() != (std::size_t{1} << arity)) return std::nullopt;
  std::uint64_t table = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      table |= std::uint64_t{1} << k;
    } else if (bits[k] != '0') {
      return std::nullopt;
    }
  }
  return BoolFun(arity, table);
}

std::string ConnectiveName(const BoolFun& f) {
  if (f == fn::And()) return "and";
  if (f == fn::Or()) return "or";
  if (f == fn::Not()) return "not";
  if (f == fn::Xor()) return "xor";
  if (f == fn::Implies()) return "impl";
  if (f == fn::Id()) return "id";
  if (f == fn::Zero()) return "0";
  if (f == fn::One()) return "1";
  return f.Literal();
}

bool HasProperty(const BoolFun& original, Property property) {
  const BoolFun f = Widen(original);
  const int n = f.arity();
  const std::uint32_t rows = 1u << n;
  const std::uint32_t all_ones = rows - 1;
  switch (property) {
    case Property::kZeroReproducing:
      return !f.at(0);
    case Property::kOneReproducing:
      return f.at(all_ones);
    case Property::kMonotone:
      for (std::uint32_t a = 0; a < rows; ++a) {
        for (std::uint32_t b = 0; b < rows; ++b) {
          if ((a & b) == a && f.at(a) && !f.at(b)) return false;
        }
      }
      return true;
    case Property::kZeroSeparating:
    case Property::kOneSeparating: {
      const bool t = property == Property::kOneSeparating;
      for (int i = 0; i < n; ++i) {
        bool separates = true;
        for (std::uint32_t row = 0; row < rows && separates; ++row) {
          if (f.at(row) == t && ArgBit(n, row, i) != t) separates = false;
        }
        if (separates) return true;
      }
      return false;
    }
    case Property::kSelfDual:
      for (std::uint32_t row = 0; row < rows; ++row) {
        if (f.at(row) == f.at(all_ones ^ row)) return false;
      }
      return true;
    case Property::kAffine: {
      const bool c = f.at(0);
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i) {
        if (f.at(1u << (n - 1 - i)) != c) mask |= 1u << (n - 1 - i);
      }
      for (std::uint32_t row = 0; row < rows; ++row) {
        const bool parity = __builtin_popcount(row & mask) & 1;
        if (f.at(row) != (c != parity)) return false;
      }
      return true;
    }
    case Property::kDependsOnAtMostOne:
      return f.EssentialCount() <= 1;
    case Property::kDisjunctionShaped:
    case Property::kConjunctionShaped: {
      if (f.IsConstant()) return true;
      const bool disj = property == Property::kDisjunctionShaped;
      // Arguments that matter are those flipping the neutral tuple.
      const std::uint32_t neutral = disj ? 0 : all_ones;
      if (f.at(neutral) != !disj) return false;
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i) {
        if (f.DependsOn(i)) mask |= 1u << (n - 1 - i);
      }
      if (mask == 0) return false;
      for (std::uint32_t row = 0; row < rows; ++row) {
        const bool expected = disj ? (row & mask) != 0 : (row & mask) == mask;
        if (f.at(row) != expected) return false;
      }
      return true;
    }
    case Property::kIdentityOrConstant:
      if (f.IsConstant()) return true;
      for (int i = 0; i < n; ++i) {
        if (f == BoolFun::Projection(n, i)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace hybridsat
