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

#include <gtest/gtest.h>

#include <stdexcept>
#include <initializer_list>
#include <span>

namespace hybridsat {
namespace {

bool Eval(const BoolFun& f, std::initializer_list<bool> args) {
  return f.Eval(std::span<const bool>(args.begin(), args.size()));
}

TEST(BoolFunTest, EvalExamples) {
  EXPECT_TRUE(Eval(fn::And(), {true, true}));
  EXPECT_TRUE(Eval(fn::AndNot(), {true, false}));
  EXPECT_FALSE(Eval(fn::Zero(), {}));
  EXPECT_TRUE(Eval(fn::One(), {}));
}

TEST(BoolFunTest, TableOrderFirstArgumentMostSignificant) {
  // x and not y is true only on (1,0), which is row 2.
  EXPECT_EQ(fn::AndNot().Bits(), "0010");
  EXPECT_EQ(fn::And().Literal(), "f#0001/2");
  EXPECT_EQ(fn::Implies().Bits(), "1101");
}

TEST(BoolFunTest, ArityMismatchThrows) {
  EXPECT_THROW(Eval(fn::And(), {true}), std::invalid_argument);
  EXPECT_THROW(BoolFun(1, 0b100), std::invalid_argument);
  EXPECT_THROW(BoolFun(7, 0), std::invalid_argument);
}

TEST(BoolFunTest, Properties) {
  EXPECT_TRUE(HasProperty(fn::Or(), Property::kOneReproducing));
  EXPECT_TRUE(HasProperty(fn::AndNot(), Property::kOneSeparating));
  EXPECT_TRUE(HasProperty(fn::DBase(), Property::kSelfDual));
  EXPECT_FALSE(HasProperty(fn::DBase(), Property::kMonotone));
  EXPECT_TRUE(HasProperty(fn::Xor(), Property::kAffine));
  EXPECT_FALSE(HasProperty(fn::And(), Property::kAffine));
  EXPECT_TRUE(HasProperty(fn::Not(), Property::kDependsOnAtMostOne));
  EXPECT_TRUE(HasProperty(fn::Or(), Property::kDisjunctionShaped));
  EXPECT_FALSE(HasProperty(fn::And(), Property::kDisjunctionShaped));
  EXPECT_TRUE(HasProperty(fn::And(), Property::kConjunctionShaped));
  EXPECT_TRUE(HasProperty(fn::Zero(), Property::kIdentityOrConstant));
  EXPECT_FALSE(HasProperty(fn::Not(), Property::kIdentityOrConstant));
  EXPECT_TRUE(HasProperty(fn::AndOr(), Property::kMonotone));
  EXPECT_TRUE(HasProperty(fn::AndOr(), Property::kOneSeparating));
}

TEST(BoolFunTest, DependsOn) {
  const BoolFun first(2, 0b1100);  // projection onto x
  EXPECT_TRUE(first.DependsOn(0));
  EXPECT_FALSE(first.DependsOn(1));
  EXPECT_EQ(first.EssentialCount(), 1);
  EXPECT_EQ(first, BoolFun::Projection(2, 0));
}

TEST(BoolFunTest, ParseConnective) {
  EXPECT_EQ(ParseConnective("and"), fn::And());
  EXPECT_EQ(ParseConnective("impl"), fn::Implies());
  EXPECT_EQ(ParseConnective("f#0001/2"), fn::And());
  EXPECT_EQ(ParseConnective("0"), fn::Zero());
  EXPECT_EQ(ParseConnective("f#01/1"), fn::Id());
  EXPECT_FALSE(ParseConnective("nand").has_value());
  EXPECT_FALSE(ParseConnective("f#001/2").has_value());
  EXPECT_EQ(ConnectiveName(fn::Xor()), "xor");
  EXPECT_EQ(ConnectiveName(fn::AndNot()), "f#0010/2");
}

}  // namespace
}  // namespace hybridsat
