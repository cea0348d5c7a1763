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

#include "hybridsat/clones.h"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

namespace hybridsat {
namespace {

using C = CloneId;

struct Profile {
  CloneId id;
  std::set<CloneId> subset_of;
  std::string contains;  // letters: s=S1 t=S11 d=D e=E0 n=N2 i=I0
};

// Read off Post's lattice by hand.
const std::vector<Profile>& Profiles() {
  static const std::vector<Profile> kProfiles = {
      {C::BF, {}, "stdeni"},
      {C::R1, {C::R1}, ""},
      {C::M, {C::M}, "tei"},
      {C::S1, {}, "stei"},
      {C::S11, {C::M}, "tei"},
      {C::D, {}, "dn"},
      {C::V, {C::M, C::V}, "i"},
      {C::E, {C::M, C::E}, "ei"},
      {C::E0, {C::M, C::E}, "ei"},
      {C::N, {C::N, C::L}, "ni"},
      {C::N2, {C::N, C::L}, "n"},
      {C::I, {C::M, C::V, C::E, C::N, C::I, C::L}, "i"},
      {C::I0, {C::M, C::V, C::E, C::N, C::I, C::L}, "i"},
      {C::I1, {C::R1, C::M, C::V, C::E, C::N, C::I, C::L}, ""},
      {C::I2, {C::R1, C::M, C::V, C::E, C::N, C::I, C::L}, ""},
      {C::L, {C::L}, "ni"},
  };
  return kProfiles;
}

TEST(ClonesTest, TableBasesHaveTheirProfile) {
  for (const Profile& p : Profiles()) {
    SCOPED_TRACE(std::string(CloneName(p.id)));
    const CloneReport r = Classify(CloneBase(p.id));
    EXPECT_EQ(r.subset_of, p.subset_of);
    auto has = [&](char c) { return p.contains.find(c) != std::string::npos; };
    EXPECT_EQ(r.contains_s1, has('s'));
    EXPECT_EQ(r.contains_s11, has('t'));
    EXPECT_EQ(r.contains_d, has('d'));
    EXPECT_EQ(r.contains_e0, has('e'));
    EXPECT_EQ(r.contains_n2, has('n'));
    EXPECT_EQ(r.contains_i0, has('i'));
    EXPECT_EQ(r.bf_with_true, r.contains_s1 || r.contains_d);
    if (r.contains_s11) {
      EXPECT_FALSE(r.SubsetOf(C::V));
      EXPECT_FALSE(r.SubsetOf(C::E));
    }
  }
}

TEST(ClonesTest, NamesRoundTrip) {
  EXPECT_EQ(AllClones().size(), 16u);
  for (CloneId id : AllClones()) EXPECT_EQ(ParseCloneName(CloneName(id)), id);
  EXPECT_FALSE(ParseCloneName("R0").has_value());
}

TEST(ClonesTest, ClosureOfAndNotIsEverything) {
  const CloneSlice s = ClosureSlice({fn::And(), fn::Not()}, 2);
  EXPECT_EQ(s.Functions(2).size(), 16u);
  EXPECT_EQ(s.Functions(1).size(), 4u);
}

TEST(ClonesTest, ClosureOfIdIsProjections) {
  const CloneSlice s = ClosureSlice({fn::Id()}, 2);
  EXPECT_EQ(s.Functions(1), std::vector<BoolFun>{fn::Id()});
  EXPECT_EQ(s.Functions(2).size(), 2u);
  EXPECT_TRUE(s.Contains(BoolFun::Projection(2, 0)));
  EXPECT_TRUE(s.Contains(BoolFun::Projection(2, 1)));
}

TEST(ClonesTest, ClosureOfS1Base) {
  const CloneSlice s = ClosureSlice({fn::AndNot()}, 3);
  // x and not (y or z) = (x and not y) and not z.
  const BoolFun f(3, 0b00010000);
  EXPECT_TRUE(s.Contains(f));
  EXPECT_FALSE(s.Contains(fn::Or()));
}

TEST(ClonesTest, ClosureIsIdempotentAndMonotone) {
  const std::vector<BoolFun> base = {fn::AndOr(), fn::Zero()};
  const CloneSlice once = ClosureSlice(base, 3);
  std::vector<BoolFun> all;
  for (int a = 1; a <= 3; ++a) {
    for (const BoolFun& f : once.Functions(a)) all.push_back(f);
  }
  EXPECT_EQ(ClosureSlice(all, 3), once);
  std::vector<BoolFun> bigger = base;
  bigger.push_back(fn::Not());
  const CloneSlice more = ClosureSlice(bigger, 3);
  for (const BoolFun& f : all) EXPECT_TRUE(more.Contains(f)) << f.Literal();
}

TEST(ClonesTest, ClassifyExamples) {
  const CloneReport r1 = Classify({fn::Or(), fn::Implies()});
  EXPECT_TRUE(r1.SubsetOf(C::R1));
  EXPECT_FALSE(r1.contains_s1);
  EXPECT_FALSE(r1.bf_with_true);

  const CloneReport n = Classify({fn::Not()});
  EXPECT_TRUE(n.SubsetOf(C::N));
  EXPECT_TRUE(n.contains_n2);
  EXPECT_FALSE(n.contains_s1 || n.contains_s11 || n.contains_d || n.contains_e0 ||
               n.contains_i0);

  const CloneReport e0 = Classify({fn::And(), fn::Zero()});
  EXPECT_TRUE(e0.contains_e0);
  EXPECT_TRUE(e0.SubsetOf(C::E));
  EXPECT_TRUE(e0.SubsetOf(C::M));
}

TEST(ClonesTest, ExpressWitnessesReevaluate) {
  const std::vector<BoolFun> base = {fn::And(), fn::Not()};
  const auto t = Express(fn::Or(), base);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->ToFunction(base, 2), fn::Or());

  EXPECT_FALSE(Express(fn::And(), {fn::Or()}).has_value());

  const std::vector<BoolFun> s11 = {fn::AndNot(), fn::Zero()};
  const CloneSlice slice = ClosureSlice(s11, 3);
  const auto w = Express(fn::AndOr(), s11);
  EXPECT_EQ(w.has_value(), slice.Contains(fn::AndOr()));
  if (w) EXPECT_EQ(w->ToFunction(s11, 3), fn::AndOr());
}

TEST(ClonesTest, ExpressEveryBinaryOverBf) {
  const std::vector<BoolFun> base = {fn::AndNot(), fn::One()};
  for (std::uint64_t t = 0; t < 16; ++t) {
    const BoolFun f(2, t);
    const auto w = Express(f, base);
    ASSERT_TRUE(w.has_value()) << f.Literal();
    EXPECT_EQ(w->ToFunction(base, 2), f);
  }
}

}  // namespace
}  // namespace hybridsat
