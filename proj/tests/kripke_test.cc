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

#include "hybridsat/kripke.h"

#include <gtest/gtest.h>

#include "hybridsat/error.h"
#include "hybridsat/parser.h"
#include "hybridsat/reductions.h"

namespace hybridsat {
namespace {

KripkeModel K1() {
  KripkeModel k(std::vector<std::string>{"w"});
  k.AddEdge(0, 0);
  k.SetProposition("p", {0});
  k.SetProposition("q", {0});
  return k;
}

// ({s,t}, {(s,s),(s,t)}), every variable-like proposition true everywhere.
KripkeModel K2() {
  KripkeModel k(std::vector<std::string>{"s", "t"});
  k.AddEdge(0, 0);
  k.AddEdge(0, 1);
  k.SetNominal("s", 0);
  return k;
}

TEST(KripkeTest, CheckExamples) {
  EXPECT_TRUE(Check(K1(), {}, 0, Parse("down x . dia x")));
  EXPECT_TRUE(Check(K1(), {}, 0, Parse("dia box impl(p, q)")));
  EXPECT_TRUE(Check(K1(), {}, 0, Parse("dia p")));
  EXPECT_FALSE(Check(K1(), {}, 0, Parse("box 0")));
  KripkeModel chain(3);
  chain.AddEdge(0, 1);
  chain.AddEdge(1, 2);
  for (State w = 0; w < 3; ++w) EXPECT_TRUE(Check(chain, {}, w, Parse("down x . x")));
  EXPECT_TRUE(Check(chain, {}, 0, Parse("down x . dia dia down y . at x dia not y")));
  EXPECT_FALSE(Check(chain, {}, 0, Parse("down x . dia dia down y . at x dia dia not y")));
  EXPECT_TRUE(Check(chain, {}, 0, Parse("down x . dia dia down y . at x not y")));
}

TEST(KripkeTest, QbfExampleHoldsOnK2) {
  const QbfInstance phi0{{false, true, false, true}, {{1, -2}, {-1, 2, 3, -4}}};
  EXPECT_TRUE(Check(K2(), {}, 0, GenQbf(phi0)));
  const QbfInstance single{{false}, {{1}}};
  EXPECT_TRUE(Check(K2(), {}, 0, GenQbf(single)));
  const QbfInstance contradiction{{false}, {{-1}, {1}}};
  EXPECT_FALSE(Check(K2(), {}, 0, GenQbf(contradiction)));
}

TEST(KripkeTest, SemanticErrors) {
  EXPECT_THROW(Check(K1(), {}, 0, Parse("x:x")), SemanticError);
  EXPECT_THROW(Check(K1(), {}, 0, Parse("at i p")), SemanticError);
  EXPECT_TRUE(Check(K1(), {{"x", 0}}, 0, Parse("x:x")));
  EXPECT_FALSE(Check(K1(), {}, 0, Parse("r")));
}

TEST(KripkeTest, FrameClasses) {
  KripkeModel lone(1);
  EXPECT_FALSE(FrameSatisfies(lone, FrameClass::kTotal));
  EXPECT_TRUE(FrameSatisfies(lone, FrameClass::kAll));
  EXPECT_TRUE(FrameSatisfies(lone, FrameClass::kTrans));
  EXPECT_TRUE(FrameSatisfies(K1(), FrameClass::kER));
  KripkeModel chain(3);
  chain.AddEdge(0, 1);
  chain.AddEdge(1, 2);
  EXPECT_FALSE(FrameSatisfies(chain, FrameClass::kTrans));
  chain.AddEdge(0, 2);
  EXPECT_TRUE(FrameSatisfies(chain, FrameClass::kTrans));
  EXPECT_FALSE(FrameSatisfies(chain, FrameClass::kER));
  EXPECT_EQ(ParseFrameClass("er"), FrameClass::kER);
  EXPECT_EQ(FrameClassName(FrameClass::kTrans), "trans");
  EXPECT_THROW(ParseFrameClass("s5"), ParseError);
}

int Count(const AtomSets& atoms, int n, FrameClass f) {
  int count = 0;
  EnumerateModels(atoms, n, f, [&](const KripkeModel& k) {
    EXPECT_TRUE(FrameSatisfies(k, f));
    ++count;
    return true;
  });
  return count;
}

TEST(KripkeTest, EnumerateCounts) {
  EXPECT_EQ(Count({}, 1, FrameClass::kER), 1);
  EXPECT_EQ(Count({}, 2, FrameClass::kER), 2);
  EXPECT_EQ(Count({}, 2, FrameClass::kAll), 16);
  EXPECT_EQ(Count({}, 3, FrameClass::kER), 5);
  EXPECT_EQ(Count({}, 2, FrameClass::kTotal), 9);
  EXPECT_EQ(Count({}, 2, FrameClass::kTrans), 13);
  EXPECT_EQ(Count({{"p"}, {"i"}}, 2, FrameClass::kER), 2 * 4 * 2);
}

TEST(KripkeTest, SingletonModel) {
  const Formula phi = Parse("and(p, at i dia q)");
  const KripkeModel k = SingletonModel(phi);
  EXPECT_EQ(k.size(), 1);
  EXPECT_TRUE(k.HasEdge(0, 0));
  EXPECT_EQ(k.state_name(0), "w1");
  EXPECT_TRUE(Check(k, SingletonAssignment(phi), 0, phi));
}

}  // namespace
}  // namespace hybridsat
