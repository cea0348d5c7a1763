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

#include "hybridsat/deciders.h"

#include <gtest/gtest.h>

#include "hybridsat/complexity.h"
#include "hybridsat/error.h"
#include "hybridsat/oracle.h"
#include "hybridsat/parser.h"
#include "hybridsat/simple_form.h"
#include "hybridsat/triangle.h"

namespace hybridsat {
namespace {

constexpr FrameClass kAll = FrameClass::kAll;
constexpr FrameClass kTrans = FrameClass::kTrans;
constexpr FrameClass kTotal = FrameClass::kTotal;
constexpr FrameClass kER = FrameClass::kER;

void ExpectWitness(const Verdict& v, const Formula& phi, FrameClass f) {
  ASSERT_EQ(v.answer, Answer::kSat);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(FrameSatisfies(v.witness->model, f));
  EXPECT_TRUE(Check(v.witness->model, v.witness->assignment, v.witness->state, phi));
}

TEST(DecideR1Test, Examples) {
  for (const char* text : {"or(p, q)", "dia box impl(p, q)", "down x . at x dia x"}) {
    const Formula phi = Parse(text);
    const Verdict v = DecideR1(phi);
    EXPECT_TRUE(v.complete);
    EXPECT_EQ(v.procedure, "decide_r1");
    EXPECT_EQ(v.label, "trivial");
    ExpectWitness(v, phi, kER);
  }
  EXPECT_THROW(DecideR1(Parse("not p")), PreconditionError);
}

TEST(DecideFinalSymbolTest, Examples) {
  const Formula a = Parse("at i dia dia p");
  ExpectWitness(DecideFinalSymbol(a, kTotal), a, kTotal);
  EXPECT_EQ(DecideFinalSymbol(Parse("down x . dia 0"), kER).answer, Answer::kUnsat);
  const Formula x = Parse("x:x");
  ExpectWitness(DecideFinalSymbol(x, kAll), x, kAll);
  EXPECT_THROW(DecideFinalSymbol(Parse("box p"), kAll), PreconditionError);
  EXPECT_THROW(DecideFinalSymbol(Parse("not p"), kER), PreconditionError);
}

TEST(DecideSingletonTest, Examples) {
  const Formula a = Parse("or(and(p, q), 0)");
  ExpectWitness(DecideSingleton(a, kER), a, kER);
  EXPECT_EQ(DecideSingleton(Parse("and(dia 0, p)"), kTotal).answer, Answer::kUnsat);
  const Formula c = Parse("down x . and(x, dia x)");
  ExpectWitness(DecideSingleton(c, kTotal), c, kTotal);
  EXPECT_TRUE(DecideSingleton(c, kTotal).complete);
  EXPECT_THROW(DecideSingleton(Parse("box p"), kAll), PreconditionError);
  EXPECT_THROW(DecideSingleton(Parse("not p"), kER), PreconditionError);
}

TEST(DecideVSplitTest, Examples) {
  const Formula a = Parse("or(box 0, p)");
  ExpectWitness(DecideVSplit(a), a, kAll);
  EXPECT_EQ(DecideVSplit(Parse("or(0, 0)")).answer, Answer::kUnsat);
  const Formula c = Parse("dia or(0, down x . box 0)");
  ExpectWitness(DecideVSplit(c), c, kAll);
  EXPECT_THROW(DecideVSplit(Parse("and(p, or(q, r))")), PreconditionError);
}

TEST(DecideNTest, KnownCases) {
  for (FrameClass f : AllFrameClasses()) {
    EXPECT_EQ(DecideN(Parse("down x . not x"), f).answer, Answer::kUnsat) << FrameClassName(f);
  }
  for (FrameClass f : {kTotal, kER}) {
    const Formula phi = Parse("down x . dia not x");
    ExpectWitness(DecideN(phi, f), phi, f);
  }
  EXPECT_EQ(DecideN(Parse("down x . box not x"), kER).answer, Answer::kUnsat);
  const Formula box0 = Parse("box 0");
  ExpectWitness(DecideN(box0, kAll), box0, kAll);
  ExpectWitness(DecideN(box0, kTrans), box0, kTrans);
  EXPECT_EQ(DecideN(box0, kTotal).answer, Answer::kUnsat);
  EXPECT_EQ(DecideN(box0, kER).answer, Answer::kUnsat);
}

TEST(DecideNTest, NominalsAndVariables) {
  const Formula a = Parse("down x . box at i not x");
  EXPECT_EQ(DecideN(a, kER).answer, Answer::kSat);
  EXPECT_EQ(DecideN(Parse("at i not n:i"), kAll).answer, Answer::kUnsat);
  EXPECT_EQ(DecideN(Parse("down x . dia at x not x"), kAll).answer, Answer::kUnsat);
  const Formula b = Parse("down x . dia dia not x");
  for (FrameClass f : AllFrameClasses()) ExpectWitness(DecideN(b, f), b, f);
  const Formula c = Parse("not not not p");
  ExpectWitness(DecideN(c, kTotal), c, kTotal);
}

TEST(DecideNTest, TransDiffersFromAll) {
  const Formula phi = Parse("down x . dia dia down y . at x box not y");
  ExpectWitness(DecideN(phi, kAll), phi, kAll);
  EXPECT_EQ(DecideN(phi, kTrans).answer, Answer::kUnsat);
}

TEST(DecideNTest, MatchesOracleOnMixedPrefixes) {
  for (const char* text :
       {"down x . box box dia not x", "down x . dia down y . box at x dia not y",
        "dia down x . dia at x box dia 0", "down x . dia at x box dia dia not x",
        "at i box down x . at i dia not x", "down x . box down y . at x dia not x"}) {
    const Formula phi = Parse(text);
    for (FrameClass f : AllFrameClasses()) {
      const Verdict v = DecideN(phi, f);
      EXPECT_TRUE(v.complete);
      EXPECT_EQ(v.answer == Answer::kSat, SatBounded(phi, f, 6).has_value())
          << text << " over " << FrameClassName(f);
    }
  }
}

TEST(TriangleTest, WorkedExample) {
  const SimpleForm sf =
      SimpleFormOf(Parse("dia box down x . dia dia down y . box at x dia down z . box at z y"));
  const auto t = TriangleTransform(sf);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->ToString(), "dia@1 box@2 dia@9 x:y");
  ASSERT_EQ(t->entries.size(), 3u);
  EXPECT_EQ(t->entries[0], (ModalityEntry{1, Operator::kDia}));
  EXPECT_EQ(t->entries[1], (ModalityEntry{2, Operator::kBox}));
  EXPECT_EQ(t->entries[2], (ModalityEntry{9, Operator::kDia}));
}

TEST(TriangleTest, SmallCases) {
  const auto a = TriangleTransform(SimpleFormOf(Parse("dia p")));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->ToString(), "dia@1 p");
  const auto b = TriangleTransform(SimpleFormOf(Parse("down x . at x p")));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->ToString(), "p");
  EXPECT_TRUE(b->entries.empty());
  EXPECT_FALSE(TriangleTransform(SimpleFormOf(Parse("dia at i p"))).has_value());
  const ModalitySequence c = AnchoredTriangle(SimpleFormOf(Parse("dia at i box p")));
  EXPECT_EQ(c.anchor, Atom::Nom("i"));
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0], (ModalityEntry{3, Operator::kBox}));
}

TEST(ComplexityTest, KnownCells) {
  const CloneReport bf = Classify({fn::And(), fn::Or(), fn::Not()});
  EXPECT_EQ(ComplexityLookup(ParseOperatorSet("dia,down"), bf, kAll), "coRE-complete");
  EXPECT_EQ(ComplexityLookup(ParseOperatorSet("dia,down"), bf, kER), "NEXP-complete");
  const CloneReport n = Classify({fn::Not()});
  EXPECT_EQ(ComplexityLookup(FullOperatorSet(), n, kTotal), "L-complete");
  EXPECT_EQ(ComplexityLookup(ParseOperatorSet("down"), n, kAll), "AC0[2]-complete");
  const CloneReport m = Classify({fn::And(), fn::Or(), fn::Zero()});
  EXPECT_EQ(ComplexityLookup(FullOperatorSet(), m, kTrans), "PSPACE-hard (upper open)");
  EXPECT_EQ(ComplexityLookup(ParseOperatorSet("dia,down"), Classify({fn::Id()}), kER), "trivial");
  EXPECT_EQ(ComplexityLookup(ParseOperatorSet("dia,down"), Classify({fn::Id(), fn::Zero()}), kER),
            "almost-trivial");
  EXPECT_EQ(ComplexityLookup(FullOperatorSet(), Classify({fn::Or()}), kAll), "trivial");
  EXPECT_EQ(ComplexityLookup(FullOperatorSet(), Classify({fn::Xor()}), kAll), "open (clone L)");
}

TEST(DispatchTest, Routing) {
  const Verdict a = Dispatch(Parse("dia down x . or(and(p, x), not q)"), kAll);
  EXPECT_EQ(a.label, "coRE-complete");
  EXPECT_FALSE(a.complete);
  EXPECT_EQ(a.procedure, "bounded_oracle");
  EXPECT_EQ(a.answer, Answer::kSat);

  for (FrameClass f : AllFrameClasses()) {
    const Verdict v = Dispatch(Parse("down x . x"), f);
    EXPECT_EQ(v.answer, Answer::kSat);
    EXPECT_EQ(v.procedure, "decide_r1");
    EXPECT_TRUE(v.complete);
  }

  const Verdict m = Dispatch(Parse("and(at i dia box 0, or(p, down x . box at x 0))"), kTrans);
  EXPECT_EQ(m.label, "PSPACE-hard (upper open)");
  EXPECT_EQ(m.procedure, "bounded_oracle");
  EXPECT_FALSE(m.complete);

  const Verdict n = Dispatch(Parse("down x . not x"), kER);
  EXPECT_EQ(n.procedure, "decide_n");
  EXPECT_EQ(n.answer, Answer::kUnsat);
  EXPECT_TRUE(n.complete);

  EXPECT_EQ(Dispatch(Parse("and(dia 0, p)"), kTotal).procedure, "decide_singleton");
  EXPECT_EQ(Dispatch(Parse("or(box 0, p)"), kAll).procedure, "decide_v_split");
  EXPECT_EQ(Dispatch(Parse("at i dia 0"), kER).procedure, "decide_final_symbol");
}

TEST(DispatchTest, UnknownIsNeverComplete) {
  const Verdict w = Dispatch(Parse("and(box and(p, not p), dia 1)"), kAll);
  EXPECT_NE(w.answer, Answer::kSat);
  EXPECT_FALSE(w.complete);
  EXPECT_FALSE(w.witness.has_value());
}

}  // namespace
}  // namespace hybridsat
