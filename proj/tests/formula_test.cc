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

#include <gtest/gtest.h>

#include <string>

#include "hybridsat/error.h"
#include "hybridsat/formula.h"
#include "hybridsat/oracle.h"
#include "hybridsat/parser.h"
#include "hybridsat/rewrite.h"
#include "hybridsat/simple_form.h"

namespace hybridsat {
namespace {

TEST(ParserTest, Examples) {
  const Formula a = Parse("down x . x");
  ASSERT_EQ(a.kind(), NodeKind::kDown);
  EXPECT_EQ(a.var(), "x");
  EXPECT_EQ(a.body(), Formula::Var("x"));

  const Formula b = Parse("at s dia dia 1");
  ASSERT_EQ(b.kind(), NodeKind::kAt);
  EXPECT_EQ(b.atom(), Atom::Nom("s"));
  EXPECT_EQ(b.body(), Formula::Dia(Formula::Dia(Formula::Constant(true))));

  EXPECT_EQ(Parse("f#0001/2(p, box 0)"),
            Formula::Apply(fn::And(), {Formula::Prop("p"), Formula::Box(Formula::Constant(false))}));
}

TEST(ParserTest, UnicodeAndQualifiedNames) {
  EXPECT_EQ(Parse("↓x.◇¬x"), Parse("down x . dia not x"));
  EXPECT_EQ(Parse("@i □ p"), Parse("at n:i box p:p"));
  EXPECT_EQ(Parse("x:y").atom(), Atom::Var("y"));
  EXPECT_EQ(Parse("n:i").atom(), Atom::Nom("i"));
  EXPECT_EQ(Parse("p # trailing comment"), Formula::Prop("p"));
}

TEST(ParserTest, Errors) {
  EXPECT_THROW(Parse("at p:q p"), ParseError);
  EXPECT_THROW(Parse("and(p)"), ParseError);
  EXPECT_THROW(Parse("dia"), ParseError);
  EXPECT_THROW(Parse("down . p"), ParseError);
  EXPECT_THROW(Parse("p q"), ParseError);
  EXPECT_THROW(Parse("_k0"), ParseError);
  EXPECT_NO_THROW(Parse("_k0", {.allow_reserved_names = true}));
  try {
    Parse("and(p, )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(ParserTest, PrintReparses) {
  for (const char* text :
       {"down x . x", "at s dia dia 1", "and(or(p, not q), box down y . at y dia y)",
        "f#01101001/3(p, q, r)", "down x . at i not x", "at x:x p", "1", "not 0"}) {
    const Formula phi = Parse(text);
    EXPECT_EQ(Parse(ToText(phi), {.allow_reserved_names = true}), phi) << text;
  }
}

TEST(FormulaTest, OperatorsAndFunctions) {
  EXPECT_EQ(OperatorsUsed(Parse("down x . x")), OperatorSet{Operator::kDown});
  EXPECT_TRUE(FunctionsUsed(Parse("down x . x")).empty());

  const Formula ord = Parse("down v1 . down v2 . dia down s . at v2 at t box 0");
  EXPECT_EQ(OperatorsUsed(ord), FullOperatorSet());
  EXPECT_EQ(FunctionsUsed(ord), std::set<BoolFun>{fn::Zero()});

  const Formula q = Parse("at s dia dia 1");
  EXPECT_EQ(OperatorsUsed(q), (OperatorSet{Operator::kAt, Operator::kDia}));
  EXPECT_EQ(FunctionsUsed(q), std::set<BoolFun>{fn::One()});
}

TEST(FormulaTest, FreeSymbols) {
  const Formula phi = Parse("and(x:y, down x . at i dia and(x, p))");
  EXPECT_EQ(FreeVariables(phi), std::set<std::string>{"y"});
  EXPECT_EQ(Nominals(phi), std::set<std::string>{"i"});
  EXPECT_EQ(Propositions(phi), std::set<std::string>{"p"});
  EXPECT_EQ(VariableNames(phi), (std::set<std::string>{"x", "y"}));
}

TEST(FormulaTest, OperatorSetText) {
  EXPECT_EQ(ParseOperatorSet("dia,box,down,at"), FullOperatorSet());
  EXPECT_EQ(ParseOperatorSet("down"), OperatorSet{Operator::kDown});
  EXPECT_THROW(ParseOperatorSet("dia,until"), ParseError);
}

TEST(FormulaTest, AtRejectsPropositions) {
  EXPECT_THROW(Formula::At(Atom::Prop("p"), Formula::Prop("q")), PreconditionError);
  EXPECT_THROW(Formula::Apply(fn::And(), {Formula::Prop("p")}), PreconditionError);
}

TEST(SimpleFormTest, NegationNormalForm) {
  EXPECT_EQ(ToSimpleForm(Parse("down x . not not x")), Parse("down x . x"));
  EXPECT_EQ(ToSimpleForm(Parse("not dia down x . not x")), Parse("box down x . x"));
  EXPECT_EQ(ToSimpleForm(Parse("dia not box p")), Parse("dia dia not p"));
  EXPECT_EQ(ToSimpleForm(Parse("not at i 0")), Parse("at i 1"));
}

TEST(SimpleFormTest, Structure) {
  const SimpleForm sf = SimpleFormOf(Parse("dia down x . box at x not x"));
  ASSERT_EQ(sf.prefix.size(), 4u);
  EXPECT_EQ(sf.prefix[1], (PrefixOp{Operator::kDown, Atom::Var("x")}));
  EXPECT_EQ(sf.terminal, Terminal::Literal(Atom::Var("x"), true));
  EXPECT_THROW(SimpleFormOf(Parse("and(p, q)")), PreconditionError);
}

TEST(SimpleFormTest, RenameBoundSeparatesRebinding) {
  const Formula phi = Parse("down x . dia down x . at x not x");
  FreshNames fresh;
  fresh.Reserve(phi);
  const SimpleForm sf = RenameBound(SimpleFormOf(phi), fresh);
  ASSERT_EQ(sf.prefix.size(), 4u);
  EXPECT_NE(sf.prefix[0].atom.name, sf.prefix[2].atom.name);
  EXPECT_EQ(sf.prefix[3].atom, sf.prefix[2].atom);
  EXPECT_EQ(sf.terminal.atom, sf.prefix[2].atom);
}

TEST(RewriteTest, NegationOverS1Base) {
  const Formula out = RewriteOverBase(Parse("not p"), {fn::AndNot()}, OneReplacement::kDownXx);
  ASSERT_EQ(out.kind(), NodeKind::kApply);
  EXPECT_EQ(out.fun(), fn::AndNot());
  ASSERT_EQ(out.args().size(), 2u);
  EXPECT_EQ(out.args()[0].kind(), NodeKind::kDown);
  EXPECT_EQ(out.args()[0].body(), Formula::Var(out.args()[0].var()));
  EXPECT_EQ(out.args()[1], Formula::Prop("p"));
  for (FrameClass f : AllFrameClasses()) {
    EXPECT_EQ(SatBounded(out, f, 2).has_value(), SatBounded(Parse("not p"), f, 2).has_value());
  }
}

TEST(RewriteTest, DeMorganAndIdentity) {
  const Formula out =
      RewriteOverBase(Parse("or(p, q)"), {fn::And(), fn::Not()}, OneReplacement::kDownXx);
  EXPECT_EQ(FunctionsUsed(out), (std::set<BoolFun>{fn::And(), fn::Not()}));
  EXPECT_EQ(ToSimpleForm(Parse("not p")), Parse("not p"));
  EXPECT_EQ(RewriteOverBase(Parse("and(p, q)"), {fn::And()}, OneReplacement::kAtXx),
            Parse("and(p, q)"));
  EXPECT_THROW(RewriteOverBase(Parse("and(p, q)"), {fn::Or()}, OneReplacement::kDownXx),
               PreconditionError);
}

}  // namespace
}  // namespace hybridsat
