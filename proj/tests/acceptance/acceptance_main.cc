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

// Acceptance checks. Prints one PASS/FAIL line per criterion; exits
// nonzero when any criterion fails. Pass criterion numbers as arguments to
// run a subset.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hybridsat/clones.h"
#include "hybridsat/complexity.h"
#include "hybridsat/deciders.h"
#include "hybridsat/error.h"
#include "hybridsat/oracle.h"
#include "hybridsat/parser.h"
#include "hybridsat/reductions.h"
#include "hybridsat/simple_form.h"
#include "hybridsat/triangle.h"
#include "support/random_formula.h"

namespace hs = hybridsat;
using hs::Answer;
using hs::BoolFun;
using hs::CloneId;
using hs::FrameClass;
using hs::Operator;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int shown = 0;

  void Fail(const std::string& what) {
    pass = false;
    if (shown++ < 10) std::cerr << "    violation: " << what << "\n";
  }
};

// ---------------------------------------------------------------------------
// Independent clone oracle: ternary truth tables as bytes.

std::uint8_t Lift(const BoolFun& f) {
  // Pad to three arguments, using the leading ones.
  std::uint8_t t = 0;
  for (int row = 0; row < 8; ++row) {
    const int sub = row >> (3 - f.arity());
    if (f.at(sub)) t |= 1u << row;
  }
  return t;
}

std::array<bool, 256> Closure3(const std::vector<BoolFun>& base) {
  std::array<bool, 256> in{};
  std::vector<std::uint8_t> items = {0xF0, 0xCC, 0xAA};
  for (auto t : items) in[t] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint8_t> snapshot = items;
    for (const BoolFun& f : base) {
      const int a = f.arity();
      std::vector<std::size_t> idx(a, 0);
      while (true) {
        std::uint8_t t = 0;
        for (int row = 0; row < 8; ++row) {
          std::uint32_t arg = 0;
          for (int k = 0; k < a; ++k) arg = (arg << 1) | ((snapshot[idx[k]] >> row) & 1u);
          if (f.at(arg)) t |= 1u << row;
        }
        if (!in[t]) {
          in[t] = true;
          items.push_back(t);
          grew = true;
        }
        int k = 0;
        while (k < a && ++idx[k] == snapshot.size()) idx[k++] = 0;
        if (k == a) break;
      }
    }
  }
  return in;
}

bool Bit(std::uint8_t t, int row) { return (t >> row) & 1u; }

bool IsMonotone3(std::uint8_t t) {
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      if ((a & b) == a && Bit(t, a) && !Bit(t, b)) return false;
    }
  }
  return true;
}

// Projections x, y, z on three arguments.
constexpr std::array<std::uint8_t, 3> kProj = {0xF0, 0xCC, 0xAA};

bool IsSubsetCombination(std::uint8_t t, bool conj) {
  if (t == 0x00 || t == 0xFF) return true;
  for (int mask = 1; mask < 8; ++mask) {
    std::uint8_t v = conj ? 0xFF : 0x00;
    for (int k = 0; k < 3; ++k) {
      if (mask & (1 << k)) v = conj ? (v & kProj[k]) : (v | kProj[k]);
    }
    if (v == t) return true;
  }
  return false;
}

bool IsAffine3(std::uint8_t t) {
  for (int mask = 0; mask < 8; ++mask) {
    std::uint8_t v = 0;
    for (int k = 0; k < 3; ++k) {
      if (mask & (1 << k)) v ^= kProj[k];
    }
    if (v == t || static_cast<std::uint8_t>(~v) == t) return true;
  }
  return false;
}

bool DependsOnAtMostOne3(std::uint8_t t) {
  int deps = 0;
  for (int k = 0; k < 3; ++k) {
    const int bit = 1 << (2 - k);
    for (int row = 0; row < 8; ++row) {
      if (Bit(t, row) != Bit(t, row ^ bit)) {
        ++deps;
        break;
      }
    }
  }
  return deps <= 1;
}

bool IsIdOrConst3(std::uint8_t t) {
  return t == 0 || t == 0xFF || std::find(kProj.begin(), kProj.end(), t) != kProj.end();
}

hs::CloneReport OracleReport(const std::vector<BoolFun>& base) {
  const auto in = Closure3(base);
  auto all = [&](const std::function<bool(std::uint8_t)>& p) {
    for (int t = 0; t < 256; ++t) {
      if (in[t] && !p(static_cast<std::uint8_t>(t))) return false;
    }
    return true;
  };
  hs::CloneReport r;
  if (all([](std::uint8_t t) { return Bit(t, 7); })) r.subset_of.insert(CloneId::R1);
  if (all(IsMonotone3)) r.subset_of.insert(CloneId::M);
  if (all([](std::uint8_t t) { return IsSubsetCombination(t, false); })) r.subset_of.insert(CloneId::V);
  if (all([](std::uint8_t t) { return IsSubsetCombination(t, true); })) r.subset_of.insert(CloneId::E);
  if (all(DependsOnAtMostOne3)) r.subset_of.insert(CloneId::N);
  if (all(IsIdOrConst3)) r.subset_of.insert(CloneId::I);
  if (all(IsAffine3)) r.subset_of.insert(CloneId::L);
  auto contains = [&](const std::vector<BoolFun>& fs) {
    return std::all_of(fs.begin(), fs.end(), [&](const BoolFun& f) { return in[Lift(f)]; });
  };
  r.contains_s1 = contains({hs::fn::AndNot()});
  r.contains_s11 = contains({hs::fn::AndOr(), hs::fn::Zero()});
  r.contains_d = contains({hs::fn::DBase()});
  r.contains_e0 = contains({hs::fn::And(), hs::fn::Zero()});
  r.contains_n2 = contains({hs::fn::Not()});
  r.contains_i0 = contains({hs::fn::Id(), hs::fn::Zero()});
  // [B ∪ {1}] = BF exactly when its binary slice is complete.
  std::vector<BoolFun> with_one = base;
  with_one.push_back(hs::fn::One());
  const auto in1 = Closure3(with_one);
  int binary = 0;
  for (int t = 0; t < 256; ++t) {
    // Functions of the first two arguments only.
    if (in1[t] && ((t >> 1) & 0x55) == (t & 0x55)) ++binary;
  }
  r.bf_with_true = binary == 16;
  return r;
}

Outcome Criterion1() {
  Outcome out;
  int bases = 0;
  for (CloneId id : hs::AllClones()) {
    if (id == CloneId::L) continue;  // no listed base
    ++bases;
    const auto base = hs::CloneBase(id);
    const hs::CloneReport got = hs::Classify(base);
    const hs::CloneReport want = OracleReport(base);
    if (!(got == want)) {
      out.Fail(std::string(hs::CloneName(id)) + ": " + hs::ToString(got) + " vs oracle " +
               hs::ToString(want));
    }
  }
  int sets = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = a; b < 16; ++b) {
      std::vector<BoolFun> base = {BoolFun(2, a)};
      if (b != a) base.push_back(BoolFun(2, b));
      ++sets;
      const hs::CloneReport got = hs::Classify(base);
      const hs::CloneReport want = OracleReport(base);
      const bool criterion = got.contains_s1 || got.contains_d;
      if (got.bf_with_true != criterion || got.bf_with_true != want.bf_with_true ||
          got.contains_s1 != want.contains_s1 || got.contains_d != want.contains_d) {
        out.Fail(base[0].Literal() + (b != a ? "," + base[1].Literal() : "") + ": " +
                 hs::ToString(got));
      }
    }
  }
  out.detail = std::to_string(bases) + " clone bases, " + std::to_string(sets) +
               " one/two-element binary bases";
  return out;
}

// ---------------------------------------------------------------------------

Outcome Criterion2() {
  Outcome out;
  struct Spot {
    const char* text;
    FrameClass f;
    Answer want;
  };
  const FrameClass all = FrameClass::kAll, trans = FrameClass::kTrans,
                   total = FrameClass::kTotal, er = FrameClass::kER;
  const std::vector<Spot> spots = {
      {"down x . not x", all, Answer::kUnsat},       {"down x . not x", trans, Answer::kUnsat},
      {"down x . not x", total, Answer::kUnsat},     {"down x . not x", er, Answer::kUnsat},
      {"down x . dia not x", total, Answer::kSat},   {"down x . dia not x", er, Answer::kSat},
      {"down x . box not x", er, Answer::kUnsat},    {"box 0", all, Answer::kSat},
      {"box 0", trans, Answer::kSat},                {"box 0", total, Answer::kUnsat},
      {"box 0", er, Answer::kUnsat},
  };
  for (const Spot& s : spots) {
    const hs::Verdict v = hs::DecideN(hs::Parse(s.text), s.f);
    if (v.answer != s.want || !v.complete) {
      out.Fail(std::string("spot ") + s.text + " over " + std::string(hs::FrameClassName(s.f)));
    }
  }

  // Prefix alphabet over variables x, y and nominal i. Prefixes are
  // enumerated up to the renaming x <-> y (x is used first), so the
  // terminal ranges over both variables.
  const std::vector<hs::PrefixOp> alpha = {
      {Operator::kDia, {}},
      {Operator::kBox, {}},
      {Operator::kDown, hs::Atom::Var("x")},
      {Operator::kDown, hs::Atom::Var("y")},
      {Operator::kAt, hs::Atom::Var("x")},
      {Operator::kAt, hs::Atom::Var("y")},
      {Operator::kAt, hs::Atom::Nom("i")},
  };
  const std::vector<hs::Terminal> terminals = {
      hs::Terminal::Literal(hs::Atom::Var("x"), false), hs::Terminal::Literal(hs::Atom::Var("x"), true),
      hs::Terminal::Literal(hs::Atom::Var("y"), false), hs::Terminal::Literal(hs::Atom::Var("y"), true),
      hs::Terminal::Literal(hs::Atom::Nom("i"), false), hs::Terminal::Literal(hs::Atom::Nom("i"), true),
      hs::Terminal::Const(false),                       hs::Terminal::Const(true),
  };
  long checks = 0, unknown = 0;
  for (int len = 0; len <= 6; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      bool canonical = true, uses_x = false;
      for (int k : idx) {
        if ((k == 3 || k == 5) && !uses_x) {
          canonical = false;
          break;
        }
        if (k == 2 || k == 4) uses_x = true;
      }
      if (canonical) {
        hs::SimpleForm sf;
        for (int k : idx) sf.prefix.push_back(alpha[k]);
        for (const hs::Terminal& t : terminals) {
          if (!t.is_constant && t.atom == hs::Atom::Var("y") && !uses_x) continue;
          sf.terminal = t;
          const hs::Formula phi = sf.ToFormula();
          for (FrameClass f : hs::AllFrameClasses()) {
            ++checks;
            const hs::Verdict v = hs::DecideN(phi, f);
            const bool oracle = hs::SatBounded(phi, f, len + 2).has_value();
            if (v.answer == Answer::kUnknown) ++unknown;
            if ((v.answer == Answer::kSat) != oracle || v.answer == Answer::kUnknown) {
              out.Fail(hs::ToText(phi) + " over " + std::string(hs::FrameClassName(f)) +
                       ": decide_n " + std::string(hs::AnswerName(v.answer)) + ", oracle " +
                       (oracle ? "witness" : "none"));
            }
          }
        }
      }
      int i = 0;
      while (i < len && ++idx[i] == static_cast<int>(alpha.size())) idx[i++] = 0;
      if (i == len) break;
    }
  }
  out.detail = std::to_string(checks) + " corpus checks + " + std::to_string(spots.size()) +
               " spot cases, " + std::to_string(unknown) + " unknown";
  return out;
}

// ---------------------------------------------------------------------------

Outcome Criterion3() {
  Outcome out;
  const hs::Formula psi =
      hs::Parse("dia box down x . dia dia down y . box at x dia down z . box at z y");
  const auto t = hs::TriangleTransform(hs::SimpleFormOf(psi));
  if (!t) {
    out.Fail("transform undefined");
    return out;
  }
  const std::vector<hs::ModalityEntry> want = {
      {1, Operator::kDia}, {2, Operator::kBox}, {9, Operator::kDia}};
  if (t->entries != want) out.Fail("positions differ: " + t->ToString());
  if (t->terminal != hs::Terminal::Literal(hs::Atom::Var("y"), false)) out.Fail("terminal");
  if (t->ToString() != "dia@1 box@2 dia@9 x:y") out.Fail("text " + t->ToString());
  out.detail = t->ToString() + " at positions (1,2,9)";
  return out;
}

// ---------------------------------------------------------------------------

Outcome Criterion4() {
  Outcome out;
  hs::testing::RandomSpec spec;
  spec.connectives = {hs::fn::And(), hs::fn::Or(), hs::fn::Zero(), hs::fn::One(),
                      BoolFun(3, 0b11101000)};  // majority
  spec.max_depth = 4;
  hs::testing::RandomFormulas gen(spec, 4004);
  int witnessed = 0;
  for (int n = 0; n < 1000; ++n) {
    const hs::Formula phi = gen.Next();
    for (FrameClass f : {FrameClass::kTotal, FrameClass::kER}) {
      const hs::Verdict v = hs::DecideSingleton(phi, f);
      const bool oracle = hs::SatBounded(phi, f, 3).has_value();
      witnessed += oracle;
      const std::string where = hs::ToText(phi) + " over " + std::string(hs::FrameClassName(f));
      if (oracle && v.answer != Answer::kSat) out.Fail("oracle witness but " + where);
      if (v.answer == Answer::kSat && !hs::SatBounded(phi, f, 1).has_value()) {
        out.Fail("sat without a one-state witness: " + where);
      }
    }
  }
  out.detail = "1000 formulas x 2 frame classes, " + std::to_string(witnessed) + " with witnesses";
  return out;
}

Outcome Criterion5() {
  Outcome out;
  hs::testing::RandomSpec spec;
  spec.connectives = {hs::fn::Or(), hs::fn::Zero(), hs::fn::One()};
  spec.max_depth = 3;
  hs::testing::RandomFormulas gen(spec, 5005);
  int sat = 0;
  for (int n = 0; n < 500; ++n) {
    const hs::Formula phi = gen.Next();
    const hs::Verdict v = hs::DecideVSplit(phi);
    const bool oracle = hs::SatBounded(phi, FrameClass::kAll, 3).has_value();
    sat += oracle;
    if ((v.answer == Answer::kSat) != oracle || !v.complete) {
      out.Fail(hs::ToText(phi) + ": decide_v_split " + std::string(hs::AnswerName(v.answer)));
    }
  }
  out.detail = "500 formulas, " + std::to_string(sat) + " satisfiable";
  return out;
}

// ---------------------------------------------------------------------------

void CheckLabel(Outcome& out, const std::string& what, const hs::Formula& phi, FrameClass f,
                int bound, bool truth) {
  if (hs::SatBounded(phi, f, bound).has_value() != truth) {
    out.Fail(what + " over " + std::string(hs::FrameClassName(f)) + " expected " +
             (truth ? "sat" : "unsat"));
  }
}

Outcome Criterion6() {
  Outcome out;
  int instances = 0;
  // ORD: every path order on up to 4 vertices, every s and t.
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    do {
      hs::OrdInstance inst{n, {}, 1, 1};
      for (int i = 0; i + 1 < n; ++i) inst.succ.push_back({order[i], order[i + 1]});
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          inst.s = s;
          inst.t = t;
          ++instances;
          const bool holds = hs::OrdHolds(inst);
          const std::string name = "ord n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                   " t=" + std::to_string(t);
          const hs::Formula ord = hs::GenOrd(inst);
          for (FrameClass f : {FrameClass::kAll, FrameClass::kTrans}) {
            CheckLabel(out, name, ord, f, 3, holds);
          }
          const hs::Formula neg = hs::GenOrdNeg(inst);
          for (FrameClass f : hs::AllFrameClasses()) CheckLabel(out, name + " neg", neg, f, 4, !holds);
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }

  // QBF: strictly alternating from ∃, up to 3 variables and 3 clauses.
  for (int vars = 1; vars <= 3; ++vars) {
    std::vector<std::vector<int>> clauses;
    int codes = 1;
    for (int v = 0; v < vars; ++v) codes *= 3;
    for (int code = 1; code < codes; ++code) {  // each variable absent, positive or negative
      std::vector<int> c;
      for (int v = 0, rest = code; v < vars; ++v, rest /= 3) {
        if (rest % 3 == 1) c.push_back(v + 1);
        if (rest % 3 == 2) c.push_back(-(v + 1));
      }
      clauses.push_back(c);
    }
    std::vector<bool> universal(vars);
    for (int v = 0; v < vars; ++v) universal[v] = v % 2 == 1;
    // Every multiset of one to three clauses.
    std::vector<int> pick;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
      if (!pick.empty()) {
        hs::QbfInstance q{universal, {}};
        std::string name = "qbf vars=" + std::to_string(vars) + " clauses=";
        for (int k : pick) {
          q.clauses.push_back(clauses[k]);
          name += std::to_string(k) + ";";
        }
        ++instances;
        CheckLabel(out, name, hs::GenQbf(q), FrameClass::kTrans, 3, hs::QbfHolds(q));
      }
      if (left == 0) return;
      for (std::size_t k = from; k < clauses.size(); ++k) {
        pick.push_back(static_cast<int>(k));
        rec(k, left - 1);
        pick.pop_back();
      }
    };
    rec(0, 3);
  }

  // DAG: every acyclic edge set on up to 3 vertices, every s != t.
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        if (u != v) pairs.push_back({u, v});
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      hs::DagInstance d{n, {}, 1, 1};
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (1u << k)) d.edges.push_back(pairs[k]);
      }
      try {
        hs::Validate(d);
      } catch (const hs::PreconditionError&) {
        continue;  // cyclic
      }
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          if (s == t) continue;
          d.s = s;
          d.t = t;
          ++instances;
          CheckLabel(out, "unreach n=" + std::to_string(n) + " mask=" + std::to_string(mask),
                     hs::GenUnreach(d), FrameClass::kTrans, 4, !hs::Reachable(d));
        }
      }
    }
  }

  // PARITY: every bit string up to length 6.
  for (int len = 0; len <= 6; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string s;
      for (int k = 0; k < len; ++k) s += (bits >> k) & 1 ? '1' : '0';
      ++instances;
      const bool even = std::popcount(static_cast<unsigned>(bits)) % 2 == 0;
      for (FrameClass f : hs::AllFrameClasses()) CheckLabel(out, "parity " + s, hs::GenParity(s), f, 3, even);
    }
  }

  const hs::QbfInstance phi0{{false, true, false, true}, {{1, -2}, {-1, 2, 3, -4}}};
  const std::string want =
      "and(and(at s dia dia 1, at s dia box 0), at s dia down x1 . at s box down x2 . "
      "at s dia down x3 . at s box down x4 . and(or(at x1 dia 1, at x2 box 0), "
      "or(or(or(at x1 box 0, at x2 dia 1), at x3 dia 1), at x4 box 0)))";
  if (hs::ToText(hs::GenQbf(phi0)) != want) out.Fail("gen_qbf(phi0) text");
  if (!(hs::GenQbf(phi0) == hs::Parse(want))) out.Fail("gen_qbf(phi0) structure");
  out.detail = std::to_string(instances) + " instances; gen_qbf(phi0) text matches";
  return out;
}

// ---------------------------------------------------------------------------

Outcome Criterion7() {
  Outcome out;
  hs::testing::RandomSpec spec;
  spec.connectives = {hs::fn::And(), hs::fn::Or(), hs::fn::Not()};
  spec.max_depth = 3;
  hs::testing::RandomFormulas gen(spec, 7007);
  int sat = 0;
  for (int n = 0; n < 300; ++n) {
    const hs::Formula phi = gen.Next();
    const bool a = hs::SatBounded(phi, FrameClass::kAll, 3).has_value();
    const bool t = hs::SatBounded(hs::Totalize(phi), FrameClass::kTotal, 4).has_value();
    sat += a;
    if (a != t) out.Fail(hs::ToText(phi) + (a ? " sat over all only" : " sat over total only"));
  }
  out.detail = "300 formulas, " + std::to_string(sat) + " satisfiable";
  return out;
}

// ---------------------------------------------------------------------------

struct Position {
  const char* name;
  std::vector<BoolFun> base;
};

std::vector<Position> Positions() {
  using namespace hs::fn;
  return {
      {"R1", {Or(), Implies()}},     {"I2", {Id()}},
      {"I0", {Id(), Zero()}},        {"I", {Id(), Zero(), One()}},
      {"N2", {Not()}},               {"N", {Not(), Zero(), One()}},
      {"E0", {And(), Zero()}},       {"E", {And(), Zero(), One()}},
      {"V", {Or(), Zero(), One()}},  {"S11", {AndOr(), Zero()}},
      {"M", {And(), Or(), Zero(), One()}},
      {"L", {Xor(), One()}},         {"S1", {AndNot()}},
      {"D", {DBase()}},              {"BF", {And(), Not()}},
  };
}

std::string CellTable() {
  std::ostringstream out;
  for (FrameClass f : hs::AllFrameClasses()) {
    for (const Position& p : Positions()) {
      const hs::CloneReport report = hs::Classify(p.base);
      for (int mask = 0; mask < 16; ++mask) {
        hs::OperatorSet ops;
        const Operator order[] = {Operator::kDia, Operator::kBox, Operator::kDown, Operator::kAt};
        for (int k = 0; k < 4; ++k) {
          if (mask & (1 << k)) ops.insert(order[k]);
        }
        const std::string text = ops.empty() ? "-" : hs::ToString(ops);
        out << hs::FrameClassName(f) << '\t' << p.name << '\t' << text << '\t'
            << hs::ComplexityLookup(ops, report, f) << '\n';
      }
    }
  }
  return out.str();
}

Outcome Criterion8() {
  Outcome out;
  const std::string path = std::string(HYBRIDSAT_GOLDEN_DIR) + "/complexity_cells.txt";
  std::ifstream in(path);
  if (!in) {
    out.Fail("cannot read " + path);
    return out;
  }
  std::string golden, line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    golden += line + '\n';
  }
  const std::string now = CellTable();
  std::istringstream a(golden), b(now);
  std::string la, lb;
  int cells = 0;
  while (true) {
    const bool ga = static_cast<bool>(std::getline(a, la));
    const bool gb = static_cast<bool>(std::getline(b, lb));
    if (!ga && !gb) break;
    ++cells;
    if (la != lb) out.Fail("golden '" + la + "' but lookup gives '" + lb + "'");
  }
  // Cells whose label is stated outright.
  struct Spot {
    const char* ops;
    const char* pos;
    FrameClass f;
    const char* label;
  };
  const std::vector<Spot> spots = {
      {"dia,down", "BF", FrameClass::kAll, "coRE-complete"},
      {"dia,down", "BF", FrameClass::kER, "NEXP-complete"},
      {"dia,box,down,at", "N", FrameClass::kTotal, "L-complete"},
      {"down", "N2", FrameClass::kAll, "AC0[2]-complete"},
      {"dia,box,down,at", "M", FrameClass::kTrans, "PSPACE-hard (upper open)"},
      {"dia,down", "I", FrameClass::kER, "almost-trivial"},
      {"dia,down", "I2", FrameClass::kER, "trivial"},
  };
  for (const Spot& s : spots) {
    for (const Position& p : Positions()) {
      if (std::string(p.name) != s.pos) continue;
      const std::string got = hs::ComplexityLookup(hs::ParseOperatorSet(s.ops), hs::Classify(p.base), s.f);
      if (got != s.label) out.Fail(std::string(s.ops) + "/" + s.pos + ": " + got);
    }
  }
  out.detail = std::to_string(cells) + " cells match the golden file";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 2 && std::string(argv[1]) == "--print-cells") {
    std::cout << CellTable();
    return 0;
  }
  struct Entry {
    int id;
    const char* name;
    Outcome (*run)();
    double limit_s;  // 0 for none
  };
  const std::vector<Entry> entries = {
      {1, "clone algebra", Criterion1, 10},
      {2, "N decider vs oracle", Criterion2, 300},
      {3, "triangle transform", Criterion3, 0},
      {4, "monotone singleton", Criterion4, 0},
      {5, "V splitting", Criterion5, 0},
      {6, "reduction ground truth", Criterion6, 0},
      {7, "totalization", Criterion7, 0},
      {8, "dispatch labels", Criterion8, 0},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  bool all_pass = true;
  for (const Entry& e : entries) {
    if (!wanted.empty() && !wanted.contains(e.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = e.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_s > 0 && secs >= e.limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(e.limit_s)) + " s limit";
    }
    all_pass &= o.pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << "criterion " << e.id << " (" << e.name << "): " << (o.pass ? "PASS" : "FAIL")
              << " - " << o.detail << " [" << t.str() << " s]" << std::endl;
  }
  return all_pass ? 0 : 1;
}
