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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hybridsat/complexity.h"
#include "hybridsat/error.h"
#include "hybridsat/free_model.h"
#include "hybridsat/simple_form.h"
#include "hybridsat/triangle.h"

namespace hybridsat {
namespace {

bool AllHave(const Formula& phi, Property p) {
  for (const BoolFun& f : FunctionsUsed(phi)) {
    if (!HasProperty(f, p)) return false;
  }
  return true;
}

std::string LabelFor(const Formula& phi, FrameClass f) {
  return ComplexityLookup(OperatorsUsed(phi), Classify(FunctionsUsedList(phi)), f);
}

Verdict Make(Answer a, Procedure p, std::string label, std::optional<Witness> w = {}) {
  return Verdict{a, std::move(w), std::string(ProcedureName(p)), std::move(label), true};
}

// Labels anything in phi the witness does not mention; unmentioned symbols
// never affect the value.
Witness Complete(Witness w, const Formula& phi) {
  for (const auto& p : Propositions(phi)) {
    if (!w.model.propositions().contains(p)) w.model.SetProposition(p, {});
  }
  for (const auto& i : Nominals(phi)) {
    if (!w.model.NominalState(i)) w.model.SetNominal(i, w.state);
  }
  for (const auto& x : FreeVariables(phi)) {
    if (!w.assignment.contains(x)) w.assignment[x] = w.state;
  }
  return w;
}

std::optional<Witness> Verified(std::optional<Witness> w, const Formula& phi, FrameClass f) {
  if (w) {
    Witness c = Complete(std::move(*w), phi);
    if (FrameSatisfies(c.model, f) && Check(c.model, c.assignment, c.state, phi)) return c;
  }
  return SatBounded(phi, f, std::min<int>(static_cast<int>(phi.Size()) + 2, 8));
}

Witness Singleton(const Formula& phi) {
  return Witness{SingletonModel(phi), SingletonAssignment(phi), 0};
}

void Require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

// Where a sequence's last modality after the common prefix sits.
struct Source {
  Operator op;
  int pos;
};

std::size_t CommonPrefix(const ModalitySequence& a, const ModalitySequence& b) {
  std::size_t k = 0;
  while (k < a.entries.size() && k < b.entries.size() && a.entries[k] == b.entries[k]) ++k;
  return k;
}

bool TotalConditions(const ModalitySequence& a, const ModalitySequence& b) {
  if (a.entries.size() != b.entries.size()) return true;
  for (std::size_t xi = CommonPrefix(a, b); xi < a.entries.size(); ++xi) {
    const ModalityEntry& i = a.entries[xi];
    const ModalityEntry& j = b.entries[xi];
    if (i.op == Operator::kDia && j.op == Operator::kDia) return true;
    if (i.op == Operator::kDia && j.op == Operator::kBox && j.pos < i.pos) return true;
    if (i.op == Operator::kBox && j.op == Operator::kDia && i.pos < j.pos) return true;
  }
  return false;
}

bool ErConditions(const ModalitySequence& a, const ModalitySequence& b) {
  if (a.anchor != b.anchor) return true;
  const std::size_t k = CommonPrefix(a, b);
  const bool a_common = a.entries.size() == k;
  const bool b_common = b.entries.size() == k;
  if (a_common && b_common) return false;
  // An exhausted sequence ends at the shared state, like a ◇ taken first.
  const Source sa = a_common ? Source{Operator::kDia, 0}
                             : Source{a.entries.back().op, a.entries.back().pos};
  const Source sb = b_common ? Source{Operator::kDia, 0}
                             : Source{b.entries.back().op, b.entries.back().pos};
  if (sa.op == Operator::kDia && sb.op == Operator::kDia) return sa.pos != sb.pos;
  if (sa.op == Operator::kDia) return sa.pos > sb.pos;
  if (sb.op == Operator::kDia) return sb.pos > sa.pos;
  return false;
}

// Replaces nominals and free variables by variables bound at successors of a
// fresh root, so every @ target is bound.
SimpleForm EliminateNamed(const SimpleForm& sf, FreshNames& fresh) {
  std::set<std::string> nominals, free_vars, bound;
  auto note = [&](const Atom& a) {
    if (a.kind == AtomKind::kNominal) nominals.insert(a.name);
    if (a.kind == AtomKind::kStateVar && !bound.contains(a.name)) free_vars.insert(a.name);
  };
  for (const PrefixOp& p : sf.prefix) {
    if (p.op == Operator::kDown) bound.insert(p.atom.name);
    if (p.op == Operator::kAt) note(p.atom);
  }
  if (!sf.terminal.is_constant) note(sf.terminal.atom);
  if (nominals.empty() && free_vars.empty()) return sf;

  SimpleForm psi;
  const std::string r = fresh.Next();
  psi.prefix.push_back({Operator::kDown, Atom::Var(r)});
  std::map<std::string, std::string> rename;
  auto spoke = [&](const std::string& var) {
    psi.prefix.push_back({Operator::kDia, Atom{}});
    psi.prefix.push_back({Operator::kDown, Atom::Var(var)});
    psi.prefix.push_back({Operator::kAt, Atom::Var(r)});
  };
  for (const auto& x : free_vars) spoke(x);
  for (const auto& i : nominals) {
    rename[i] = fresh.Next();
    spoke(rename[i]);
  }
  psi.prefix.push_back({Operator::kDia, Atom{}});
  auto subst = [&](const Atom& a) {
    return a.kind == AtomKind::kNominal ? Atom::Var(rename.at(a.name)) : a;
  };
  for (const PrefixOp& p : sf.prefix) {
    psi.prefix.push_back(p.op == Operator::kAt ? PrefixOp{p.op, subst(p.atom)} : p);
  }
  psi.terminal = sf.terminal;
  if (!psi.terminal.is_constant) psi.terminal.atom = subst(psi.terminal.atom);
  return psi;
}

// Prefix up to and including the binder of the terminal's variable, closed
// with 1. nullopt when that variable is free.
std::optional<SimpleForm> CutAtBinder(const SimpleForm& sf) {
  for (std::size_t m = sf.prefix.size(); m-- > 0;) {
    const PrefixOp& p = sf.prefix[m];
    if (p.op == Operator::kDown && p.atom.name == sf.terminal.atom.name) {
      SimpleForm cut;
      cut.prefix.assign(sf.prefix.begin(), sf.prefix.begin() + m + 1);
      cut.terminal = Terminal::Const(true);
      return cut;
    }
  }
  return std::nullopt;
}

bool TotalTest(const SimpleForm& renamed, FreshNames& fresh) {
  const SimpleForm psi = EliminateNamed(renamed, fresh);
  const std::optional<SimpleForm> cut = CutAtBinder(psi);
  if (!cut) throw std::logic_error("terminal variable left unbound");
  const auto a = TriangleTransform(psi);
  const auto b = TriangleTransform(*cut);
  if (!a || !b) throw std::logic_error("transform undefined on a closed formula");
  return TotalConditions(*a, *b);
}

bool ErTest(const SimpleForm& renamed) {
  const ModalitySequence a = AnchoredTriangle(renamed);
  ModalitySequence b;
  const Atom& target = renamed.terminal.atom;
  if (target.kind == AtomKind::kNominal) {
    b.anchor = target;
  } else if (auto cut = CutAtBinder(renamed)) {
    b = AnchoredTriangle(*cut);
  } else {
    b.anchor = target;
  }
  return ErConditions(a, b);
}

// Projections of a V-formula: one per atom or constant occurrence, keeping
// the unary operators on the way down.
std::vector<Formula> Projections(const Formula& phi) {
  std::vector<Formula> out;
  switch (phi.kind()) {
    case NodeKind::kAtom:
      out.push_back(phi);
      break;
    case NodeKind::kApply: {
      const BoolFun& f = phi.fun();
      if (f.IsConstant()) {
        out.push_back(Formula::Constant(f.at(0)));
        break;
      }
      for (int i = 0; i < f.arity(); ++i) {
        if (!f.DependsOn(i)) continue;
        for (Formula& p : Projections(phi.args()[i])) out.push_back(std::move(p));
      }
      break;
    }
    case NodeKind::kDia:
      for (const Formula& p : Projections(phi.body())) out.push_back(Formula::Dia(p));
      break;
    case NodeKind::kBox:
      for (const Formula& p : Projections(phi.body())) out.push_back(Formula::Box(p));
      break;
    case NodeKind::kDown:
      for (const Formula& p : Projections(phi.body())) out.push_back(Formula::Down(phi.var(), p));
      break;
    case NodeKind::kAt:
      for (const Formula& p : Projections(phi.body())) out.push_back(Formula::At(phi.atom(), p));
      break;
  }
  return out;
}

// Follows projections and constants down to the symbol that decides phi on
// the reflexive singleton.
bool FinalSymbolNonZero(const Formula& phi) {
  const Formula* cur = &phi;
  while (true) {
    switch (cur->kind()) {
      case NodeKind::kAtom:
        return true;
      case NodeKind::kApply: {
        const BoolFun& f = cur->fun();
        if (f.IsConstant()) return f.at(0);
        int i = 0;
        while (!f.DependsOn(i)) ++i;
        cur = &cur->args()[i];
        break;
      }
      default:
        cur = &cur->body();
        break;
    }
  }
}

}  // namespace

std::string_view AnswerName(Answer a) {
  switch (a) {
    case Answer::kSat: return "sat";
    case Answer::kUnsat: return "unsat";
    case Answer::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view ProcedureName(Procedure p) {
  switch (p) {
    case Procedure::kR1: return "decide_r1";
    case Procedure::kFinalSymbol: return "decide_final_symbol";
    case Procedure::kN: return "decide_n";
    case Procedure::kSingleton: return "decide_singleton";
    case Procedure::kVSplit: return "decide_v_split";
    case Procedure::kBoundedOracle: return "bounded_oracle";
  }
  return "bounded_oracle";
}

Verdict DecideR1(const Formula& phi) {
  Require(AllHave(phi, Property::kOneReproducing), "connectives not within R1");
  return Make(Answer::kSat, Procedure::kR1, "trivial", Singleton(phi));
}

Verdict DecideFinalSymbol(const Formula& phi, FrameClass f) {
  Require(AllHave(phi, Property::kIdentityOrConstant), "connectives not within I");
  Require(f == FrameClass::kTotal || f == FrameClass::kER ||
              !OperatorsUsed(phi).contains(Operator::kBox),
          "box over frames without successors");
  const std::string label = LabelFor(phi, f);
  if (!FinalSymbolNonZero(phi)) return Make(Answer::kUnsat, Procedure::kFinalSymbol, label);
  return Make(Answer::kSat, Procedure::kFinalSymbol, label, Singleton(phi));
}

Verdict DecideSingleton(const Formula& phi, FrameClass f) {
  Require(AllHave(phi, Property::kMonotone), "connectives not within M");
  Require(f == FrameClass::kTotal || f == FrameClass::kER ||
              !OperatorsUsed(phi).contains(Operator::kBox),
          "box over frames without successors");
  const std::string label = LabelFor(phi, f);
  Witness w = Singleton(phi);
  if (!Check(w.model, w.assignment, w.state, phi)) {
    return Make(Answer::kUnsat, Procedure::kSingleton, label);
  }
  return Make(Answer::kSat, Procedure::kSingleton, label, std::move(w));
}

Verdict DecideVSplit(const Formula& phi) {
  Require(AllHave(phi, Property::kDisjunctionShaped), "connectives not within V");
  const std::string label = LabelFor(phi, FrameClass::kAll);
  for (const Formula& p : Projections(phi)) {
    Verdict v = DecideN(p, FrameClass::kAll);
    if (v.answer == Answer::kSat) {
      // Each projection implies phi.
      return Make(Answer::kSat, Procedure::kVSplit, label,
                  Verified(std::move(v.witness), phi, FrameClass::kAll));
    }
  }
  return Make(Answer::kUnsat, Procedure::kVSplit, label);
}

Verdict DecideN(const Formula& phi, FrameClass f) {
  Require(AllHave(phi, Property::kDependsOnAtMostOne), "connectives not within N");
  const std::string label = LabelFor(phi, f);
  FreshNames fresh;
  fresh.Reserve(phi);
  const SimpleForm sf = RenameBound(SimpleFormOf(phi), fresh);
  const Terminal& t = sf.terminal;
  const bool cyclic = f == FrameClass::kTotal || f == FrameClass::kER;

  auto sat = [&](std::optional<Witness> w) {
    return Make(Answer::kSat, Procedure::kN, label, Verified(std::move(w), phi, f));
  };
  auto unsat = [&] { return Make(Answer::kUnsat, Procedure::kN, label); };
  auto free_model = [&] {
    FreeModelResult r = EvaluateFreeModel(sf, f);
    return r.sat ? sat(std::move(r.model)) : unsat();
  };

  if (t.is_constant) {
    if (t.value) return sat(Singleton(phi));
    if (cyclic) return unsat();
    if (f == FrameClass::kAll) return free_model();
  } else if (!t.negated || t.atom.kind == AtomKind::kProposition) {
    Witness w = Singleton(phi);
    if (t.negated) w.model.SetProposition(t.atom.name, {});
    return sat(std::move(w));
  }

  const int n = static_cast<int>(sf.prefix.size());
  switch (f) {
    case FrameClass::kTotal:
      if (TotalTest(sf, fresh)) return sat(std::nullopt);
      return unsat();
    case FrameClass::kER:
      if (ErTest(sf)) return sat(std::nullopt);
      return unsat();
    case FrameClass::kAll:
      if (TotalTest(sf, fresh)) return sat(EvaluateFreeModel(sf, f).model);
      return free_model();
    case FrameClass::kTrans:
      break;
  }
  // Transitive free models can be infinite and need not have finite
  // counterparts. Refutations found below a depth cap are exact.
  for (int depth : {n + 1, 2 * n + 2, 4 * n + 4}) {
    FreeModelResult r = EvaluateFreeModel(sf, f, depth);
    if (!r.sat) return unsat();
    Witness w = Complete(std::move(r.model), phi);
    if (!r.truncated || Check(w.model, w.assignment, w.state, phi)) return sat(std::move(w));
    if (depth == n + 1) {
      if (auto b = SatBounded(phi, f, std::min<int>(static_cast<int>(phi.Size()) + 2, 8))) {
        return sat(std::move(b));
      }
    }
  }
  Verdict v = Make(Answer::kUnknown, Procedure::kN, label);
  v.complete = false;
  return v;
}

Procedure Route(const OperatorSet& ops, const CloneReport& report, FrameClass f) {
  const bool cyclic = f == FrameClass::kTotal || f == FrameClass::kER;
  const bool box = ops.contains(Operator::kBox);
  if (report.SubsetOf(CloneId::R1)) return Procedure::kR1;
  if (report.SubsetOf(CloneId::I) && (cyclic || !box)) return Procedure::kFinalSymbol;
  if (report.SubsetOf(CloneId::N)) return Procedure::kN;
  if (report.SubsetOf(CloneId::M) && (cyclic || !box)) return Procedure::kSingleton;
  if (report.SubsetOf(CloneId::V) && f == FrameClass::kAll) return Procedure::kVSplit;
  return Procedure::kBoundedOracle;
}

Verdict Dispatch(const Formula& phi, FrameClass f, int bound) {
  const CloneReport report = Classify(FunctionsUsedList(phi));
  switch (Route(OperatorsUsed(phi), report, f)) {
    case Procedure::kR1: return DecideR1(phi);
    case Procedure::kFinalSymbol: return DecideFinalSymbol(phi, f);
    case Procedure::kN: return DecideN(phi, f);
    case Procedure::kSingleton: return DecideSingleton(phi, f);
    case Procedure::kVSplit: return DecideVSplit(phi);
    case Procedure::kBoundedOracle: break;
  }
  Verdict v;
  v.procedure = ProcedureName(Procedure::kBoundedOracle);
  v.label = ComplexityLookup(OperatorsUsed(phi), report, f);
  v.complete = false;
  v.witness = SatBounded(phi, f, bound);
  v.answer = v.witness ? Answer::kSat : Answer::kUnknown;
  return v;
}

}  // namespace hybridsat
