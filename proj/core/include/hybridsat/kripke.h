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

#ifndef HYBRIDSAT_KRIPKE_H_
#define HYBRIDSAT_KRIPKE_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hybridsat/formula.h"

namespace hybridsat {

using State = int;
// State variable name to state.
using Assignment = std::map<std::string, State>;

enum class FrameClass { kAll, kTrans, kTotal, kER };

std::string_view FrameClassName(FrameClass f);
// all, trans, total, er. Throws ParseError.
FrameClass ParseFrameClass(std::string_view text);
const std::vector<FrameClass>& AllFrameClasses();

// (W, R, η). Propositions missing from the labeling are false everywhere.
class KripkeModel {
 public:
  explicit KripkeModel(int size = 0);
  explicit KripkeModel(std::vector<std::string> state_names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& state_name(State s) const { return names_[s]; }
  std::optional<State> FindState(std::string_view name) const;

  void AddEdge(State from, State to);
  void RemoveEdge(State from, State to);
  bool HasEdge(State from, State to) const { return rel_[from * size() + to] != 0; }
  std::vector<State> Successors(State s) const;
  std::vector<std::pair<State, State>> Edges() const;

  void SetProposition(const std::string& name, std::set<State> states);
  void SetNominal(const std::string& name, State state);
  bool PropHolds(const std::string& name, State s) const;
  // nullopt when the nominal is unlabeled.
  std::optional<State> NominalState(const std::string& name) const;
  const std::map<std::string, std::set<State>>& propositions() const { return props_; }
  const std::map<std::string, State>& nominals() const { return noms_; }

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<char> rel_;
  std::map<std::string, std::set<State>> props_;
  std::map<std::string, State> noms_;
};

// The satisfaction relation. Throws SemanticError for an unbound variable
// or an unlabeled nominal.
bool Check(const KripkeModel& k, const Assignment& g, State w, const Formula& phi);

bool FrameSatisfies(const KripkeModel& k, FrameClass f);

struct AtomSets {
  std::vector<std::string> propositions;
  std::vector<std::string> nominals;
};
AtomSets AtomsOf(const Formula& phi);

// Calls visit for every model with exactly n states over the atoms whose
// frame is in f: raw relations (filtered for trans and total), partitions
// for er, every subset per proposition, every state per nominal. Stops
// early when visit returns false.
void EnumerateModels(const AtomSets& atoms, int n, FrameClass f,
                     const std::function<bool(const KripkeModel&)>& visit);

// The reflexive singleton with every proposition and nominal of phi true.
KripkeModel SingletonModel(const Formula& phi);
Assignment SingletonAssignment(const Formula& phi);

}  // namespace hybridsat

#endif  // HYBRIDSAT_KRIPKE_H_
