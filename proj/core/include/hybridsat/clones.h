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

#ifndef HYBRIDSAT_CLONES_H_
#define HYBRIDSAT_CLONES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hybridsat/bool_fun.h"

namespace hybridsat {

enum class CloneId { BF, R1, M, S1, S11, D, V, E, E0, N, N2, I, I0, I1, I2, L };

std::string_view CloneName(CloneId id);
std::optional<CloneId> ParseCloneName(std::string_view name);
const std::vector<CloneId>& AllClones();
// Finite base of each clone. L uses {xor, 1}.
std::vector<BoolFun> CloneBase(CloneId id);

// A composition over a base: either a projection onto argument `index`, or
// base[index] applied to `args`.
struct CloneTerm {
  bool is_projection = true;
  int index = 0;
  std::vector<CloneTerm> args;

  // Pointwise value on `row` of an `arity`-ary argument tuple.
  bool Eval(const std::vector<BoolFun>& base, int arity, std::uint32_t row) const;
  BoolFun ToFunction(const std::vector<BoolFun>& base, int arity) const;
  std::string ToString(const std::vector<BoolFun>& base) const;
};

// All functions of arity <= max_arity in the clone generated by a base,
// with a composition witness for each.
class CloneSlice {
 public:
  CloneSlice(std::vector<BoolFun> base, int max_arity);

  int max_arity() const { return max_arity_; }
  const std::vector<BoolFun>& base() const { return base_; }
  bool Contains(const BoolFun& f) const;
  // Functions of the given arity, ascending by table.
  std::vector<BoolFun> Functions(int arity) const;
  std::size_t size() const;
  std::optional<CloneTerm> Witness(const BoolFun& f) const;

  friend bool operator==(const CloneSlice& a, const CloneSlice& b);

 private:
  struct Derivation {
    int base_index = -1;  // -1 for projections
    int projection = 0;
    std::vector<int> args;  // ids within the same arity layer
  };
  struct Layer {
    std::vector<std::uint64_t> tables;
    std::vector<Derivation> derivations;
    std::map<std::uint64_t, int> ids;
  };

  void BuildLayer(int arity);
  CloneTerm Expand(int arity, int id) const;

  std::vector<BoolFun> base_;
  int max_arity_;
  std::vector<Layer> layers_;  // index = arity, layer 0 unused
};

// Throws std::invalid_argument for max_arity outside [1, 4].
CloneSlice ClosureSlice(const std::vector<BoolFun>& base, int max_arity);

struct CloneReport {
  std::set<CloneId> subset_of;  // among R1, M, V, E, N, I, L
  bool contains_s1 = false;
  bool contains_s11 = false;
  bool contains_d = false;
  bool contains_e0 = false;
  bool contains_n2 = false;
  bool contains_i0 = false;
  bool bf_with_true = false;

  bool SubsetOf(CloneId id) const { return subset_of.contains(id); }
  friend bool operator==(const CloneReport&, const CloneReport&) = default;
};

CloneReport Classify(const std::vector<BoolFun>& base);
std::string ToString(const CloneReport& report);

// Composition witness for f over base, or nullopt when f is not in [base].
std::optional<CloneTerm> Express(const BoolFun& f, const std::vector<BoolFun>& base);

}  // namespace hybridsat

#endif  // HYBRIDSAT_CLONES_H_
