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

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hybridsat {
namespace {

struct CloneInfo {
  CloneId id;
  std::string_view name;
};

constexpr CloneInfo kClones[] = {
    {CloneId::BF, "BF"}, {CloneId::R1, "R1"},   {CloneId::M, "M"},
    {CloneId::S1, "S1"}, {CloneId::S11, "S11"}, {CloneId::D, "D"},
    {CloneId::V, "V"},   {CloneId::E, "E"},     {CloneId::E0, "E0"},
    {CloneId::N, "N"},   {CloneId::N2, "N2"},   {CloneId::I, "I"},
    {CloneId::I0, "I0"}, {CloneId::I1, "I1"},   {CloneId::I2, "I2"},
    {CloneId::L, "L"},
};

std::uint64_t FullCount(int arity) {
  const int rows = 1 << arity;
  return rows >= 64 ? 0 : (std::uint64_t{1} << rows);
}

// Table of base[f] applied to argument tables of the given arity.
std::uint64_t Compose(const BoolFun& f, int arity, const std::uint64_t* args) {
  std::uint64_t out = 0;
  const int rows = 1 << arity;
  for (int row = 0; row < rows; ++row) {
    std::uint32_t index = 0;
    for (int j = 0; j < f.arity(); ++j) {
      index = (index << 1) | static_cast<std::uint32_t>((args[j] >> row) & 1u);
    }
    if (f.at(index)) out |= std::uint64_t{1} << row;
  }
  return out;
}

bool AllIn(const std::vector<BoolFun>& fs, const CloneSlice& slice) {
  return std::all_of(fs.begin(), fs.end(),
                     [&](const BoolFun& f) { return slice.Contains(f); });
}

}  // namespace

std::string_view CloneName(CloneId id) {
  for (const auto& info : kClones) {
    if (info.id == id) return info.name;
  }
  return "?";
}

std::optional<CloneId> ParseCloneName(std::string_view name) {
  for (const auto& info : kClones) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

const std::vector<CloneId>& AllClones() {
  static const std::vector<CloneId> all = [] {
    std::vector<CloneId> ids;
    for (const auto& info : kClones) ids.push_back(info.id);
    return ids;
  }();
  return all;
}

std::vector<BoolFun> CloneBase(CloneId id) {
  using namespace fn;
  switch (id) {
    case CloneId::BF: return {And(), Not()};
    case CloneId::R1: return {Or(), Implies()};
    case CloneId::M: return {Or(), And(), Zero(), One()};
    case CloneId::S1: return {AndNot()};
    case CloneId::S11: return {AndOr(), Zero()};
    case CloneId::D: return {DBase()};
    case CloneId::V: return {Or(), Zero(), One()};
    case CloneId::E: return {And(), Zero(), One()};
    case CloneId::E0: return {And(), Zero()};
    case CloneId::N: return {Not(), Zero(), One()};
    case CloneId::N2: return {Not()};
    case CloneId::I: return {Id(), Zero(), One()};
    case CloneId::I0: return {Id(), Zero()};
    case CloneId::I1: return {Id(), One()};
    case CloneId::I2: return {Id()};
    case CloneId::L: return {Xor(), One()};
  }
  return {};
}

bool CloneTerm::Eval(const std::vector<BoolFun>& base, int arity,
                     std::uint32_t row) const {
  if (is_projection) return (row >> (arity - 1 - index)) & 1u;
  std::uint32_t inner = 0;
  for (const CloneTerm& arg : args) {
    inner = (inner << 1) | (arg.Eval(base, arity, row) ? 1u : 0u);
  }
  return base[index].at(inner);
}

BoolFun CloneTerm::ToFunction(const std::vector<BoolFun>& base, int arity) const {
  std::uint64_t table = 0;
  for (std::uint32_t row = 0; row < (1u << arity); ++row) {
    if (Eval(base, arity, row)) table |= std::uint64_t{1} << row;
  }
  return BoolFun(arity, table);
}

std::string CloneTerm::ToString(const std::vector<BoolFun>& base) const {
  if (is_projection) return "x" + std::to_string(index + 1);
  std::string out = ConnectiveName(base[index]);
  if (args.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += args[i].ToString(base);
  }
  return out + ")";
}

CloneSlice::CloneSlice(std::vector<BoolFun> base, int max_arity)
    : base_(std::move(base)), max_arity_(max_arity) {
  if (max_arity < 1 || max_arity > 4) {
    throw std::invalid_argument("closure slices support arities 1 to 4");
  }
  std::sort(base_.begin(), base_.end());
  base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
  layers_.resize(max_arity + 1);
  for (int arity = 1; arity <= max_arity; ++arity) BuildLayer(arity);
}

void CloneSlice::BuildLayer(int arity) {
  Layer& layer = layers_[arity];
  auto add = [&](std::uint64_t table, Derivation d) {
    if (layer.ids.contains(table)) return false;
    layer.ids.emplace(table, static_cast<int>(layer.tables.size()));
    layer.tables.push_back(table);
    layer.derivations.push_back(std::move(d));
    return true;
  };
  for (int i = 0; i < arity; ++i) {
    add(BoolFun::Projection(arity, i).table(), Derivation{-1, i, {}});
  }
  const std::uint64_t full = FullCount(arity);
  // Semi-naive rounds: each round only tries tuples touching a new function.
  std::size_t old_size = 0;
  while (old_size < layer.tables.size() && layer.tables.size() != full) {
    const std::size_t size = layer.tables.size();
    for (std::size_t b = 0; b < base_.size(); ++b) {
      const BoolFun& f = base_[b];
      const int k = f.arity();
      if (k == 0) {
        // Nullary constants contribute the matching constant function.
        const std::uint64_t table = f.at(0) ? (FullCount(arity) - 1) : 0;
        if (old_size == 0) add(table, Derivation{static_cast<int>(b), 0, {}});
        continue;
      }
      std::vector<int> pick(k, 0);
      std::vector<std::uint64_t> args(k);
      while (true) {
        bool fresh = false;
        for (int j = 0; j < k; ++j) {
          fresh |= static_cast<std::size_t>(pick[j]) >= old_size;
          args[j] = layer.tables[pick[j]];
        }
        if (fresh) {
          add(Compose(f, arity, args.data()),
              Derivation{static_cast<int>(b), 0, pick});
          if (layer.tables.size() == full) return;
        }
        int j = k - 1;
        while (j >= 0 && static_cast<std::size_t>(++pick[j]) == size) {
          pick[j] = 0;
          --j;
        }
        if (j < 0) break;
      }
    }
    old_size = size;
  }
}

bool CloneSlice::Contains(const BoolFun& f) const {
  if (f.arity() == 0) {
    const std::uint64_t table = f.at(0) ? 0b11 : 0b00;
    return layers_[1].ids.contains(table);
  }
  if (f.arity() > max_arity_) return false;
  return layers_[f.arity()].ids.contains(f.table());
}

std::vector<BoolFun> CloneSlice::Functions(int arity) const {
  std::vector<BoolFun> out;
  if (arity == 0) {
    for (bool v : {false, true}) {
      if (Contains(BoolFun::Constant(v))) out.push_back(BoolFun::Constant(v));
    }
    return out;
  }
  if (arity > max_arity_) return out;
  for (const auto& [table, id] : layers_[arity].ids) out.emplace_back(arity, table);
  return out;
}

std::size_t CloneSlice::size() const {
  std::size_t total = Functions(0).size();
  for (int arity = 1; arity <= max_arity_; ++arity) total += layers_[arity].tables.size();
  return total;
}

CloneTerm CloneSlice::Expand(int arity, int id) const {
  const Derivation& d = layers_[arity].derivations[id];
  CloneTerm term;
  if (d.base_index < 0) {
    term.is_projection = true;
    term.index = d.projection;
    return term;
  }
  term.is_projection = false;
  term.index = d.base_index;
  for (int arg : d.args) term.args.push_back(Expand(arity, arg));
  return term;
}

std::optional<CloneTerm> CloneSlice::Witness(const BoolFun& f) const {
  if (f.arity() == 0) {
    // Nullary: the unary witness with its projection left dangling; callers
    // substitute any formula for x1.
    const std::uint64_t table = f.at(0) ? 0b11 : 0b00;
    auto it = layers_[1].ids.find(table);
    if (it == layers_[1].ids.end()) return std::nullopt;
    return Expand(1, it->second);
  }
  if (f.arity() > max_arity_) return std::nullopt;
  auto it = layers_[f.arity()].ids.find(f.table());
  if (it == layers_[f.arity()].ids.end()) return std::nullopt;
  return Expand(f.arity(), it->second);
}

bool operator==(const CloneSlice& a, const CloneSlice& b) {
  if (a.max_arity_ != b.max_arity_) return false;
  for (int arity = 1; arity <= a.max_arity_; ++arity) {
    if (a.Functions(arity) != b.Functions(arity)) return false;
  }
  return true;
}

CloneSlice ClosureSlice(const std::vector<BoolFun>& base, int max_arity) {
  return CloneSlice(base, max_arity);
}

CloneReport Classify(const std::vector<BoolFun>& base) {
  CloneReport report;
  auto all = [&](Property p) {
    return std::all_of(base.begin(), base.end(),
                       [&](const BoolFun& f) { return HasProperty(f, p); });
  };
  if (all(Property::kOneReproducing)) report.subset_of.insert(CloneId::R1);
  if (all(Property::kMonotone)) report.subset_of.insert(CloneId::M);
  if (all(Property::kDisjunctionShaped)) report.subset_of.insert(CloneId::V);
  if (all(Property::kConjunctionShaped)) report.subset_of.insert(CloneId::E);
  if (all(Property::kDependsOnAtMostOne)) report.subset_of.insert(CloneId::N);
  if (all(Property::kIdentityOrConstant)) report.subset_of.insert(CloneId::I);
  if (all(Property::kAffine)) report.subset_of.insert(CloneId::L);

  const CloneSlice slice(base, 3);
  report.contains_s1 = AllIn(CloneBase(CloneId::S1), slice);
  report.contains_s11 = AllIn(CloneBase(CloneId::S11), slice);
  report.contains_d = AllIn(CloneBase(CloneId::D), slice);
  report.contains_e0 = AllIn(CloneBase(CloneId::E0), slice);
  report.contains_n2 = AllIn(CloneBase(CloneId::N2), slice);
  report.contains_i0 = AllIn(CloneBase(CloneId::I0), slice);
  report.bf_with_true = report.contains_s1 || report.contains_d;
  return report;
}

std::string ToString(const CloneReport& report) {
  std::ostringstream out;
  out << "subsetOf={";
  bool first = true;
  for (CloneId id : report.subset_of) {
    out << (first ? "" : ",") << CloneName(id);
    first = false;
  }
  out << "} contains={";
  first = true;
  auto flag = [&](bool on, std::string_view name) {
    if (!on) return;
    out << (first ? "" : ",") << name;
    first = false;
  };
  flag(report.contains_s1, "S1");
  flag(report.contains_s11, "S11");
  flag(report.contains_d, "D");
  flag(report.contains_e0, "E0");
  flag(report.contains_n2, "N2");
  flag(report.contains_i0, "I0");
  out << "} bfWithTrue=" << (report.bf_with_true ? "true" : "false");
  return out.str();
}

std::optional<CloneTerm> Express(const BoolFun& f, const std::vector<BoolFun>& base) {
  if (f.arity() > 4) return std::nullopt;
  const CloneSlice slice(base, std::max(1, f.arity()));
  auto term = slice.Witness(f);
  if (!term) return std::nullopt;
  // Rebind base indices to the caller's ordering.
  const std::vector<BoolFun>& sorted = slice.base();
  auto remap = [&](auto&& self, CloneTerm& t) -> void {
    if (!t.is_projection) {
      const BoolFun& g = sorted[t.index];
      t.index = static_cast<int>(std::find(base.begin(), base.end(), g) - base.begin());
    }
    for (CloneTerm& a : t.args) self(self, a);
  };
  remap(remap, *term);
  return term;
}

}  // namespace hybridsat
