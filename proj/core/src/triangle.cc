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

#include "hybridsat/triangle.h"

#include "hybridsat/parser.h"

namespace hybridsat {
namespace {

struct Item {
  int pos;
  PrefixOp op;
};

// Returns false on an unmatched @; `items` then starts right after it and
// `anchor` holds its target.
bool Reduce(std::vector<Item>& items, std::optional<Atom>& anchor) {
  while (true) {
    int at = -1;
    for (int k = static_cast<int>(items.size()) - 1; k >= 0; --k) {
      if (items[k].op.op == Operator::kAt) {
        at = k;
        break;
      }
    }
    if (at < 0) return true;
    const Atom& target = items[at].op.atom;
    int binder = -1;
    if (target.kind == AtomKind::kStateVar) {
      for (int k = at - 1; k >= 0; --k) {
        if (items[k].op.op == Operator::kDown && items[k].op.atom.name == target.name) {
          binder = k;
          break;
        }
      }
    }
    if (binder < 0) {
      anchor = target;
      items.erase(items.begin(), items.begin() + at + 1);
      return false;
    }
    items.erase(items.begin() + binder, items.begin() + at + 1);
  }
}

ModalitySequence Finish(const std::vector<Item>& items, const Terminal& terminal) {
  ModalitySequence seq;
  for (const Item& it : items) {
    if (it.op.op == Operator::kDia || it.op.op == Operator::kBox) {
      seq.entries.push_back({it.pos, it.op.op});
    }
  }
  seq.terminal = terminal;
  return seq;
}

std::vector<Item> Items(const SimpleForm& sf) {
  std::vector<Item> items;
  for (std::size_t k = 0; k < sf.prefix.size(); ++k) {
    items.push_back({static_cast<int>(k) + 1, sf.prefix[k]});
  }
  return items;
}

}  // namespace

std::string ModalitySequence::ToString() const {
  std::string out;
  if (anchor) out += "at " + QualifiedName(*anchor) + " ";
  for (const ModalityEntry& e : entries) {
    out += e.op == Operator::kDia ? "dia" : "box";
    out += "@" + std::to_string(e.pos) + " ";
  }
  SimpleForm t{{}, terminal};
  out += ToText(t.ToFormula());
  return out;
}

std::optional<ModalitySequence> TriangleTransform(const SimpleForm& sf) {
  std::vector<Item> items = Items(sf);
  std::optional<Atom> anchor;
  if (!Reduce(items, anchor)) return std::nullopt;
  return Finish(items, sf.terminal);
}

ModalitySequence AnchoredTriangle(const SimpleForm& sf) {
  std::vector<Item> items = Items(sf);
  std::optional<Atom> anchor;
  Reduce(items, anchor);
  ModalitySequence seq = Finish(items, sf.terminal);
  seq.anchor = anchor;
  return seq;
}

}  // namespace hybridsat
