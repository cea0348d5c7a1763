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

#include "hybridsat/parser.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "hybridsat/error.h"

namespace hybridsat {
namespace {

const std::set<std::string, std::less<>>& Keywords() {
  static const std::set<std::string, std::less<>> words = {
      "dia", "box", "down", "at", "and", "or", "not", "xor", "impl", "id"};
  return words;
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  Formula ParseAll() {
    Formula phi = ParseFormula();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return phi;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool Consume(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void Expect(std::string_view token) {
    if (!Consume(token)) Fail("expected '" + std::string(token) + "'");
  }

  bool PeekChar(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  // Identifier, optionally with a kind prefix; f#bits/arity literals too.
  std::string ReadWord() {
    SkipSpace();
    const std::size_t start = pos_;
    if (text_.substr(pos_).starts_with("f#")) {
      pos_ += 2;
      while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return std::string(text_.substr(start, pos_ - start));
    }
    if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1') &&
        (pos_ + 1 == text_.size() || !IsIdentChar(text_[pos_ + 1]))) {
      ++pos_;
      return std::string(text_.substr(start, 1));
    }
    if (pos_ >= text_.size() || !IsIdentStart(text_[pos_])) return {};
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    if (pos_ + 1 < text_.size() && text_[pos_] == ':' && pos_ - start == 1 &&
        (text_[start] == 'p' || text_[start] == 'n' || text_[start] == 'x') &&
        IsIdentStart(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void CheckName(const std::string& name, std::size_t at) {
    if (!options_.allow_reserved_names && name.starts_with(kFreshPrefix)) {
      throw ParseError("names starting with '" + std::string(kFreshPrefix) +
                           "' are reserved",
                       at);
    }
  }

  bool IsBound(const std::string& name) const {
    return std::find(bound_.begin(), bound_.end(), name) != bound_.end();
  }

  // Splits "p:q" style prefixes. Returns nullopt kind for bare names.
  std::pair<std::optional<AtomKind>, std::string> SplitPrefix(const std::string& word) {
    if (word.size() > 2 && word[1] == ':') {
      switch (word[0]) {
        case 'p': return {AtomKind::kProposition, word.substr(2)};
        case 'n': return {AtomKind::kNominal, word.substr(2)};
        case 'x': return {AtomKind::kStateVar, word.substr(2)};
      }
    }
    return {std::nullopt, word};
  }

  Atom ReadTarget() {
    const std::size_t at = (SkipSpace(), pos_);
    const std::string word = ReadWord();
    if (word.empty()) Fail("expected @ target");
    auto [kind, name] = SplitPrefix(word);
    CheckName(name, at);
    if (!kind) {
      if (Keywords().contains(name)) {
        pos_ = at;
        Fail("keyword '" + name + "' cannot be an @ target");
      }
      kind = IsBound(name) ? AtomKind::kStateVar : AtomKind::kNominal;
    }
    if (*kind == AtomKind::kProposition) {
      pos_ = at;
      Fail("@ cannot target proposition '" + name + "'");
    }
    return Atom{*kind, name};
  }

  Formula ParseFormula() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    if (Consume("(")) {
      Formula inner = ParseFormula();
      Expect(")");
      return inner;
    }
    if (Consume("◇")) return Formula::Dia(ParseFormula());
    if (Consume("□")) return Formula::Box(ParseFormula());
    if (Consume("¬")) return Formula::Negate(ParseFormula());
    if (Consume("↓")) return ParseDownRest();
    if (Consume("@")) {
      Atom target = ReadTarget();
      return Formula::At(std::move(target), ParseFormula());
    }
    const std::size_t word_start = pos_;
    const std::string word = ReadWord();
    if (word.empty()) Fail("unexpected character");
    if (word == "dia") return Formula::Dia(ParseFormula());
    if (word == "box") return Formula::Box(ParseFormula());
    if (word == "down") return ParseDownRest();
    if (word == "at") {
      Atom target = ReadTarget();
      return Formula::At(std::move(target), ParseFormula());
    }
    if (auto f = ParseConnective(word)) {
      if (PeekChar('(')) {
        Expect("(");
        std::vector<Formula> args;
        if (!PeekChar(')')) {
          args.push_back(ParseFormula());
          while (Consume(",")) args.push_back(ParseFormula());
        }
        Expect(")");
        if (static_cast<int>(args.size()) != f->arity()) {
          pos_ = word_start;
          Fail("connective '" + word + "' expects " + std::to_string(f->arity()) +
               " arguments, got " + std::to_string(args.size()));
        }
        return Formula::Apply(*f, std::move(args));
      }
      if (f->arity() == 0) return Formula::Apply(*f, {});
      if (f->arity() == 1) return Formula::Apply(*f, {ParseFormula()});
      pos_ = word_start;
      Fail("connective '" + word + "' needs a parenthesized argument list");
    }
    if (word.starts_with("f#")) {
      pos_ = word_start;
      Fail("malformed truth-table literal '" + word + "'");
    }
    auto [kind, name] = SplitPrefix(word);
    CheckName(name, word_start);
    if (!kind) {
      if (Keywords().contains(name)) {
        pos_ = word_start;
        Fail("keyword '" + name + "' used as an atom");
      }
      kind = IsBound(name) ? AtomKind::kStateVar : AtomKind::kProposition;
    }
    return Formula::MakeAtom(Atom{*kind, name});
  }

  Formula ParseDownRest() {
    const std::size_t at = (SkipSpace(), pos_);
    std::string word = ReadWord();
    if (word.empty()) Fail("expected variable after down");
    auto [kind, name] = SplitPrefix(word);
    if (kind && *kind != AtomKind::kStateVar) {
      pos_ = at;
      Fail("down binds state variables only");
    }
    if (Keywords().contains(name) && !kind) {
      pos_ = at;
      Fail("keyword '" + name + "' cannot be bound");
    }
    CheckName(name, at);
    Expect(".");
    bound_.push_back(name);
    Formula body = ParseFormula();
    bound_.pop_back();
    return Formula::Down(name, std::move(body));
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

bool NeedsPrefix(const std::string& name) {
  return Keywords().contains(name) || name == "0" || name == "1";
}

void Print(const Formula& phi, std::vector<std::string>& bound, std::string& out) {
  auto is_bound = [&](const std::string& name) {
    return std::find(bound.begin(), bound.end(), name) != bound.end();
  };
  switch (phi.kind()) {
    case NodeKind::kAtom: {
      const Atom& a = phi.atom();
      const bool bare =
          !NeedsPrefix(a.name) &&
          ((a.kind == AtomKind::kStateVar && is_bound(a.name)) ||
           (a.kind == AtomKind::kProposition && !is_bound(a.name)));
      out += bare ? a.name : QualifiedName(a);
      return;
    }
    case NodeKind::kApply: {
      const BoolFun& f = phi.fun();
      out += ConnectiveName(f);
      if (f.arity() == 0) return;
      if (f.arity() == 1) {
        out += " ";
        Print(phi.args()[0], bound, out);
        return;
      }
      out += "(";
      for (std::size_t i = 0; i < phi.args().size(); ++i) {
        if (i > 0) out += ", ";
        Print(phi.args()[i], bound, out);
      }
      out += ")";
      return;
    }
    case NodeKind::kDia:
      out += "dia ";
      Print(phi.body(), bound, out);
      return;
    case NodeKind::kBox:
      out += "box ";
      Print(phi.body(), bound, out);
      return;
    case NodeKind::kDown:
      out += "down " + (NeedsPrefix(phi.var()) ? "x:" + phi.var() : phi.var()) + " . ";
      bound.push_back(phi.var());
      Print(phi.body(), bound, out);
      bound.pop_back();
      return;
    case NodeKind::kAt: {
      const Atom& t = phi.atom();
      const bool bare =
          !NeedsPrefix(t.name) &&
          ((t.kind == AtomKind::kStateVar && is_bound(t.name)) ||
           (t.kind == AtomKind::kNominal && !is_bound(t.name)));
      out += "at " + (bare ? t.name : QualifiedName(t)) + " ";
      Print(phi.body(), bound, out);
      return;
    }
  }
}

}  // namespace

Formula Parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).ParseAll();
}

std::string ToText(const Formula& phi) {
  std::vector<std::string> bound;
  std::string out;
  Print(phi, bound, out);
  return out;
}

}  // namespace hybridsat
