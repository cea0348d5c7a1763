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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hybridsat/clones.h"
#include "hybridsat/complexity.h"
#include "hybridsat/deciders.h"
#include "hybridsat/error.h"
#include "hybridsat/json_io.h"
#include "hybridsat/oracle.h"
#include "hybridsat/parser.h"
#include "hybridsat/reductions.h"

namespace hs = hybridsat;
using nlohmann::json;

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw hs::PreconditionError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// A file if one exists at `arg`, else the literal text.
std::string FileOrLiteral(const std::string& arg) {
  std::error_code ec;
  if (arg == "-" || std::filesystem::is_regular_file(arg, ec) ||
      arg.starts_with("/dev/fd/") || arg.starts_with("/proc/")) {
    return ReadInput(arg);
  }
  return arg;
}

std::vector<hs::BoolFun> ParseBase(const std::string& text) {
  std::vector<hs::BoolFun> base;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto f = hs::ParseConnective(item);
    if (!f) throw hs::ParseError("unknown connective '" + item + "'", 0);
    base.push_back(*f);
  }
  return base;
}

struct Common {
  std::string frames = "all";
  int bound = 3;
  bool json = false;
};

int RunClassify(const Common& c, const std::string& ops_text, const std::string& base_text) {
  const hs::OperatorSet ops = hs::ParseOperatorSet(ops_text);
  const std::vector<hs::BoolFun> base = ParseBase(base_text);
  const hs::FrameClass f = hs::ParseFrameClass(c.frames);
  const hs::CloneReport report = hs::Classify(base);
  const std::string label = hs::ComplexityLookup(ops, report, f);
  const std::string procedure(hs::ProcedureName(hs::Route(ops, report, f)));
  if (c.json) {
    json subset = json::array();
    for (hs::CloneId id : report.subset_of) subset.push_back(std::string(hs::CloneName(id)));
    json out = {{"operators", hs::ToString(ops)},
                {"frames", std::string(hs::FrameClassName(f))},
                {"subset_of", subset},
                {"contains_s1", report.contains_s1},
                {"contains_s11", report.contains_s11},
                {"contains_d", report.contains_d},
                {"contains_e0", report.contains_e0},
                {"contains_n2", report.contains_n2},
                {"contains_i0", report.contains_i0},
                {"bf_with_true", report.bf_with_true},
                {"label", label},
                {"procedure", procedure}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "clone: " << hs::ToString(report) << "\n"
              << "label: " << label << "\n"
              << "procedure: " << procedure << "\n";
  }
  return 0;
}

int RunSolve(const Common& c, const std::string& file) {
  const hs::Formula phi = hs::Parse(ReadInput(file));
  const hs::FrameClass f = hs::ParseFrameClass(c.frames);
  const hs::Verdict v = hs::Dispatch(phi, f, c.bound);
  if (c.json) {
    std::cout << hs::VerdictToJson(v).dump(2) << "\n";
  } else {
    std::cout << "answer: " << hs::AnswerName(v.answer) << "\n"
              << "procedure: " << v.procedure << "\n"
              << "label: " << v.label << "\n"
              << "complete: " << (v.complete ? "true" : "false") << "\n";
    if (v.witness) std::cout << "witness: " << hs::WitnessToJson(*v.witness).dump() << "\n";
  }
  switch (v.answer) {
    case hs::Answer::kSat: return kExitSat;
    case hs::Answer::kUnsat: return v.complete ? kExitUnsat : kExitUnknown;
    case hs::Answer::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int RunCheck(const Common& c, const std::string& model_file, const std::string& formula_file,
             const std::string& state, const std::vector<std::string>& assigns) {
  const hs::KripkeModel k = hs::ModelFromJson(json::parse(ReadInput(model_file)));
  const hs::Formula phi = hs::Parse(ReadInput(formula_file));
  if (k.size() == 0) throw hs::SemanticError("model has no states");
  const hs::State w = state.empty() ? 0 : hs::StateFromJson(k, json(state));
  hs::Assignment g;
  for (const std::string& a : assigns) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw hs::PreconditionError("assignment must be var=state");
    g[a.substr(0, eq)] = hs::StateFromJson(k, json(a.substr(eq + 1)));
  }
  const bool result = hs::Check(k, g, w, phi);
  if (c.json) {
    std::cout << json{{"result", result}, {"state", k.state_name(w)}}.dump(2) << "\n";
  } else {
    std::cout << (result ? "true" : "false") << "\n";
  }
  return result ? kExitSat : kExitUnsat;
}

int RunGen(const Common& c, const std::string& kind, const std::string& input,
           const std::string& sidecar) {
  hs::Formula phi = hs::Formula::Constant(true);
  bool sat = false;
  std::vector<std::string> frames;
  if (kind == "ord" || kind == "ordneg") {
    const hs::OrdInstance inst = hs::ParseOrd(FileOrLiteral(input));
    const bool holds = hs::OrdHolds(inst);
    if (kind == "ord") {
      phi = hs::GenOrd(inst);
      sat = holds;
      frames = {"all", "trans"};
    } else {
      phi = hs::GenOrdNeg(inst);
      sat = !holds;
      frames = {"all", "trans", "total", "er"};
    }
  } else if (kind == "qbf") {
    std::string text = FileOrLiteral(input);
    for (char& ch : text) {
      if (ch == ';') ch = '\n';
    }
    const hs::QbfInstance inst = hs::ParseQdimacs(text);
    phi = hs::GenQbf(inst);
    sat = hs::QbfHolds(inst);
    frames = {"trans"};
  } else if (kind == "unreach") {
    const hs::DagInstance inst = hs::ParseDag(FileOrLiteral(input));
    phi = hs::GenUnreach(inst);
    sat = !hs::Reachable(inst);
    frames = {"trans"};
  } else if (kind == "parity") {
    const std::string bits = input == "-" ? "" : input;
    phi = hs::GenParity(bits);
    sat = std::count(bits.begin(), bits.end(), '1') % 2 == 0;
    frames = {"all", "trans", "total", "er"};
  } else {
    throw hs::PreconditionError("unknown generator '" + kind + "'");
  }
  const std::string text = hs::ToText(phi);
  const std::string label = sat ? "sat" : "unsat";
  const json meta = {{"kind", kind}, {"formula", text}, {"label", label}, {"frames", frames}};
  if (!sidecar.empty()) {
    std::ofstream out(sidecar);
    if (!out) throw hs::PreconditionError("cannot write '" + sidecar + "'");
    out << meta.dump(2) << "\n";
  }
  if (c.json) {
    std::cout << meta.dump(2) << "\n";
  } else {
    std::string joined;
    for (const auto& f : frames) joined += (joined.empty() ? "" : ",") + f;
    std::cout << text << "\n# label: " << label << "\n# frames: " << joined << "\n";
  }
  return 0;
}

int RunOracle(const Common& c, const std::string& file) {
  const hs::Formula phi = hs::Parse(ReadInput(file));
  const hs::FrameClass f = hs::ParseFrameClass(c.frames);
  if (c.bound < 1) throw hs::PreconditionError("--bound must be at least 1");
  const auto w = hs::SatBounded(phi, f, c.bound);
  if (c.json) {
    json out = {{"found", w.has_value()}, {"bound", c.bound}};
    out["witness"] = w ? hs::WitnessToJson(*w) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else if (w) {
    std::cout << "witness: " << hs::WitnessToJson(*w).dump() << "\n";
  } else {
    std::cout << "not-found: no model with at most " << c.bound
              << " states (this is not a proof of unsatisfiability)\n";
  }
  return w ? kExitSat : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satisfiability tools for hybrid modal logic HL(O,B)"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool bound) {
    sub->add_option("--frames", common.frames, "all, trans, total or er")
        ->check(CLI::IsMember({"all", "trans", "total", "er"}));
    if (bound) sub->add_option("--bound", common.bound, "oracle state bound")->check(CLI::PositiveNumber);
    sub->add_flag("--json", common.json, "JSON output");
  };

  std::string ops_text = "dia,box,down,at";
  std::string base_text;
  auto* classify = app.add_subcommand("classify", "report the clone, complexity label and procedure");
  classify->add_option("--ops", ops_text, "operators, e.g. dia,box,down,at");
  classify->add_option("--base", base_text, "connectives, e.g. and,or,not or f#0110/2")->required();
  add_common(classify, false);

  std::string file;
  auto* solve = app.add_subcommand("solve", "decide satisfiability of a formula file");
  solve->add_option("file", file, "formula file, - for stdin")->required();
  add_common(solve, true);

  std::string model_file, formula_file, state;
  std::vector<std::string> assigns;
  auto* check = app.add_subcommand("check", "model-check a formula on a JSON model");
  check->add_option("model", model_file, "model JSON file")->required();
  check->add_option("formula", formula_file, "formula file")->required();
  check->add_option("--state", state, "evaluation state (default: first)");
  check->add_option("--assign", assigns, "variable assignment var=state")->take_all();
  check->add_flag("--json", common.json, "JSON output");

  std::string kind, input, sidecar;
  auto* gen = app.add_subcommand("gen", "emit a reduction instance with its ground-truth label");
  gen->add_option("kind", kind, "ord, ordneg, qbf, unreach or parity")
      ->required()
      ->check(CLI::IsMember({"ord", "ordneg", "qbf", "unreach", "parity"}));
  gen->add_option("input", input, "instance file or literal text")->required();
  gen->add_option("--sidecar", sidecar, "write the JSON sidecar to this file");
  gen->add_flag("--json", common.json, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "bounded model search only");
  oracle->add_option("file", file, "formula file, - for stdin")->required();
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return RunClassify(common, ops_text, base_text);
    if (*solve) return RunSolve(common, file);
    if (*check) return RunCheck(common, model_file, formula_file, state, assigns);
    if (*gen) return RunGen(common, kind, input, sidecar);
    if (*oracle) return RunOracle(common, file);
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
