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

#include "hybridsat/json_io.h"

#include "hybridsat/error.h"

namespace hybridsat {

using nlohmann::json;

json ModelToJson(const KripkeModel& k) {
  json states = json::array();
  for (State s = 0; s < k.size(); ++s) states.push_back(k.state_name(s));
  json rel = json::array();
  for (auto [a, b] : k.Edges()) rel.push_back({k.state_name(a), k.state_name(b)});
  json labels = json::object();
  for (const auto& [p, set] : k.propositions()) {
    json members = json::array();
    for (State s : set) members.push_back(k.state_name(s));
    labels["p:" + p] = members;
  }
  for (const auto& [i, s] : k.nominals()) labels["n:" + i] = json::array({k.state_name(s)});
  return {{"states", states}, {"rel", rel}, {"labels", labels}};
}

State StateFromJson(const KripkeModel& k, const json& j) {
  if (j.is_number_integer()) {
    const int s = j.get<int>();
    if (s < 0 || s >= k.size()) throw SemanticError("state index out of range");
    return s;
  }
  if (!j.is_string()) throw PreconditionError("state must be a name or an index");
  auto s = k.FindState(j.get<std::string>());
  if (!s) throw SemanticError("unknown state '" + j.get<std::string>() + "'");
  return *s;
}

KripkeModel ModelFromJson(const json& j) {
  if (!j.is_object() || !j.contains("states") || !j["states"].is_array()) {
    throw PreconditionError("model needs a \"states\" array");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "states" && key != "rel" && key != "labels") {
      throw PreconditionError("unknown model field \"" + key + "\"");
    }
  }
  std::vector<std::string> names;
  for (const json& s : j["states"]) {
    names.push_back(s.is_string() ? s.get<std::string>() : s.dump());
  }
  KripkeModel k(names);
  if (j.contains("rel")) {
    for (const json& e : j["rel"]) {
      if (!e.is_array() || e.size() != 2) throw PreconditionError("edge must be a pair");
      k.AddEdge(StateFromJson(k, e[0]), StateFromJson(k, e[1]));
    }
  }
  if (j.contains("labels")) {
    for (const auto& [key, members] : j["labels"].items()) {
      if (!members.is_array()) throw PreconditionError("label value must be an array");
      std::set<State> set;
      for (const json& s : members) set.insert(StateFromJson(k, s));
      if (key.starts_with("n:")) {
        if (set.size() != 1) throw SemanticError("nominal '" + key + "' must name exactly one state");
        k.SetNominal(key.substr(2), *set.begin());
      } else if (key.starts_with("p:")) {
        k.SetProposition(key.substr(2), std::move(set));
      } else {
        k.SetProposition(key, std::move(set));
      }
    }
  }
  return k;
}

json WitnessToJson(const Witness& w) {
  json assignment = json::object();
  for (const auto& [x, s] : w.assignment) assignment[x] = w.model.state_name(s);
  return {{"model", ModelToJson(w.model)},
          {"assignment", assignment},
          {"state", w.model.state_name(w.state)}};
}

Witness WitnessFromJson(const json& j) {
  Witness w{ModelFromJson(j.at("model")), {}, 0};
  if (j.contains("assignment")) {
    for (const auto& [x, s] : j["assignment"].items()) w.assignment[x] = StateFromJson(w.model, s);
  }
  if (j.contains("state")) w.state = StateFromJson(w.model, j["state"]);
  return w;
}

json VerdictToJson(const Verdict& v) {
  json out = {{"answer", std::string(AnswerName(v.answer))},
              {"procedure", v.procedure},
              {"label", v.label},
              {"complete", v.complete}};
  out["witness"] = v.witness ? WitnessToJson(*v.witness) : json(nullptr);
  return out;
}

Verdict VerdictFromJson(const json& j) {
  Verdict v;
  const std::string answer = j.at("answer").get<std::string>();
  if (answer == "sat") {
    v.answer = Answer::kSat;
  } else if (answer == "unsat") {
    v.answer = Answer::kUnsat;
  } else if (answer == "unknown") {
    v.answer = Answer::kUnknown;
  } else {
    throw PreconditionError("unknown answer '" + answer + "'");
  }
  v.procedure = j.at("procedure").get<std::string>();
  v.label = j.at("label").get<std::string>();
  v.complete = j.at("complete").get<bool>();
  if (j.contains("witness") && !j["witness"].is_null()) v.witness = WitnessFromJson(j["witness"]);
  return v;
}

}  // namespace hybridsat
