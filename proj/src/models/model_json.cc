// Copyright 2026 The boundread Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boundread/models/model_json.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "boundread/core/error.h"

namespace boundread {
namespace {

using nlohmann::json;

json GateToJson(const Gate& g) {
  switch (g.kind()) {
    case GateKind::kVariable: return {{"x", g.variable()}};
    case GateKind::kConstant: return {{"c", g.constant()}};
    default: break;
  }
  json out = json::array({g.is_sum() ? "+" : "*"});
  for (const Gate& c : g.children()) out.push_back(GateToJson(c));
  return out;
}

uint64_t ParseCoeff(const json& c, const Field& field) {
  if (c.is_number_unsigned()) return field.Reduce(c.get<uint64_t>());
  if (c.is_number_integer()) return field.FromSigned(c.get<int64_t>());
  throw Error(ErrorCode::kParse, "coefficient must be an integer, got " + c.dump());
}

Gate GateFromJson(const json& j, const Field& field) {
  if (j.is_object()) {
    if (j.contains("x") && j.size() == 1 && j["x"].is_number_integer()) {
      return Gate::Variable(j["x"].get<int>());
    }
    if (j.contains("c") && j.size() == 1) return Gate::Constant(ParseCoeff(j["c"], field));
    throw Error(ErrorCode::kParse, "leaf must be {\"x\": i} or {\"c\": v}, got " + j.dump());
  }
  if (j.is_array() && !j.empty() && j[0].is_string()) {
    const std::string op = j[0].get<std::string>();
    if (op != "+" && op != "*") throw Error(ErrorCode::kParse, "unknown gate operator " + op);
    std::vector<Gate> children;
    for (size_t i = 1; i < j.size(); ++i) children.push_back(GateFromJson(j[i], field));
    if (children.empty()) throw Error(ErrorCode::kParse, "gate " + op + " without children");
    return op == "+" ? Gate::Sum(std::move(children)) : Gate::Product(std::move(children));
  }
  throw Error(ErrorCode::kParse, "malformed gate " + j.dump());
}

Field ParseField(const json& j, uint64_t default_modulus) {
  if (!j.contains("p")) return Field(default_modulus);
  if (!j["p"].is_number_unsigned()) throw Error(ErrorCode::kParse, "\"p\" must be a positive integer");
  return Field(j["p"].get<uint64_t>());
}

int ParseN(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::kParse, "missing integer field \"n\"");
  }
  return j["n"].get<int>();
}

void RequireObject(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "model must be a JSON object");
}

}  // namespace

json FormulaToJson(const Formula& formula) {
  return {{"kind", "formula"},
          {"n", formula.num_vars()},
          {"p", formula.field().modulus()},
          {"root", GateToJson(formula.root())}};
}

json AbpToJson(const Abp& abp) {
  std::vector<AbpEdge> edges = abp.edges();
  std::sort(edges.begin(), edges.end(), [](const AbpEdge& a, const AbpEdge& b) {
    return std::tie(a.from, a.to, a.var, a.coeff) < std::tie(b.from, b.to, b.var, b.coeff);
  });
  json je = json::array();
  for (const AbpEdge& e : edges) {
    json edge = {{"from", e.from}, {"to", e.to}};
    if (!e.is_constant()) edge["var"] = e.var;
    edge["coeff"] = e.coeff;
    je.push_back(std::move(edge));
  }
  return {{"kind", "abp"},
          {"n", abp.num_vars()},
          {"p", abp.field().modulus()},
          {"layers", abp.layers()},
          {"edges", je}};
}

Formula FormulaFromJson(const json& j, uint64_t default_modulus) {
  RequireObject(j);
  const Field field = ParseField(j, default_modulus);
  if (!j.contains("root")) throw Error(ErrorCode::kParse, "missing field \"root\"");
  return Formula(ParseN(j), field, GateFromJson(j["root"], field));
}

Abp AbpFromJson(const json& j, uint64_t default_modulus) {
  RequireObject(j);
  const Field field = ParseField(j, default_modulus);
  if (!j.contains("layers") || !j["layers"].is_array()) {
    throw Error(ErrorCode::kParse, "missing array \"layers\"");
  }
  std::vector<std::vector<int>> layers;
  try {
    layers = j["layers"].get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kParse, "\"layers\" must be arrays of node ids");
  }
  std::vector<AbpEdge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(ErrorCode::kParse, "\"edges\" must be an array");
    for (const json& e : j["edges"]) {
      if (!e.is_object() || !e.contains("from") || !e.contains("to") ||
          !e["from"].is_number_integer() || !e["to"].is_number_integer()) {
        throw Error(ErrorCode::kParse, "edge needs integer \"from\" and \"to\": " + e.dump());
      }
      AbpEdge edge;
      edge.from = e["from"].get<int>();
      edge.to = e["to"].get<int>();
      if (e.contains("var") && !e["var"].is_null()) {
        if (!e["var"].is_number_integer()) throw Error(ErrorCode::kParse, "\"var\" must be an integer");
        edge.var = e["var"].get<int>();
        if (edge.var < 0) throw Error(ErrorCode::kParse, "negative variable index");
      }
      edge.coeff = e.contains("coeff") ? ParseCoeff(e["coeff"], field) : 1;
      edges.push_back(edge);
    }
  }
  return Abp(ParseN(j), field, std::move(layers), std::move(edges));
}

Model ModelFromJson(const json& j, uint64_t default_modulus) {
  RequireObject(j);
  std::string kind;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw Error(ErrorCode::kParse, "\"kind\" must be a string");
    kind = j["kind"].get<std::string>();
  } else if (j.contains("root")) {
    kind = "formula";
  } else if (j.contains("layers")) {
    kind = "abp";
  }
  if (kind == "formula") return FormulaFromJson(j, default_modulus);
  if (kind == "abp") return AbpFromJson(j, default_modulus);
  throw Error(ErrorCode::kParse, "unknown model kind \"" + kind + "\"");
}

json ModelToJson(const Model& model) {
  return std::visit(
      [](const auto& m) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Formula>) {
          return FormulaToJson(m);
        } else {
          return AbpToJson(m);
        }
      },
      model);
}

}  // namespace boundread
