// Copyright 2026 The Choquet Authors.
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

#include "choquet/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "choquet/errors.h"

namespace choquet {

namespace {

const Json& ValuesNode(const Json& doc, const char*& form) {
  const Json* holder = &doc;
  if (doc.contains("values")) {
    holder = &doc.at("values");
    if (!holder->is_object()) {
      throw ParseError("field 'values' must be an object");
    }
  }
  const bool by_mask = holder->contains("by_mask");
  const bool by_subset = holder->contains("by_subset");
  if (by_mask == by_subset) {
    throw ParseError(
        "exactly one of 'by_mask' and 'by_subset' must be present");
  }
  form = by_mask ? "by_mask" : "by_subset";
  return holder->at(form);
}

double NumberField(const Json& node, const std::string& where) {
  if (!node.is_number()) {
    throw ParseError("field '" + where + "' must be a number");
  }
  return node.get<double>();
}

std::vector<double> LatticeValues(const Json& doc, int& n) {
  if (!doc.is_object()) throw ParseError("document must be an object");
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw ParseError("field 'n' must be an integer");
  }
  const auto raw_n = doc.at("n").get<long long>();
  if (raw_n < 1 || raw_n > kMaxGroundSetSize) {
    throw ParseError("field 'n' = " + std::to_string(raw_n) + " outside [1, " +
                     std::to_string(kMaxGroundSetSize) + "]");
  }
  n = static_cast<int>(raw_n);
  const char* form = nullptr;
  const Json& node = ValuesNode(doc, form);
  std::vector<double> values(LatticeSize(n), 0.0);
  if (std::string_view(form) == "by_mask") {
    if (!node.is_array() || node.size() != values.size()) {
      throw ParseError("field 'by_mask' must be an array of " +
                       std::to_string(values.size()) + " numbers");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = NumberField(node[i], "by_mask[" + std::to_string(i) + "]");
    }
  } else {
    if (!node.is_object()) {
      throw ParseError("field 'by_subset' must be an object");
    }
    std::vector<bool> seen(values.size(), false);
    for (const auto& [key, value] : node.items()) {
      SubsetMask mask = 0;
      try {
        mask = ParseSubsetKey(key, n);
      } catch (const std::invalid_argument& e) {
        throw ParseError("field 'by_subset' key \"" + key + "\": " + e.what());
      }
      if (seen[mask]) {
        throw ParseError("field 'by_subset' lists subset {" + SubsetKey(mask) +
                         "} twice");
      }
      seen[mask] = true;
      values[mask] = NumberField(value, "by_subset[\"" + key + "\"]");
    }
  }
  return values;
}

Json PointToJson(const Point& x) {
  Json out = Json::array();
  for (double c : x.coordinates()) out.push_back(c);
  return out;
}

Point PointFromJson(const Json& node, const std::string& field) {
  if (!node.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<double> coords;
  for (const Json& c : node) coords.push_back(NumberField(c, field));
  try {
    return Point(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw ParseError("field '" + field + "': " + e.what());
  }
}

}  // namespace

SetFunction SetFunctionFromJson(const Json& doc) {
  int n = 0;
  std::vector<double> values = LatticeValues(doc, n);
  try {
    return SetFunction(n, std::move(values));
  } catch (const InvalidSetFunction& e) {
    throw ParseError(e.what());
  }
}

SetFunction ParseSetFunction(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return SetFunctionFromJson(doc);
}

SetFunction ReadSetFunctionFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseSetFunction(text.str());
}

MobiusRepresentation ParseMobiusRepresentation(std::string_view text) {
  const SetFunction f = ParseSetFunction(text);
  return MobiusRepresentation(f.n(), {f.values().begin(), f.values().end()});
}

Json SetFunctionToJson(int n, std::span<const double> values) {
  Json by_subset = Json::object();
  for (std::size_t s = 0; s < values.size(); ++s) {
    by_subset[SubsetKey(static_cast<SubsetMask>(s))] = values[s];
  }
  Json doc = Json::object();
  doc["n"] = n;
  doc["by_subset"] = std::move(by_subset);
  return doc;
}

std::string WriteSetFunction(const SetFunction& f) {
  return SetFunctionToJson(f.n(), f.values()).dump(2) + "\n";
}

std::string WriteMobiusRepresentation(const MobiusRepresentation& m) {
  return SetFunctionToJson(m.n(), m.coefficients()).dump(2) + "\n";
}

Point ParsePoint(std::string_view csv) {
  std::vector<double> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    std::string_view token = csv.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw ParseError("point: malformed coordinate '" + std::string(token) +
                       "' in \"" + std::string(csv) + "\"");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return Point(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("point: ") + e.what());
  }
}

SubsetMask ParseSubsetLiteral(std::string_view csv, int n) {
  SubsetMask mask = 0;
  try {
    mask = ParseSubsetKey(csv, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("subset: ") + e.what());
  }
  if (mask == 0) throw ParseError("subset: must be nonempty");
  return mask;
}

std::string FormatDouble(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

Json SampleInputsToJson(const SampleInputs& in) {
  Json out = Json::object();
  if (in.capacity) out["capacity"] = *in.capacity;
  if (in.subset) out["subset"] = SubsetKey(*in.subset);
  if (in.x) out["x"] = PointToJson(*in.x);
  if (in.y) out["y"] = PointToJson(*in.y);
  if (in.r) out["r"] = *in.r;
  if (in.s) out["s"] = *in.s;
  if (in.lambda) out["lambda"] = *in.lambda;
  return out;
}

SampleInputs SampleInputsFromJson(const Json& doc, int n) {
  if (!doc.is_object()) throw ParseError("inputs must be an object");
  SampleInputs in;
  if (doc.contains("capacity")) {
    const Json& c = doc.at("capacity");
    if (!c.is_array()) throw ParseError("field 'capacity' must be an array");
    std::vector<double> values;
    for (const Json& v : c) values.push_back(NumberField(v, "capacity"));
    in.capacity = std::move(values);
  }
  if (doc.contains("subset")) {
    if (!doc.at("subset").is_string()) {
      throw ParseError("field 'subset' must be a string");
    }
    in.subset = ParseSubsetLiteral(doc.at("subset").get<std::string>(), n);
  }
  if (doc.contains("x")) in.x = PointFromJson(doc.at("x"), "x");
  if (doc.contains("y")) in.y = PointFromJson(doc.at("y"), "y");
  if (doc.contains("r")) in.r = NumberField(doc.at("r"), "r");
  if (doc.contains("s")) in.s = NumberField(doc.at("s"), "s");
  if (doc.contains("lambda")) in.lambda = NumberField(doc.at("lambda"), "lambda");
  return in;
}

Json AxiomReportToJson(const AxiomReport& report) {
  Json doc = Json::object();
  doc["axiom"] = AxiomName(report.axiom);
  doc["aggregator"] = {{"family", FamilyName(report.family)},
                       {"n", report.n}};
  doc["verdict"] = VerdictName(report.verdict);
  if (report.witness) {
    doc["witness"] = {{"inputs", SampleInputsToJson(report.witness->inputs)},
                      {"lhs", report.witness->lhs},
                      {"rhs", report.witness->rhs},
                      {"discrepancy", report.witness->discrepancy()}};
  } else {
    doc["witness"] = nullptr;
  }
  doc["samples_run"] = report.samples_run;
  doc["seed"] = report.seed;
  doc["tolerance"] = {{"relative", report.tolerance.relative},
                      {"absolute", report.tolerance.absolute},
                      {"falsify_threshold", report.falsify_threshold}};
  return doc;
}

std::string FormatAxiomReportText(const AxiomReport& report) {
  std::ostringstream os;
  os << AxiomName(report.axiom) << " [" << FamilyName(report.family)
     << ", n=" << report.n << "]: " << VerdictName(report.verdict) << " after "
     << report.samples_run << " samples (seed " << report.seed << ")\n";
  if (report.witness) {
    os << "  witness: " << SampleInputsToJson(report.witness->inputs).dump()
       << "\n  lhs = " << FormatDouble(report.witness->lhs)
       << ", rhs = " << FormatDouble(report.witness->rhs)
       << ", discrepancy = " << FormatDouble(report.witness->discrepancy())
       << '\n';
  }
  return os.str();
}

}  // namespace choquet
