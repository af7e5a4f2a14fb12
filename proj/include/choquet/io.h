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

#ifndef CHOQUET_IO_H_
#define CHOQUET_IO_H_

// Set-function document:
//
//   {"n": 2, "by_mask": [0, 3, -1, 2]}
//   {"n": 2, "by_subset": {"": 0, "1": 3, "2": -1, "1,2": 2}}
//
// by_mask lists all 2^n values in mask order; by_subset keys are comma-joined
// ascending 1-based labels and omitted subsets default to 0. Either form may
// also be nested as {"n": .., "values": {"by_mask": ..}}. Writers emit
// by_subset with every key, in mask order, with shortest round-trip decimals.

#include <filesystem>
#include <string>
#include <string_view>

#include "choquet/axioms.h"
#include "choquet/integral.h"
#include "choquet/set_function.h"
#include "json.hpp"

namespace choquet {

using Json = nlohmann::ordered_json;

// All readers throw ParseError naming the offending field; value-level
// violations (n out of range, non-finite entries) surface as ParseError too.
SetFunction SetFunctionFromJson(const Json& doc);
SetFunction ParseSetFunction(std::string_view text);
SetFunction ReadSetFunctionFile(const std::filesystem::path& path);
MobiusRepresentation ParseMobiusRepresentation(std::string_view text);

Json SetFunctionToJson(int n, std::span<const double> values);
// Pretty-printed document followed by a newline.
std::string WriteSetFunction(const SetFunction& f);
std::string WriteMobiusRepresentation(const MobiusRepresentation& m);

// "4,0,2" -> (4, 0, 2). Throws ParseError.
Point ParsePoint(std::string_view csv);
// "1,3" -> {1, 3}; throws ParseError on malformed or empty lists, labels
// outside [1, n] and duplicates.
SubsetMask ParseSubsetLiteral(std::string_view csv, int n);

// Shortest decimal that parses back to the same double.
std::string FormatDouble(double value);

Json SampleInputsToJson(const SampleInputs& inputs);
// Throws ParseError.
SampleInputs SampleInputsFromJson(const Json& doc, int n);

// {"axiom", "aggregator": {"family", "n"}, "verdict", "witness":
//  {"inputs", "lhs", "rhs", "discrepancy"} | null, "samples_run", "seed",
//  "tolerance": {"relative", "absolute", "falsify_threshold"}}
Json AxiomReportToJson(const AxiomReport& report);
std::string FormatAxiomReportText(const AxiomReport& report);

}  // namespace choquet

#endif  // CHOQUET_IO_H_
