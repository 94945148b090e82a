// Copyright 2026 The gwlkit Authors
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

#ifndef GWLKIT_REPORT_H_
#define GWLKIT_REPORT_H_

#include <optional>
#include <string>

#include "gwlkit/refinement.h"
#include "json.hpp"

namespace gwl {

enum class ReportFormat { kJson, kCsv, kMarkdown, kText };
ReportFormat ParseReportFormat(std::string_view name);  // json, csv, md, text

struct RunReport {
  TestKind test = TestKind::kGwl;
  std::optional<GroupSpec> group;  // absent for WL
  std::optional<int> k;            // IGWL_(k) only
  RefinementResult result;
};

// { "test", "group"?, "k"?, "verdict": "distinguished" | "indistinguishable",
//   "iteration"?, "iterations_run", "stable", "termination",
//   "trace": [ { "t", "class_count", "hist1": [[colour, count]...],
//                "hist2": [...] } ... ] }
nlohmann::json RunReportToJson(const RunReport& report);
// Inverse of RunReportToJson (final colours are not serialised).
RunReport RunReportFromJson(const nlohmann::json& doc);

std::string FormatRunReport(const RunReport& report, ReportFormat format);

// One-line summary, e.g. "gwl O(3): distinguished at iteration 3".
std::string VerdictLine(const RunReport& report);

}  // namespace gwl

#endif  // GWLKIT_REPORT_H_
