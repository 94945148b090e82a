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

#include "gwlkit/report.h"

#include <sstream>

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

using nlohmann::json;

json HistogramToJson(const Histogram& h) {
  json arr = json::array();
  for (const auto& [colour, count] : h) arr.push_back({colour, count});
  return arr;
}

Histogram HistogramFromJson(const json& arr) {
  Histogram h;
  for (const auto& e : arr) h[e.at(0).get<int>()] = e.at(1).get<int>();
  return h;
}

std::string HistogramText(const Histogram& h) {
  std::string out;
  for (const auto& [colour, count] : h) {
    if (!out.empty()) out += ' ';
    out += std::to_string(colour) + 'x' + std::to_string(count);
  }
  return out;
}

std::string GroupName(const RunReport& r) {
  return r.group ? r.group->Name() : std::string("-");
}

GroupSpec ParseGroupName(const std::string& name) {
  // "O(3)" or "SO(2)"
  const auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')') {
    throw Error(ErrorCode::kParse, "bad group name '" + name + "'");
  }
  GroupSpec g;
  g.variant = ParseGroupVariant(name.substr(0, open));
  g.dim = std::stoul(name.substr(open + 1, name.size() - open - 2));
  return g;
}

Termination ParseTermination(const std::string& name) {
  for (Termination t : {Termination::kHistogramsDiffer, Termination::kPartitionStable,
                        Termination::kMaxIters}) {
    if (name == TerminationName(t)) return t;
  }
  throw Error(ErrorCode::kParse, "bad termination '" + name + "'");
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md") return ReportFormat::kMarkdown;
  if (name == "text") return ReportFormat::kText;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(name) + "' (expected json, csv, md or text)");
}

json RunReportToJson(const RunReport& r) {
  json doc;
  doc["test"] = TestKindName(r.test);
  if (r.group) doc["group"] = r.group->Name();
  if (r.k) doc["k"] = *r.k;
  const Verdict& v = r.result.verdict;
  doc["verdict"] = v.distinguished ? "distinguished" : "indistinguishable";
  if (v.distinguished) doc["iteration"] = v.iteration;
  doc["iterations_run"] = v.iterations_run;
  doc["stable"] = v.stable;
  doc["termination"] = TerminationName(r.result.trace.termination);
  json trace = json::array();
  for (std::size_t t = 0; t < r.result.trace.steps.size(); ++t) {
    const TraceStep& s = r.result.trace.steps[t];
    trace.push_back({{"t", t},
                     {"class_count", s.class_count},
                     {"hist1", HistogramToJson(s.hist1)},
                     {"hist2", HistogramToJson(s.hist2)}});
  }
  doc["trace"] = std::move(trace);
  return doc;
}

RunReport RunReportFromJson(const json& doc) {
  try {
    RunReport r;
    r.test = ParseTestKind(doc.at("test").get<std::string>());
    if (doc.contains("group")) r.group = ParseGroupName(doc["group"].get<std::string>());
    if (doc.contains("k")) r.k = doc["k"].get<int>();
    Verdict& v = r.result.verdict;
    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict != "distinguished" && verdict != "indistinguishable") {
      throw Error(ErrorCode::kParse, "bad verdict '" + verdict + "'");
    }
    v.distinguished = verdict == "distinguished";
    if (v.distinguished) v.iteration = doc.at("iteration").get<int>();
    v.iterations_run = doc.at("iterations_run").get<int>();
    v.stable = doc.at("stable").get<bool>();
    r.result.trace.termination = ParseTermination(doc.at("termination").get<std::string>());
    for (const auto& s : doc.at("trace")) {
      TraceStep step;
      step.class_count = s.at("class_count").get<std::size_t>();
      step.hist1 = HistogramFromJson(s.at("hist1"));
      step.hist2 = HistogramFromJson(s.at("hist2"));
      r.result.trace.steps.push_back(std::move(step));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

std::string VerdictLine(const RunReport& r) {
  std::ostringstream out;
  out << TestKindName(r.test);
  if (r.k) out << " k=" << *r.k;
  if (r.group) out << ' ' << r.group->Name();
  out << ": ";
  const Verdict& v = r.result.verdict;
  if (v.distinguished) {
    out << "distinguished at iteration " << v.iteration;
  } else {
    out << "indistinguishable after " << v.iterations_run << " iteration"
        << (v.iterations_run == 1 ? "" : "s") << " ("
        << TerminationName(r.result.trace.termination) << ", "
        << (v.stable ? "stable" : "not stable") << ")";
  }
  return out.str();
}

std::string FormatRunReport(const RunReport& r, ReportFormat format) {
  const auto& steps = r.result.trace.steps;
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kJson:
      out << RunReportToJson(r).dump(2) << '\n';
      break;
    case ReportFormat::kCsv: {
      const Verdict& v = r.result.verdict;
      out << "test,group,t,class_count,hist1,hist2,verdict,iteration,stable\n";
      for (std::size_t t = 0; t < steps.size(); ++t) {
        out << TestKindName(r.test) << ',' << GroupName(r) << ',' << t << ','
            << steps[t].class_count << ',' << HistogramText(steps[t].hist1) << ','
            << HistogramText(steps[t].hist2) << ','
            << (v.distinguished ? "distinguished" : "indistinguishable") << ','
            << (v.distinguished ? std::to_string(v.iteration) : std::string()) << ','
            << (v.stable ? "true" : "false") << '\n';
      }
      break;
    }
    case ReportFormat::kMarkdown:
      out << "**" << VerdictLine(r) << "**\n\n";
      out << "| t | classes | graph 1 | graph 2 |\n|---|---|---|---|\n";
      for (std::size_t t = 0; t < steps.size(); ++t) {
        out << "| " << t << " | " << steps[t].class_count << " | "
            << HistogramText(steps[t].hist1) << " | " << HistogramText(steps[t].hist2)
            << " |\n";
      }
      break;
    case ReportFormat::kText:
      out << VerdictLine(r) << '\n';
      for (std::size_t t = 0; t < steps.size(); ++t) {
        out << "  t=" << t << " classes=" << steps[t].class_count << "  ["
            << HistogramText(steps[t].hist1) << "] vs ["
            << HistogramText(steps[t].hist2) << "]\n";
      }
      break;
  }
  return out.str();
}

}  // namespace gwl
