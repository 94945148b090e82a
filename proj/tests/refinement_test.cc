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

#include "gwlkit/refinement.h"

#include <vector>

#include "gtest/gtest.h"
#include "gwlkit/diagnostics.h"
#include "gwlkit/generators.h"
#include "gwlkit/isometry.h"
#include "gwlkit/oracle.h"
#include "gwlkit/report.h"
#include "test_support.h"

namespace gwl {
namespace {

using ::gwl::testing::MakeGraph;
using ::gwl::testing::PathEdges;
using ::gwl::testing::Q;
using ::gwl::testing::V;

const GroupSpec kO3{GroupVariant::kO, 3};
const GroupSpec kO2{GroupVariant::kO, 2};

void ExpectTraceWellFormed(const RefinementResult& r, std::size_t n1, std::size_t n2) {
  ASSERT_FALSE(r.trace.steps.empty());
  std::size_t previous = 0;
  for (const auto& step : r.trace.steps) {
    int total1 = 0;
    int total2 = 0;
    for (const auto& [colour, count] : step.hist1) total1 += count;
    for (const auto& [colour, count] : step.hist2) total2 += count;
    EXPECT_EQ(static_cast<std::size_t>(total1), n1);
    EXPECT_EQ(static_cast<std::size_t>(total2), n2);
    EXPECT_GE(step.class_count, previous);
    previous = step.class_count;
  }
  if (r.verdict.distinguished) {
    const auto t = static_cast<std::size_t>(r.verdict.iteration);
    ASSERT_LT(t, r.trace.steps.size());
    EXPECT_NE(r.trace.steps[t].hist1, r.trace.steps[t].hist2);
    for (std::size_t s = 0; s < t; ++s) {
      EXPECT_EQ(r.trace.steps[s].hist1, r.trace.steps[s].hist2);
    }
  }
}

TEST(WlTest, SeparatesByDegreeAtIterationOne) {
  GeometricGraph path = MakeGraph(1, {V({0}), V({1}), V({2}), V({3})}, PathEdges(4));
  GeometricGraph star = MakeGraph(1, {V({0}), V({1}), V({2}), V({3})}, {{0, 1}, {0, 2}, {0, 3}});
  RefinementResult r = RunWl(path, star);
  EXPECT_TRUE(r.verdict.distinguished);
  EXPECT_EQ(r.verdict.iteration, 1);
  ExpectTraceWellFormed(r, 4, 4);
}

TEST(WlTest, DifferentSizesSeparateAtIterationZero) {
  GeometricGraph a = MakeGraph(1, {V({0}), V({1})}, {{0, 1}});
  GeometricGraph b = MakeGraph(1, {V({0}), V({1}), V({2})}, PathEdges(3));
  RefinementResult r = RunWl(a, b);
  EXPECT_EQ(r.verdict.iteration, 0);
  EXPECT_EQ(r.trace.termination, Termination::kHistogramsDiffer);
}

TEST(WlTest, TrianglesAndHexagonLookAlike) {
  GeneratedPair p = GenTrianglesVsHexagon(false);
  RefinementResult r = RunWl(p.g1, p.g2);
  EXPECT_FALSE(r.verdict.distinguished);
  EXPECT_TRUE(r.verdict.stable);
  EXPECT_EQ(r.trace.termination, Termination::kPartitionStable);
  ExpectTraceWellFormed(r, 6, 6);
}

TEST(GwlTest, KChainSeparatesAfterHalfLengthPlusOne) {
  for (int k = 2; k <= 6; ++k) {
    GeneratedPair p = GenKChain(k, false);
    RefinementResult r = RunGwl(p.g1, p.g2, kO3);
    EXPECT_TRUE(r.verdict.distinguished) << k;
    EXPECT_EQ(r.verdict.iteration, k / 2 + 1) << k;
    ExpectTraceWellFormed(r, p.g1.size(), p.g2.size());
    RefinementResult capped = RunGwl(p.g1, p.g2, kO3, k / 2);
    EXPECT_FALSE(capped.verdict.distinguished) << k;
    EXPECT_EQ(capped.trace.termination, Termination::kMaxIters);
  }
}

TEST(GwlTest, TrianglesAndHexagonSeparateAtOnce) {
  GeneratedPair p = GenTrianglesVsHexagon(false);
  RefinementResult r = RunGwl(p.g1, p.g2, kO2);
  EXPECT_TRUE(r.verdict.distinguished);
  EXPECT_EQ(r.verdict.iteration, 1);
}

TEST(GwlTest, DefaultBudgetFollowsDiameter) {
  GeneratedPair p = GenKChain(4, false);
  EXPECT_EQ(DefaultGwlIterations(p.g1, p.g2), 6);
  EXPECT_EQ(DefaultIterations(p.g1, p.g2), 12);
  GeneratedPair tri = GenTrianglesVsHexagon(false);
  EXPECT_EQ(DefaultGwlIterations(tri.g1, tri.g2), 12);
}

TEST(IgwlTest, KChainsStayIndistinguishable) {
  for (int k = 2; k <= 6; ++k) {
    GeneratedPair p = GenKChain(k, false);
    RefinementResult r = RunIgwl(p.g1, p.g2, kO3, 2 * (k + 2));
    EXPECT_FALSE(r.verdict.distinguished) << k;
    ExpectTraceWellFormed(r, p.g1.size(), p.g2.size());
  }
}

TEST(IgwlTest, SeesAnglesBetweenNeighbours) {
  GeometricGraph bent = MakeGraph(2, {V({0, 0}), V({1, 0}), V({0, 1})}, {{0, 1}, {0, 2}});
  GeometricGraph straight = MakeGraph(2, {V({0, 0}), V({1, 0}), V({-1, 0})}, {{0, 1}, {0, 2}});
  RefinementResult r = RunIgwl(bent, straight, kO2);
  EXPECT_TRUE(r.verdict.distinguished);
  EXPECT_EQ(r.verdict.iteration, 1);
  EXPECT_FALSE(RunWl(bent, straight).verdict.distinguished);
}

TEST(IgwlKTest, BodyOrderThreeSeparatesTrianglesFromHexagon) {
  GeneratedPair p = GenTrianglesVsHexagon(false);
  EXPECT_FALSE(RunIgwlK(p.g1, p.g2, kO2, 2).verdict.distinguished);
  RefinementResult r3 = RunIgwlK(p.g1, p.g2, kO2, 3);
  EXPECT_TRUE(r3.verdict.distinguished);
  EXPECT_EQ(r3.verdict.iteration, 1);
  EXPECT_THROW(RunIgwlK(p.g1, p.g2, kO2, 1), Error);
}

TEST(IgwlKTest, TwoBodyMatchesWlOnUnitEdgeGraphs) {
  int distinguished = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t dim = 1 + seed % 3;
    GeneratedPair p = GenUnitEdgePair(seed, dim);
    const bool wl = RunWl(p.g1, p.g2).verdict.distinguished;
    EXPECT_EQ(RunIgwlK(p.g1, p.g2, {GroupVariant::kO, dim}, 2).verdict.distinguished, wl)
        << "seed " << seed;
    distinguished += wl;
  }
  EXPECT_GT(distinguished, 20);
}

TEST(RefineTest, RejectsBadInput) {
  GeneratedPair p = GenKChain(2, false);
  EXPECT_THROW(RunGwl(p.g1, p.g2, kO3, 0), Error);
  EXPECT_THROW(RunGwl(p.g1, p.g2, kO2), Error);
  GeometricGraph flat = MakeGraph(2, {V({0, 0})}, {});
  EXPECT_THROW(RunIgwl(p.g1, flat, kO3), Error);
  EXPECT_THROW(RunWl(p.g1, p.g1, 0), Error);
}

TEST(RefineTest, SamePartitionIgnoresColourNames) {
  EXPECT_TRUE(SamePartition({0, 0, 1}, {5, 5, 2}));
  EXPECT_FALSE(SamePartition({0, 0, 1}, {5, 6, 2}));
  EXPECT_FALSE(SamePartition({0, 1, 1}, {0, 0, 1}));
}

struct Verdicts {
  bool wl, gwl, igwl, k2, k3, k4;
};

Verdicts RunAll(const GeneratedPair& p, const GroupSpec& group) {
  Verdicts v{};
  v.wl = RunWl(p.g1, p.g2).verdict.distinguished;
  v.gwl = RunGwl(p.g1, p.g2, group).verdict.distinguished;
  v.igwl = RunIgwl(p.g1, p.g2, group).verdict.distinguished;
  v.k2 = RunIgwlK(p.g1, p.g2, group, 2).verdict.distinguished;
  v.k3 = RunIgwlK(p.g1, p.g2, group, 3).verdict.distinguished;
  v.k4 = RunIgwlK(p.g1, p.g2, group, 4).verdict.distinguished;
  return v;
}

// Soundness, strictness and hierarchy on random pairs with n <= 8.
TEST(EnginePropertyTest, VerdictImplicationsOnRandomPairs) {
  int non_isomorphic = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t dim = 2 + seed % 2;
    const GroupSpec group{seed % 3 ? GroupVariant::kO : GroupVariant::kSO, dim};
    GeneratedPair p = GenRandomRadialPair(seed, 8, dim);
    const bool iso = GeometricIsomorphismOracle(p.g1, p.g2, group).isomorphic;
    const Verdicts v = RunAll(p, group);
    if (iso) {
      EXPECT_FALSE(v.wl || v.gwl || v.igwl || v.k2 || v.k3 || v.k4) << "seed " << seed;
    }
    EXPECT_TRUE(!v.igwl || v.gwl) << "seed " << seed;
    EXPECT_TRUE(!v.k2 || v.k3) << "seed " << seed;
    EXPECT_TRUE(!v.k3 || v.k4) << "seed " << seed;
    EXPECT_TRUE(!v.wl || v.k2) << "seed " << seed;
    non_isomorphic += !iso;
  }
  EXPECT_GT(non_isomorphic, 40);
}

TEST(EnginePropertyTest, GwlMatchesOracleOnSmallRadialPairs) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t dim = 2 + seed % 2;
    const GroupSpec group{seed % 2 ? GroupVariant::kO : GroupVariant::kSO, dim};
    GeneratedPair p = GenRandomRadialPair(seed, 5, dim);
    EXPECT_EQ(RunGwl(p.g1, p.g2, group).verdict.distinguished,
              !GeometricIsomorphismOracle(p.g1, p.g2, group).isomorphic)
        << "seed " << seed;
  }
}

TEST(EnginePropertyTest, FullyConnectedGraphsMakeIgwlAsStrongAsGwl) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t dim = 2 + seed % 2;
    GeneratedPair p = GenRandomCompletePair(seed, 6, dim);
    const GroupSpec group{GroupVariant::kO, dim};
    EXPECT_EQ(RunIgwl(p.g1, p.g2, group).verdict.distinguished,
              RunGwl(p.g1, p.g2, group).verdict.distinguished)
        << "seed " << seed;
  }
}

TEST(EnginePropertyTest, IsometricCopiesGiveIdenticalTraces) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GroupVariant variant = seed % 2 ? GroupVariant::kO : GroupVariant::kSO;
    GeometricGraph g = GenConnectedCloud({2 + seed % 6, 3, seed, NumericMode::kExact, Q("3/2"), 2});
    GeometricGraph h = ApplyIsometry(g, RandomRationalIsometry(g.size(), 3, variant, seed));
    const GroupSpec group{variant, 3};
    for (int engine = 0; engine < 3; ++engine) {
      auto run = [&](const GeometricGraph& second) {
        switch (engine) {
          case 0: return RunGwl(g, second, group);
          case 1: return RunIgwl(g, second, group);
          default: return RunIgwlK(g, second, group, 3);
        }
      };
      RefinementResult self = run(g);
      RefinementResult copy = run(h);
      EXPECT_FALSE(copy.verdict.distinguished);
      ASSERT_EQ(self.trace.steps.size(), copy.trace.steps.size());
      for (std::size_t t = 0; t < self.trace.steps.size(); ++t) {
        EXPECT_EQ(self.trace.steps[t].hist2, copy.trace.steps[t].hist2) << seed;
        EXPECT_EQ(copy.trace.steps[t].hist1, copy.trace.steps[t].hist2) << seed;
      }
    }
  }
}

TEST(ReportTest, JsonRoundTrip) {
  GeneratedPair p = GenKChain(4, false);
  RunReport report{TestKind::kGwl, kO3, std::nullopt, RunGwl(p.g1, p.g2, kO3)};
  const nlohmann::json doc = RunReportToJson(report);
  EXPECT_EQ(doc["verdict"], "distinguished");
  EXPECT_EQ(doc["iteration"], 3);
  EXPECT_EQ(doc["group"], "O(3)");
  RunReport back = RunReportFromJson(doc);
  EXPECT_EQ(RunReportToJson(back), doc);
  EXPECT_EQ(VerdictLine(report), "gwl O(3): distinguished at iteration 3");
  RunReport k_report{TestKind::kIgwlK, kO3, 3, RunIgwlK(p.g1, p.g2, kO3, 3)};
  EXPECT_EQ(RunReportToJson(RunReportFromJson(RunReportToJson(k_report))),
            RunReportToJson(k_report));
}

TEST(ReportTest, TextFormatsMentionTheVerdict) {
  GeneratedPair p = GenTrianglesVsHexagon(false);
  RunReport report{TestKind::kWl, std::nullopt, std::nullopt, RunWl(p.g1, p.g2)};
  for (ReportFormat f : {ReportFormat::kText, ReportFormat::kMarkdown, ReportFormat::kCsv}) {
    EXPECT_NE(FormatRunReport(report, f).find("indistinguishable"), std::string::npos);
  }
  EXPECT_THROW(ParseReportFormat("xml"), Error);
  EXPECT_EQ(ParseTestKind("igwl-k"), TestKind::kIgwlK);
  EXPECT_THROW(ParseTestKind("gnn"), Error);
}

}  // namespace
}  // namespace gwl
