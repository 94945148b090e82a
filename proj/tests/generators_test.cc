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

#include "gwlkit/generators.h"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "gtest/gtest.h"
#include "gwlkit/diagnostics.h"
#include "gwlkit/graph_io.h"
#include "gwlkit/isometry.h"
#include "gwlkit/oracle.h"
#include "gwlkit/refinement.h"
#include "test_support.h"

namespace gwl {
namespace {

using ::gwl::testing::Q;
using ::gwl::testing::V;

const GroupSpec kO3{GroupVariant::kO, 3};
const GroupSpec kSO2{GroupVariant::kSO, 2};

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string operator/(const std::string& leaf) const { return (path_ / leaf).string(); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(KChainTest, LayoutAndClaim) {
  GeneratedPair p = GenKChain(3);
  ASSERT_EQ(p.g1.size(), 5u);
  EXPECT_EQ(p.g1.position(0), V({0, 1, 0}));
  EXPECT_EQ(p.g1.position(2), V({2, 0, 0}));
  EXPECT_EQ(p.g1.position(4), V({4, 1, 0}));
  EXPECT_EQ(p.g2.position(4), V({4, -1, 0}));
  EXPECT_EQ(p.g1.mode(), NumericMode::kExact);
  EXPECT_EQ(p.spec.ClaimName(), "non_isomorphic_h_hop_distinct(2)");
  EXPECT_TRUE(p.spec.verified) << p.spec.verification;
  EXPECT_THROW(GenKChain(1), Error);
}

TEST(KChainTest, HopClaimsHoldForSeveralLengths) {
  for (int k = 2; k <= 6; ++k) {
    GeneratedPair p = GenKChain(k);
    EXPECT_TRUE(p.spec.verified) << k << ": " << p.spec.verification;
    EXPECT_EQ(p.spec.hops, k / 2 + 1);
    EXPECT_TRUE(HopIdentical(p.g1, p.g2, k / 2, kO3)) << k;
    EXPECT_FALSE(HopIdentical(p.g1, p.g2, k / 2 + 1, kO3)) << k;
  }
}

TEST(LFoldTest, ExactQuarterTurns) {
  GeometricGraph g = GenLFold(4, 0.0);
  EXPECT_EQ(g.mode(), NumericMode::kExact);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.position(0), V({0, 0}));
  EXPECT_EQ(g.position(1), V({1, 0}));
  EXPECT_EQ(g.position(2), V({0, 1}));
  EXPECT_EQ(g.position(3), V({-1, 0}));
  EXPECT_EQ(g.position(4), V({0, -1}));
  EXPECT_EQ(g.edges().size(), 4u);
  EXPECT_EQ(GenLFold(2, std::numbers::pi / 2).position(1), V({0, 1}));
  EXPECT_EQ(GenLFold(5, 0.0).mode(), NumericMode::kFloat);
  EXPECT_EQ(GenLFold(3, 0.0, 2).size(), 3u);
  EXPECT_EQ(GenLFold(4, 0.0, std::nullopt, 3).position(2), V({0, 1, 0}));
  EXPECT_THROW(GenLFold(0, 0.0), Error);
}

TEST(LFoldTest, ArmsLieOnTheUnitCircleAndTurnOntoThemselves) {
  for (int L = 2; L <= 10; ++L) {
    GeometricGraph g = GenLFold(L, 0.3).WithMode(NumericMode::kFloat);
    for (std::size_t i = 1; i < g.size(); ++i) {
      EXPECT_TRUE(ApproxEqual(SquaredNorm(g.position(i)), Scalar(1.0)));
    }
    IsometryWitness w;
    // Row vectors: x -> x Q turns by minus the matrix angle.
    w.rotation = PlaneRotation(2, -2 * std::numbers::pi / L);
    w.translation = {Scalar(0.0), Scalar(0.0)};
    w.permutation = {0};
    for (int m = 1; m <= L; ++m) w.permutation.push_back(static_cast<std::size_t>(m % L + 1));
    GeometricGraph turned = ApplyIsometry(g, w);
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_TRUE(ApproxEqual(turned.position(i), g.position(i))) << L << " " << i;
    }
    EXPECT_TRUE(GeometricIsomorphismOracle(
                    g, GenLFold(L, 0.3 + std::numbers::pi / L).WithMode(NumericMode::kFloat),
                    kSO2, {12})
                    .isomorphic)
        << L;
  }
}

TEST(TrianglesVsHexagonTest, UnitEdgesAndClaim) {
  GeneratedPair p = GenTrianglesVsHexagon();
  EXPECT_TRUE(p.spec.verified) << p.spec.verification;
  for (const GeometricGraph* g : {&p.g1, &p.g2}) {
    ASSERT_EQ(g->size(), 6u);
    ASSERT_EQ(g->edges().size(), 6u);
    for (const auto& [i, j] : g->edges()) {
      EXPECT_TRUE(ApproxEqual(SquaredNorm(g->RelativePosition(i, j)), Scalar(1.0)));
    }
  }
  EXPECT_FALSE(IsConnected(p.g1));
  EXPECT_TRUE(IsConnected(p.g2));
}

TEST(OneHopPairTest, NeighbourhoodsMatchButGraphsDoNot) {
  GeneratedPair p = GenOneHopIdenticalPair();
  EXPECT_TRUE(p.spec.verified) << p.spec.verification;
  EXPECT_EQ(p.spec.ClaimName(), "non_isomorphic_h_hop_distinct(2)");
  EXPECT_TRUE(HopIdentical(p.g1, p.g2, 1, kO3));
  EXPECT_FALSE(GeometricIsomorphismOracle(p.g1, p.g2, kO3).isomorphic);
  EXPECT_FALSE(RunIgwl(p.g1, p.g2, kO3).verdict.distinguished);
}

TEST(RandomCloudTest, SeededAndShaped) {
  CloudOptions o{7, 3, 42, NumericMode::kExact, Q("3/2"), 3};
  EXPECT_EQ(GenRandomCloud(o), GenRandomCloud(o));
  o.seed = 43;
  GeometricGraph other = GenRandomCloud(o);
  o.seed = 42;
  EXPECT_FALSE(GenRandomCloud(o) == other);
  GeometricGraph single = GenRandomCloud({1, 2, 0, NumericMode::kFloat, std::nullopt, 1});
  EXPECT_EQ(single.size(), 1u);
  EXPECT_TRUE(single.edges().empty());
  for (std::size_t i = 0; i < single.size(); ++i) {
    for (const auto& x : single.position(i)) EXPECT_LE(std::fabs(x.ToDouble()), 1.0);
  }
  EXPECT_THROW(GenRandomCloud({0, 2, 0, NumericMode::kExact, std::nullopt, 1}), Error);
}

TEST(RandomCloudTest, ConnectedCloudsAreConnected) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeometricGraph g = GenConnectedCloud({2 + seed % 7, 3, seed, NumericMode::kExact, Q("3/2"), 1});
    EXPECT_TRUE(IsConnected(g)) << seed;
  }
}

TEST(RandomPairTest, KindsCycleAndCopiesAreIsomorphic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratedPair p = GenRandomRadialPair(seed, 6, 3);
    EXPECT_EQ(p.spec.params.at("kind"), RandomPairKindName(static_cast<RandomPairKind>(seed % 4)));
    EXPECT_TRUE(IsConnected(p.g1));
    EXPECT_TRUE(IsConnected(p.g2));
    if (seed % 4 == 0) {
      EXPECT_TRUE(GeometricIsomorphismOracle(p.g1, p.g2, kO3).isomorphic) << seed;
    }
  }
}

TEST(RandomPairTest, UnitEdgePairsHaveUnitEdges) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratedPair p = GenUnitEdgePair(seed, 2);
    EXPECT_EQ(p.g1.size(), p.g2.size());
    for (const GeometricGraph* g : {&p.g1, &p.g2}) {
      for (const auto& [i, j] : g->edges()) {
        EXPECT_EQ(SquaredNorm(g->RelativePosition(i, j)), Q("1"));
      }
    }
  }
  GeneratedPair c = GenRandomCompletePair(3, 6, 2);
  EXPECT_EQ(c.g1.edges().size(), c.g1.size() * (c.g1.size() - 1) / 2);
}

TEST(CounterexampleTest, LoadsAndVerifiesPairs) {
  TempDir dir("gwlkit_generators_test");
  GeneratedPair chain = GenKChain(4, false);
  WriteTextFile(dir / "chain.json",
                nlohmann::json::array({GraphToJson(chain.g1), GraphToJson(chain.g2)}).dump());
  GeneratedPair loaded = LoadCounterexample(dir / "chain.json");
  EXPECT_EQ(loaded.spec.ClaimName(), "non_isomorphic");
  EXPECT_TRUE(loaded.spec.verified);

  GeometricGraph moved =
      ApplyIsometry(chain.g1, RandomRationalIsometry(chain.g1.size(), 3, GroupVariant::kO, 9));
  nlohmann::json doc;
  doc["graphs"] = {GraphToJson(chain.g1), GraphToJson(moved)};
  WriteTextFile(dir / "copy.json", doc.dump());
  EXPECT_EQ(LoadCounterexample(dir / "copy.json").spec.ClaimName(), "isomorphic");

  WriteTextFile(dir / "bad.json", "[{\"dim\": 3,\n \"nodes\": [}]");
  try {
    LoadCounterexample(dir / "bad.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  WriteTextFile(dir / "one.json", "[" + GraphToJson(chain.g1).dump() + "]");
  EXPECT_THROW(LoadCounterexample(dir / "one.json"), Error);
}

TEST(CounterexampleTest, WritePairEmitsGraphsAndSidecar) {
  TempDir dir("gwlkit_generators_write_test");
  GeneratedPair p = GenKChain(4);
  WritePair(dir.str(), "kchain4", p);
  EXPECT_EQ(LoadGraph(dir / "kchain4_a.json"), p.g1);
  EXPECT_EQ(LoadGraph(dir / "kchain4_b.json"), p.g2);
  const auto spec = nlohmann::json::parse(ReadTextFile(dir / "kchain4.spec.json"));
  EXPECT_EQ(spec["claim"], "non_isomorphic_h_hop_distinct(3)");
  EXPECT_EQ(spec["family"], "kchain");
  EXPECT_EQ(spec["verified"], true);
  EXPECT_EQ(spec["params"]["k"], "4");
}

}  // namespace
}  // namespace gwl
