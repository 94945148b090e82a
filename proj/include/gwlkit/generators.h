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

#ifndef GWLKIT_GENERATORS_H_
#define GWLKIT_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gwlkit/graph.h"
#include "gwlkit/isometry.h"
#include "json.hpp"

namespace gwl {

enum class PairFamily { kKChain, kLFold, kTriHex, kOneHopIdentical, kRandom, kFile };
const char* PairFamilyName(PairFamily f);

enum class Relation {
  kNonIsomorphicHopDistinct,  // non-isomorphic, `hops`-hop distinct
  kNonIsomorphic,
  kIsomorphic,
  kUnknown,
};

struct PairSpec {
  PairFamily family = PairFamily::kFile;
  std::map<std::string, std::string> params;
  Relation relation = Relation::kUnknown;
  // For kNonIsomorphicHopDistinct: the smallest h with h-hop distinct
  // neighbourhoods; all (h-1)-hop neighbourhoods are identical.
  int hops = 0;
  // Whether `relation` was confirmed by the oracle, and how.
  bool verified = false;
  std::string verification;

  // "non_isomorphic_h_hop_distinct(3)", "isomorphic", ...
  std::string ClaimName() const;
};

nlohmann::json PairSpecToJson(const PairSpec& spec);

struct GeneratedPair {
  GeometricGraph g1;
  GeometricGraph g2;
  PairSpec spec;
};

// Two k-chains: k inner nodes at (1,0,0)..(k,0,0), endpoints at (0,1,0) and
// (k+1,+-1,0), radial cutoff 3/2, exact mode. Throws kInvalidArgument for
// k < 2. The claim is verified with the oracle when `verify` is set.
GeneratedPair GenKChain(int k, bool verify = true);

// A centre at the origin joined to `arms` nodes on the unit circle at angles
// alpha + 2 pi m / L. Exact mode when every angle is a multiple of pi/2,
// float otherwise. `dim` 3 embeds the star in the z = 0 plane.
GeometricGraph GenLFold(int L, double alpha, std::optional<int> arms = std::nullopt,
                        std::size_t dim = 2);

// Two disjoint unit equilateral triangles vs. the unit regular hexagon.
GeneratedPair GenTrianglesVsHexagon(bool verify = true);

// The k = 2 chain pair, claimed (and verified) 1-hop identical and 2-hop
// distinct.
GeneratedPair GenOneHopIdenticalPair(bool verify = true);

struct CloudOptions {
  std::size_t n = 5;
  std::size_t dim = 3;
  std::uint64_t seed = 0;
  NumericMode mode = NumericMode::kExact;
  // Radial edges when set; no edges otherwise.
  std::optional<Scalar> cutoff;
  // Scalar tokens are drawn from this many values.
  int scalar_kinds = 1;
};

// Seeded cloud. Exact: coordinates p/q with p in [-4, 4], q in {1, 2};
// float: uniform in [-1, 1].
GeometricGraph GenRandomCloud(const CloudOptions& options);

// Like GenRandomCloud with a cutoff, but redraws (with derived seeds) until
// the radial graph is connected and no two points coincide.
GeometricGraph GenConnectedCloud(const CloudOptions& options);

enum class RandomPairKind { kCopy, kMirror, kPerturbed, kIndependent };
const char* RandomPairKindName(RandomPairKind kind);

// A seeded pair (g, h) of connected radial graphs with n in [2, max_n]:
// h is an isometric copy, a mirrored copy, a perturbed copy, or an
// independent draw, cycling through the kinds by seed. Exact mode,
// cutoff 3/2. The spec records the kind; the relation is left kUnknown.
GeneratedPair GenRandomRadialPair(std::uint64_t seed, std::size_t max_n,
                                  std::size_t dim);

// The same nodes with every pair joined.
GeometricGraph WithAllEdges(const GeometricGraph& g);

// GenRandomRadialPair with both graphs made fully connected.
GeneratedPair GenRandomCompletePair(std::uint64_t seed, std::size_t max_n,
                                    std::size_t dim);

// Two graphs on distinct integer lattice points with cutoff 1, so every edge
// has length exactly 1. Even seeds give an independent second graph with
// the same node count, odd seeds an isometric copy.
GeneratedPair GenUnitEdgePair(std::uint64_t seed, std::size_t dim);

// Pair of graphs from a file (top-level array of two graphs, or
// {"graphs": [...]}); verified with the oracle under O(d) when within cap.
GeneratedPair LoadCounterexample(const std::string& path);

// True when some attributed isomorphism b makes every h-hop neighbourhood
// of g1 geometrically isomorphic to that of b(i) in g2.
bool HopIdentical(const GeometricGraph& g1, const GeometricGraph& g2, int hops,
                  const GroupSpec& group);

// Re-checks `pair.spec` against the oracle (no-op beyond the cap) and
// records the outcome in spec.verified / spec.verification.
void VerifyClaim(GeneratedPair& pair);

// Writes <stem>_a.json, <stem>_b.json and <stem>.spec.json into `dir`.
void WritePair(const std::string& dir, const std::string& stem,
               const GeneratedPair& pair);

}  // namespace gwl

#endif  // GWLKIT_GENERATORS_H_
