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
#include <random>

#include "gwlkit/diagnostics.h"
#include "gwlkit/graph_io.h"
#include "gwlkit/oracle.h"

namespace gwl {
namespace {

// Modulo draws keep sequences identical across standard libraries, unlike
// the std distributions.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  long Int(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double Unit() {  // uniform in [-1, 1]
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
  std::uint64_t Raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

Vec ExactPoint(std::initializer_list<long> coords) {
  Vec v;
  for (long c : coords) v.push_back(Scalar::FromInt(c, NumericMode::kExact));
  return v;
}

NodeSpec Plain(Vec position) {
  NodeSpec n;
  n.scalars = {"1"};
  n.position = std::move(position);
  return n;
}

bool Coincident(const std::vector<NodeSpec>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (ApproxEqual(nodes[i].position, nodes[j].position)) return true;
    }
  }
  return false;
}

std::optional<GroupSpec> OracleGroup(const GeometricGraph& g1,
                                     const GeometricGraph& g2) {
  if (g1.size() > OracleOptions{}.max_nodes || g2.size() > OracleOptions{}.max_nodes ||
      g1.dim() != g2.dim() || g1.mode() != g2.mode()) {
    return std::nullopt;
  }
  return GroupSpec{GroupVariant::kO, g1.dim()};
}

}  // namespace

const char* PairFamilyName(PairFamily f) {
  switch (f) {
    case PairFamily::kKChain: return "kchain";
    case PairFamily::kLFold: return "lfold";
    case PairFamily::kTriHex: return "tri_hex";
    case PairFamily::kOneHopIdentical: return "onehop_identical";
    case PairFamily::kRandom: return "random";
    case PairFamily::kFile: return "file";
  }
  return "?";
}

std::string PairSpec::ClaimName() const {
  switch (relation) {
    case Relation::kNonIsomorphicHopDistinct:
      return "non_isomorphic_h_hop_distinct(" + std::to_string(hops) + ")";
    case Relation::kNonIsomorphic: return "non_isomorphic";
    case Relation::kIsomorphic: return "isomorphic";
    case Relation::kUnknown: return "unknown";
  }
  return "?";
}

nlohmann::json PairSpecToJson(const PairSpec& spec) {
  nlohmann::json j;
  j["family"] = PairFamilyName(spec.family);
  j["params"] = spec.params;
  j["claim"] = spec.ClaimName();
  j["verified"] = spec.verified;
  j["verification"] = spec.verification;
  return j;
}

bool HopIdentical(const GeometricGraph& g1, const GeometricGraph& g2, int hops,
                  const GroupSpec& group) {
  for (const auto& b : AttributedIsomorphisms(g1, g2)) {
    bool all = true;
    for (std::size_t i = 0; i < g1.size() && all; ++i) {
      all = GeometricIsomorphismOracle(HopNeighbourhood(g1, i, hops),
                                       HopNeighbourhood(g2, b[i], hops), group)
                .isomorphic;
    }
    if (all) return true;
  }
  return false;
}

void VerifyClaim(GeneratedPair& pair) {
  PairSpec& spec = pair.spec;
  const auto group = OracleGroup(pair.g1, pair.g2);
  if (!group) {
    spec.verified = false;
    spec.verification = "not checked: outside the oracle's reach";
    return;
  }
  const bool iso =
      GeometricIsomorphismOracle(pair.g1, pair.g2, *group).isomorphic;
  const std::string where = " under " + group->Name();
  switch (spec.relation) {
    case Relation::kIsomorphic:
      spec.verified = iso;
      break;
    case Relation::kNonIsomorphic:
      spec.verified = !iso;
      break;
    case Relation::kNonIsomorphicHopDistinct:
      spec.verified =
          !iso && !HopIdentical(pair.g1, pair.g2, spec.hops, *group) &&
          (spec.hops <= 1 || HopIdentical(pair.g1, pair.g2, spec.hops - 1, *group));
      break;
    case Relation::kUnknown:
      spec.relation = iso ? Relation::kIsomorphic : Relation::kNonIsomorphic;
      spec.verified = true;
      break;
  }
  spec.verification = std::string("oracle ") +
                      (spec.verified ? "confirms " : "refutes ") +
                      spec.ClaimName() + where;
}

GeneratedPair GenKChain(int k, bool verify) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k-chain needs k >= 2");
  auto build = [k](long last_y) {
    std::vector<NodeSpec> nodes;
    nodes.push_back(Plain(ExactPoint({0, 1, 0})));
    for (long i = 1; i <= k; ++i) nodes.push_back(Plain(ExactPoint({i, 0, 0})));
    nodes.push_back(Plain(ExactPoint({k + 1, last_y, 0})));
    return BuildRadialGraph(3, std::move(nodes),
                            Scalar::FromRatio(3, 2, NumericMode::kExact));
  };
  GeneratedPair pair{build(1), build(-1), {}};
  pair.spec.family = PairFamily::kKChain;
  pair.spec.params["k"] = std::to_string(k);
  pair.spec.relation = Relation::kNonIsomorphicHopDistinct;
  pair.spec.hops = k / 2 + 1;
  if (verify) VerifyClaim(pair);
  return pair;
}

GeometricGraph GenLFold(int L, double alpha, std::optional<int> arms,
                        std::size_t dim) {
  if (L < 1) throw Error(ErrorCode::kInvalidArgument, "L-fold needs L >= 1");
  if (dim != 2 && dim != 3) {
    throw Error(ErrorCode::kInvalidArgument, "L-fold star lives in d = 2 or 3");
  }
  const int count = arms.value_or(L);
  if (count < 0) throw Error(ErrorCode::kInvalidArgument, "arm count is negative");
  const double quarter = std::numbers::pi / 2.0;
  const double alpha_quarters = alpha / quarter;
  const bool exact = (L == 1 || L == 2 || L == 4) &&
                     std::fabs(alpha_quarters - std::round(alpha_quarters)) < 1e-12;
  const NumericMode mode = exact ? NumericMode::kExact : NumericMode::kFloat;
  std::vector<NodeSpec> nodes;
  auto point = [&](double x, double y) {
    Vec v{Scalar(x), Scalar(y)};
    if (dim == 3) v.push_back(Scalar(0.0));
    for (auto& c : v) c = c.ToMode(mode);
    return v;
  };
  nodes.push_back(Plain(point(0.0, 0.0)));
  std::vector<Edge> edges;
  for (int m = 0; m < count; ++m) {
    Vec pos;
    if (exact) {
      // Angle in quarter turns; cos and sin are exactly -1, 0 or 1.
      const long q = std::lround(alpha_quarters) + 4L * m / L;
      static constexpr int kCos[4] = {1, 0, -1, 0};
      static constexpr int kSin[4] = {0, 1, 0, -1};
      const long r = ((q % 4) + 4) % 4;
      pos = point(kCos[r], kSin[r]);
    } else {
      const double angle = alpha + 2.0 * std::numbers::pi * m / L;
      pos = point(std::cos(angle), std::sin(angle));
    }
    nodes.push_back(Plain(std::move(pos)));
    edges.emplace_back(0, static_cast<std::size_t>(m + 1));
  }
  return GeometricGraph(dim, mode, std::move(nodes), edges);
}

GeneratedPair GenTrianglesVsHexagon(bool verify) {
  const double h = std::sqrt(3.0) / 2.0;
  auto node = [](double x, double y) { return Plain(Vec{Scalar(x), Scalar(y)}); };
  std::vector<NodeSpec> tri{node(0, 0), node(1, 0), node(0.5, h),
                            node(3, 0), node(4, 0), node(3.5, h)};
  std::vector<Edge> tri_edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  std::vector<NodeSpec> hex;
  std::vector<Edge> hex_edges;
  for (int m = 0; m < 6; ++m) {
    const double angle = std::numbers::pi * m / 3.0;
    hex.push_back(node(std::cos(angle), std::sin(angle)));
    hex_edges.emplace_back(static_cast<std::size_t>(m), static_cast<std::size_t>((m + 1) % 6));
  }
  GeneratedPair pair{GeometricGraph(2, NumericMode::kFloat, std::move(tri), tri_edges),
                     GeometricGraph(2, NumericMode::kFloat, std::move(hex), hex_edges),
                     {}};
  pair.spec.family = PairFamily::kTriHex;
  pair.spec.relation = Relation::kNonIsomorphicHopDistinct;
  pair.spec.hops = 1;
  if (verify) VerifyClaim(pair);
  return pair;
}

GeneratedPair GenOneHopIdenticalPair(bool verify) {
  GeneratedPair pair = GenKChain(2, false);
  pair.spec.family = PairFamily::kOneHopIdentical;
  pair.spec.params.clear();
  pair.spec.hops = 2;
  if (verify) VerifyClaim(pair);
  return pair;
}

GeometricGraph GenRandomCloud(const CloudOptions& o) {
  if (o.n < 1 || o.dim < 1 || o.dim > 3) {
    throw Error(ErrorCode::kInvalidArgument, "random cloud needs n >= 1, d in 1..3");
  }
  if (o.scalar_kinds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "scalar_kinds must be positive");
  }
  Draws draw(o.seed);
  std::vector<NodeSpec> nodes;
  for (std::size_t i = 0; i < o.n; ++i) {
    NodeSpec node;
    node.scalars = {std::to_string(draw.Int(0, o.scalar_kinds - 1))};
    for (std::size_t k = 0; k < o.dim; ++k) {
      node.position.push_back(o.mode == NumericMode::kExact
                                  ? Scalar::FromRatio(draw.Int(-4, 4), draw.Int(1, 2),
                                                      NumericMode::kExact)
                                  : Scalar(draw.Unit()));
    }
    nodes.push_back(std::move(node));
  }
  if (o.cutoff) return BuildRadialGraph(o.dim, std::move(nodes), *o.cutoff);
  return GeometricGraph(o.dim, o.mode, std::move(nodes), {});
}

GeometricGraph GenConnectedCloud(const CloudOptions& o) {
  if (!o.cutoff) {
    throw Error(ErrorCode::kInvalidArgument, "connected cloud needs a cutoff");
  }
  if (o.n < 1 || o.dim < 1 || o.dim > 3 || o.scalar_kinds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad random cloud parameters");
  }
  const Scalar r2 = *o.cutoff * *o.cutoff;
  Draws draw(o.seed);
  // Grow the cloud: each new point sits within the cutoff of an earlier one,
  // so the radial graph is connected by construction.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<NodeSpec> nodes;
    NodeSpec first;
    first.scalars = {std::to_string(draw.Int(0, o.scalar_kinds - 1))};
    for (std::size_t k = 0; k < o.dim; ++k) {
      first.position.push_back(o.mode == NumericMode::kExact
                                   ? Scalar::FromRatio(draw.Int(-2, 2), 2, o.mode)
                                   : Scalar(draw.Unit()));
    }
    nodes.push_back(std::move(first));
    bool ok = true;
    for (std::size_t i = 1; i < o.n && ok; ++i) {
      ok = false;
      for (int tries = 0; tries < 200 && !ok; ++tries) {
        const auto anchor = static_cast<std::size_t>(draw.Int(0, static_cast<long>(i) - 1));
        Vec offset;
        for (std::size_t k = 0; k < o.dim; ++k) {
          offset.push_back(o.mode == NumericMode::kExact
                               ? Scalar::FromRatio(draw.Int(-2, 2), 2, o.mode)
                               : Scalar(draw.Unit() * o.cutoff->ToDouble()));
        }
        const Scalar len = SquaredNorm(offset);
        if (len.IsZero() || Compare(len, r2) > 0) continue;
        NodeSpec node;
        node.scalars = {std::to_string(draw.Int(0, o.scalar_kinds - 1))};
        node.position = Add(nodes[anchor].position, offset);
        nodes.push_back(std::move(node));
        if (Coincident(nodes)) {
          nodes.pop_back();
          continue;
        }
        ok = true;
      }
    }
    if (ok) return BuildRadialGraph(o.dim, std::move(nodes), *o.cutoff);
  }
  throw Error(ErrorCode::kDegenerate, "could not grow a connected cloud");
}

const char* RandomPairKindName(RandomPairKind kind) {
  switch (kind) {
    case RandomPairKind::kCopy: return "copy";
    case RandomPairKind::kMirror: return "mirror";
    case RandomPairKind::kPerturbed: return "perturbed";
    case RandomPairKind::kIndependent: return "independent";
  }
  return "?";
}

GeneratedPair GenRandomRadialPair(std::uint64_t seed, std::size_t max_n,
                                  std::size_t dim) {
  if (max_n < 2) throw Error(ErrorCode::kInvalidArgument, "max_n must be >= 2");
  Draws draw(seed ^ 0x5eed5eed5eedULL);
  const auto kind = static_cast<RandomPairKind>(seed % 4);
  CloudOptions opts;
  opts.n = static_cast<std::size_t>(draw.Int(2, static_cast<long>(max_n)));
  opts.dim = dim;
  opts.seed = draw.Raw();
  opts.cutoff = Scalar::FromRatio(3, 2, NumericMode::kExact);
  opts.scalar_kinds = static_cast<int>(draw.Int(1, 2));
  const GeometricGraph g = GenConnectedCloud(opts);
  const std::uint64_t iso_seed = draw.Raw();
  auto rotated = [&](const GeometricGraph& x) {
    return ApplyIsometry(x, RandomRationalIsometry(x.size(), dim, GroupVariant::kSO, iso_seed));
  };
  std::optional<GeometricGraph> h;
  switch (kind) {
    case RandomPairKind::kCopy:
      h = rotated(g);
      break;
    case RandomPairKind::kMirror: {
      IsometryWitness w = RandomRationalIsometry(g.size(), dim, GroupVariant::kSO, iso_seed);
      w.rotation = MatMul(AxisReflection(dim, NumericMode::kExact), w.rotation);
      h = ApplyIsometry(g, w);
      break;
    }
    case RandomPairKind::kPerturbed: {
      for (int attempt = 0; attempt < 200 && !h; ++attempt) {
        std::vector<NodeSpec> nodes = g.nodes();
        const auto victim = static_cast<std::size_t>(draw.Int(0, static_cast<long>(g.size()) - 1));
        Vec offset;
        for (std::size_t k = 0; k < dim; ++k) {
          offset.push_back(Scalar::FromRatio(draw.Int(-1, 1), 2, NumericMode::kExact));
        }
        if (SquaredNorm(offset).IsZero()) continue;
        nodes[victim].position = Add(nodes[victim].position, offset);
        if (Coincident(nodes)) continue;
        GeometricGraph moved = BuildRadialGraph(dim, std::move(nodes), *opts.cutoff);
        if (IsConnected(moved)) h = rotated(moved);
      }
      if (!h) h = rotated(g);
      break;
    }
    case RandomPairKind::kIndependent: {
      CloudOptions other = opts;
      other.seed = draw.Raw();
      h = GenConnectedCloud(other);
      break;
    }
  }
  GeneratedPair pair{g, *h, {}};
  pair.spec.family = PairFamily::kRandom;
  pair.spec.params["seed"] = std::to_string(seed);
  pair.spec.params["n"] = std::to_string(g.size());
  pair.spec.params["d"] = std::to_string(dim);
  pair.spec.params["kind"] = RandomPairKindName(kind);
  return pair;
}

GeometricGraph WithAllEdges(const GeometricGraph& g) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) edges.emplace_back(i, j);
  }
  return GeometricGraph(g.dim(), g.mode(), g.nodes(), edges);
}

GeneratedPair GenRandomCompletePair(std::uint64_t seed, std::size_t max_n,
                                    std::size_t dim) {
  GeneratedPair pair = GenRandomRadialPair(seed, max_n, dim);
  pair.g1 = WithAllEdges(pair.g1);
  pair.g2 = WithAllEdges(pair.g2);
  pair.spec.params["edges"] = "complete";
  return pair;
}

GeneratedPair GenUnitEdgePair(std::uint64_t seed, std::size_t dim) {
  if (dim < 1 || dim > 3) throw Error(ErrorCode::kInvalidArgument, "d must be 1..3");
  Draws draw(seed ^ 0x1a771ceULL);
  const auto n = static_cast<std::size_t>(draw.Int(3, 7));
  const long side = dim == 1 ? 12 : 4;
  auto lattice_graph = [&]() {
    std::vector<NodeSpec> nodes;
    while (nodes.size() < n) {
      NodeSpec node;
      node.scalars = {"1"};
      for (std::size_t k = 0; k < dim; ++k) {
        node.position.push_back(Scalar::FromInt(draw.Int(0, side - 1), NumericMode::kExact));
      }
      nodes.push_back(std::move(node));
      if (Coincident(nodes)) nodes.pop_back();
    }
    return BuildRadialGraph(dim, std::move(nodes), Scalar::FromInt(1, NumericMode::kExact));
  };
  GeometricGraph g1 = lattice_graph();
  GeometricGraph g2 =
      seed % 2 == 1
          ? ApplyIsometry(g1, RandomRationalIsometry(n, dim, GroupVariant::kO, draw.Raw()))
          : lattice_graph();
  GeneratedPair pair{std::move(g1), std::move(g2), {}};
  pair.spec.family = PairFamily::kRandom;
  pair.spec.params["seed"] = std::to_string(seed);
  pair.spec.params["edges"] = "unit";
  return pair;
}

GeneratedPair LoadCounterexample(const std::string& path) {
  auto graphs = LoadGraphs(path);
  if (graphs.size() != 2) {
    throw Error(ErrorCode::kParse, "'" + path + "' must hold exactly two graphs, found " +
                                       std::to_string(graphs.size()));
  }
  if (graphs[0].dim() != graphs[1].dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "'" + path + "': graphs differ in dimension");
  }
  if (graphs[0].mode() != graphs[1].mode()) {
    throw Error(ErrorCode::kModeMismatch, "'" + path + "': graphs differ in numeric mode");
  }
  GeneratedPair pair{std::move(graphs[0]), std::move(graphs[1]), {}};
  pair.spec.family = PairFamily::kFile;
  pair.spec.params["path"] = path;
  VerifyClaim(pair);
  return pair;
}

void WritePair(const std::string& dir, const std::string& stem,
               const GeneratedPair& pair) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dir + "': " + ec.message());
  const std::filesystem::path base(dir);
  SaveGraph((base / (stem + "_a.json")).string(), pair.g1);
  SaveGraph((base / (stem + "_b.json")).string(), pair.g2);
  WriteTextFile((base / (stem + ".spec.json")).string(),
                PairSpecToJson(pair.spec).dump(2) + "\n");
}

}  // namespace gwl
