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

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gwlkit/diagnostics.h"
#include "gwlkit/generators.h"
#include "gwlkit/graph_io.h"
#include "gwlkit/oracle.h"
#include "gwlkit/properties.h"
#include "gwlkit/refinement.h"
#include "gwlkit/report.h"
#include "gwlkit/so2.h"

namespace gwl::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ToleranceScope {
 public:
  ToleranceScope() : saved_(Tolerance()) {}
  ~ToleranceScope() { SetTolerance(saved_); }

 private:
  double saved_;
};

struct Options {
  // shared
  double tolerance = 0.0;
  std::string mode;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  // engines
  std::string test = "gwl";
  std::string group = "O";
  int k = 0;
  std::optional<int> max_iters;
  // inputs
  std::vector<std::string> paths;
  // gen
  std::string family;
  int L = 0;
  double alpha = 0.0;
  int arms = -1;
  int n = 5;
  int d = 3;
  std::string cutoff;
  // table
  std::string table;
  int from = 0;
  int to = 0;
  // props
  std::vector<std::string> dihedrals;
  // iso
  int max_nodes = 10;
};

std::optional<NumericMode> ModeOverride(const Options& o) {
  if (o.mode.empty()) return std::nullopt;
  if (o.mode != "exact" && o.mode != "float") {
    throw UsageError("--mode must be exact or float");
  }
  return ParseNumericMode(o.mode);
}

GeometricGraph Convert(GeometricGraph g, const Options& o) {
  if (auto mode = ModeOverride(o)) return g.WithMode(*mode);
  return g;
}

std::vector<GeometricGraph> LoadPair(const Options& o) {
  std::vector<GeometricGraph> graphs;
  try {
    if (o.paths.size() == 1) {
      graphs = LoadGraphs(o.paths[0]);
      if (graphs.size() != 2) {
        throw InputError(o.paths[0] + ": expected two graphs, found " +
                         std::to_string(graphs.size()));
      }
    } else if (o.paths.size() == 2) {
      graphs.push_back(LoadGraph(o.paths[0]));
      graphs.push_back(LoadGraph(o.paths[1]));
    } else {
      throw UsageError("expected two graph files (or one pair file)");
    }
  } catch (const gwl::Error& e) {
    throw InputError(e.what());
  }
  for (auto& g : graphs) g = Convert(std::move(g), o);
  if (graphs[0].dim() != graphs[1].dim()) {
    throw InputError("graphs differ in dimension");
  }
  if (graphs[0].mode() != graphs[1].mode()) {
    throw InputError("graphs differ in numeric mode (use --mode to convert)");
  }
  return graphs;
}

void Emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  try {
    WriteTextFile(o.out, text);
  } catch (const gwl::Error& e) {
    throw InputError(e.what());
  }
}

GroupSpec Group(const Options& o, std::size_t dim) {
  try {
    return GroupSpec{ParseGroupVariant(o.group), dim};
  } catch (const gwl::Error& e) {
    throw UsageError(e.what());
  }
}

ReportFormat Format(const Options& o) {
  try {
    return ParseReportFormat(o.format);
  } catch (const gwl::Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<int> Budget(const Options& o) {
  if (o.max_iters && *o.max_iters < 1) {
    throw UsageError("--max-iters must be at least 1");
  }
  return o.max_iters;
}

int CmdDistinguish(const Options& o, std::ostream& out) {
  TestKind kind;
  try {
    kind = ParseTestKind(o.test);
  } catch (const gwl::Error& e) {
    throw UsageError(e.what());
  }
  if (kind == TestKind::kIgwlK && o.k < 2) {
    throw UsageError("--test igwl-k needs --k (at least 2)");
  }
  const ReportFormat format = Format(o);
  const auto graphs = LoadPair(o);
  const auto& g1 = graphs[0];
  const auto& g2 = graphs[1];
  RunReport report;
  report.test = kind;
  try {
    switch (kind) {
      case TestKind::kWl:
        report.result = RunWl(g1, g2, Budget(o));
        break;
      case TestKind::kGwl:
        report.group = Group(o, g1.dim());
        report.result = RunGwl(g1, g2, *report.group, Budget(o));
        break;
      case TestKind::kIgwl:
        report.group = Group(o, g1.dim());
        report.result = RunIgwl(g1, g2, *report.group, Budget(o));
        break;
      case TestKind::kIgwlK:
        report.group = Group(o, g1.dim());
        report.k = o.k;
        report.result = RunIgwlK(g1, g2, *report.group, o.k, Budget(o));
        break;
      case TestKind::kSo2:
        report.group = GroupSpec{GroupVariant::kSO, 2};
        report.result = RunSo2Gwl(g1, g2, Budget(o));
        break;
    }
  } catch (const gwl::Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) throw UsageError(e.what());
    throw InputError(e.what());
  }
  Emit(FormatRunReport(report, format), o, out);
  return report.result.verdict.distinguished ? kExitDistinguished
                                             : kExitIndistinguishable;
}

int CmdGen(const Options& o, std::ostream& out) {
  const std::string dir = o.out.empty() ? "." : o.out;
  auto write_graph = [&](const std::string& stem, const GeometricGraph& g) {
    const std::string path = dir + "/" + stem + ".json";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    SaveGraph(path, g);
    out << "wrote " << path << " (" << NumericModeName(g.mode()) << " mode, "
        << g.size() << " nodes)\n";
  };
  auto write_pair = [&](const std::string& stem, const GeneratedPair& pair) {
    WritePair(dir, stem, pair);
    out << "wrote " << dir << "/" << stem << "_a.json, " << stem << "_b.json, "
        << stem << ".spec.json\n"
        << "claim: " << pair.spec.ClaimName() << "\n"
        << "verification: " << pair.spec.verification << "\n";
  };
  if (o.family == "kchain") {
    if (o.k == 0) throw UsageError("gen kchain needs --k");
    write_pair("kchain_k" + std::to_string(o.k), GenKChain(o.k));
  } else if (o.family == "lfold") {
    if (o.L < 1) throw UsageError("gen lfold needs --L (at least 1)");
    const std::optional<int> arms = o.arms >= 0 ? std::optional<int>(o.arms) : std::nullopt;
    write_graph("lfold_L" + std::to_string(o.L),
                GenLFold(o.L, o.alpha, arms, static_cast<std::size_t>(o.d == 3 ? 3 : 2)));
  } else if (o.family == "tri_hex") {
    write_pair("tri_hex", GenTrianglesVsHexagon());
  } else if (o.family == "onehop_identical") {
    write_pair("onehop_identical", GenOneHopIdenticalPair());
  } else if (o.family == "random") {
    CloudOptions c;
    if (o.n < 1) throw UsageError("--n must be positive");
    c.n = static_cast<std::size_t>(o.n);
    c.dim = static_cast<std::size_t>(o.d);
    c.seed = o.seed;
    c.mode = ModeOverride(o).value_or(NumericMode::kExact);
    if (!o.cutoff.empty()) {
      try {
        c.cutoff = Scalar::Parse(o.cutoff, c.mode);
      } catch (const gwl::Error& e) {
        throw UsageError(std::string("--cutoff: ") + e.what());
      }
    }
    write_graph("random_n" + std::to_string(o.n) + "_d" + std::to_string(o.d) + "_s" +
                    std::to_string(o.seed),
                GenRandomCloud(c));
  } else {
    throw UsageError("unknown family '" + o.family +
                     "' (kchain, lfold, tri_hex, onehop_identical, random)");
  }
  return 0;
}

std::string Cell(bool distinguished) {
  return distinguished ? "distinguished" : "indistinguishable";
}

int CmdTable(const Options& o, std::ostream& out) {
  std::ostringstream md;
  if (o.table == "kchains") {
    const int from = o.from > 0 ? o.from : 2;
    const int to = o.to > 0 ? o.to : 8;
    if (from < 2 || to < from) throw UsageError("k range must satisfy 2 <= from <= to");
    md << "| k | test | floor(k/2) | floor(k/2)+1 | floor(k/2)+2 | floor(k/2)+3 | "
          "floor(k/2)+4 |\n|---|---|---|---|---|---|---|\n";
    for (int k = from; k <= to; ++k) {
      const auto pair = GenKChain(k, false);
      const GroupSpec group{GroupVariant::kO, 3};
      for (const char* test : {"GWL", "IGWL"}) {
        md << "| " << k << " | " << test << " |";
        for (int b = k / 2; b <= k / 2 + 4; ++b) {
          const int budget = std::max(b, 1);
          const auto r = std::string(test) == "GWL"
                             ? RunGwl(pair.g1, pair.g2, group, budget)
                             : RunIgwl(pair.g1, pair.g2, group, budget);
          md << ' ' << Cell(r.verdict.distinguished) << " |";
        }
        md << '\n';
      }
    }
    md << "\nGWL / IGWL rows use O(3) with iteration budgets as columns. "
          "GNN rows: out of scope: trained models.\n";
  } else if (o.table == "lfold-invariance") {
    const int from = o.from > 0 ? o.from : 2;
    const int to = o.to > 0 ? o.to : 10;
    if (from < 2 || to < from) throw UsageError("L range must satisfy 2 <= from <= to");
    md << "| L | oracle SO(2) | GWL SO(2) | IGWL SO(2) |\n|---|---|---|---|\n";
    for (int L = from; L <= to; ++L) {
      GeometricGraph a = GenLFold(L, 0.0);
      GeometricGraph b = GenLFold(L, std::numbers::pi / L);
      if (a.mode() != b.mode()) {
        a = a.WithMode(NumericMode::kFloat);
        b = b.WithMode(NumericMode::kFloat);
      }
      const GroupSpec group{GroupVariant::kSO, 2};
      const bool iso = GeometricIsomorphismOracle(a, b, group).isomorphic;
      md << "| " << L << " | " << (iso ? "isomorphic" : "not isomorphic") << " | "
         << Cell(RunGwl(a, b, group).verdict.distinguished) << " | "
         << Cell(RunIgwl(a, b, group).verdict.distinguished) << " |\n";
    }
    md << "\nPairs are the L-fold star at alpha = 0 and alpha = pi/L. "
          "Trained-layer accuracies: out of scope: trained models.\n";
  } else {
    throw UsageError("unknown table '" + o.table + "' (kchains, lfold-invariance)");
  }
  Emit(md.str(), o, out);
  return 0;
}

int CmdProps(const Options& o, std::ostream& out) {
  if (o.paths.size() != 1) throw UsageError("props takes one graph file");
  GeometricGraph g = [&] {
    try {
      return Convert(LoadGraph(o.paths[0]), o);
    } catch (const gwl::Error& e) {
      throw InputError(e.what());
    }
  }();
  std::vector<std::array<std::size_t, 4>> quads;
  for (const auto& spec : o.dihedrals) {
    std::array<std::size_t, 4> q{};
    char c1, c2, c3;
    std::istringstream in(spec);
    if (!(in >> q[0] >> c1 >> q[1] >> c2 >> q[2] >> c3 >> q[3]) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      throw UsageError("--dihedral expects l,j,k,m");
    }
    quads.push_back(q);
  }
  PropertyReport report;
  try {
    report = ComputeProperties(g, quads);
  } catch (const gwl::Error& e) {
    throw InputError(e.what());
  }
  if (o.format == "json") {
    Emit(PropertyReportToJson(report).dump(2) + "\n", o, out);
  } else if (o.format == "text") {
    Emit(PropertyReportText(report), o, out);
  } else {
    throw UsageError("props supports --format json or text");
  }
  return 0;
}

int CmdIso(const Options& o, std::ostream& out) {
  const auto graphs = LoadPair(o);
  const GroupSpec group = Group(o, graphs[0].dim());
  OracleOptions opts;
  if (o.max_nodes < 1) throw UsageError("--max-nodes must be positive");
  opts.max_nodes = static_cast<std::size_t>(o.max_nodes);
  const auto result = GeometricIsomorphismOracle(graphs[0], graphs[1], group, opts);
  if (o.format == "json") {
    nlohmann::json j;
    j["group"] = group.Name();
    j["isomorphic"] = result.isomorphic;
    if (result.witness) {
      const auto& w = *result.witness;
      j["witness"]["permutation"] = w.permutation;
      nlohmann::json q = nlohmann::json::array();
      for (const auto& row : w.rotation) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.ToString());
        q.push_back(r);
      }
      j["witness"]["rotation"] = q;
      nlohmann::json t = nlohmann::json::array();
      for (const auto& x : w.translation) t.push_back(x.ToString());
      j["witness"]["translation"] = t;
    }
    Emit(j.dump(2) + "\n", o, out);
  } else {
    Emit(std::string(result.isomorphic ? "isomorphic" : "not isomorphic") + " under " +
             group.Name() + "\n",
         o, out);
  }
  return result.isomorphic ? kExitIndistinguishable : kExitDistinguished;
}

int CmdSo2(const std::string& action, const Options& o, std::ostream& out) {
  if (action == "refine") {
    // The SO(2) encoding works on doubles, so mixed inputs are fine here.
    Options copy = o;
    copy.test = "so2";
    if (copy.mode.empty()) copy.mode = "float";
    return CmdDistinguish(copy, out);
  }
  if (o.paths.empty()) throw UsageError("so2 " + action + " needs graph files");
  std::vector<std::vector<P2>> clouds;
  for (const auto& p : o.paths) {
    try {
      clouds.push_back(PositionsOf(LoadGraph(p)));
    } catch (const gwl::Error& e) {
      throw InputError(p + ": " + e.what());
    }
  }
  std::ostringstream text;
  if (action == "stab") {
    for (std::size_t i = 0; i < clouds.size(); ++i) {
      if (clouds[i].empty()) throw InputError(o.paths[i] + ": no points");
      const auto s = StabilizerOrder(clouds[i]);
      text << o.paths[i] << ": ";
      if (s.continuous) {
        text << "continuous\n";
      } else {
        text << "L = " << s.order << ", theta = " << s.theta << "\n";
      }
    }
  } else if (action == "hash") {
    So2Registry reg;
    for (std::size_t i = 0; i < clouds.size(); ++i) {
      const auto h = HashV(clouds[i], reg);
      text << o.paths[i] << ": code " << h.code << ", rate " << h.rate << ", alpha "
           << h.alpha << ", vector (" << h.vec[0] << ", " << h.vec[1] << ")\n";
    }
  } else {
    throw UsageError("so2 actions: hash, stab, refine");
  }
  Emit(text.str(), o, out);
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  ToleranceScope scope;
  Options o;
  CLI::App app{"Geometric Weisfeiler-Leman toolkit"};
  app.name("gwlkit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", o.tolerance, "float comparison tolerance (> 0)");
  app.add_option("--mode", o.mode, "numeric mode override: exact or float");
  app.add_option("--format", o.format, "json, csv, md or text");
  app.add_option("--out", o.out, "output file (gen: output directory)");
  app.add_option("--seed", o.seed, "random seed");

  auto* distinguish = app.add_subcommand("distinguish", "run a refinement test on a pair");
  distinguish->add_option("files", o.paths, "two graph files, or one pair file")->required();
  distinguish->add_option("--test", o.test, "wl, gwl, igwl, igwl-k or so2");
  distinguish->add_option("--group", o.group, "O or SO");
  distinguish->add_option("--k", o.k, "body order for igwl-k");
  distinguish->add_option("--max-iters", o.max_iters, "iteration budget");

  auto* gen = app.add_subcommand("gen", "generate a synthetic family");
  gen->add_option("family", o.family, "kchain, lfold, tri_hex, onehop_identical, random")
      ->required();
  gen->add_option("--k", o.k, "chain length");
  gen->add_option("--L", o.L, "rotational order");
  gen->add_option("--alpha", o.alpha, "rotation offset in radians");
  gen->add_option("--arms", o.arms, "number of arms (default L)");
  gen->add_option("--n", o.n, "node count");
  gen->add_option("--d", o.d, "dimension");
  gen->add_option("--cutoff", o.cutoff, "radial cutoff, e.g. 3/2");

  auto* table = app.add_subcommand("table", "reproduce verdict tables");
  table->add_option("which", o.table, "kchains or lfold-invariance")->required();
  table->add_option("--from", o.from, "first k or L");
  table->add_option("--to", o.to, "last k or L");

  auto* props = app.add_subcommand("props", "geometric property report");
  props->add_option("file", o.paths, "graph file")->required();
  props->add_option("--dihedral", o.dihedrals, "quadruple l,j,k,m (repeatable)");

  auto* iso = app.add_subcommand("iso", "brute-force isomorphism oracle");
  iso->add_option("files", o.paths, "two graph files, or one pair file")->required();
  iso->add_option("--group", o.group, "O or SO");
  iso->add_option("--max-nodes", o.max_nodes, "oracle size cap");

  std::string so2_action;
  auto* so2 = app.add_subcommand("so2", "SO(2) alternative encoding");
  so2->add_option("action", so2_action, "hash, stab or refine")->required();
  so2->add_option("files", o.paths, "graph files")->required();
  so2->add_option("--max-iters", o.max_iters, "iteration budget (refine)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    double eps = kDefaultTolerance;
    if (const char* env = std::getenv("GWLKIT_TOLERANCE"); env != nullptr && *env) {
      char* end = nullptr;
      eps = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(eps > 0)) {
        throw UsageError("GWLKIT_TOLERANCE must be a positive number");
      }
    }
    if (app.count("--tolerance") > 0) {
      if (!(o.tolerance > 0)) throw UsageError("--tolerance must be positive");
      eps = o.tolerance;
    }
    SetTolerance(eps);
    ModeOverride(o);

    if (distinguish->parsed()) return CmdDistinguish(o, out);
    if (gen->parsed()) return CmdGen(o, out);
    if (table->parsed()) return CmdTable(o, out);
    if (props->parsed()) return CmdProps(o, out);
    if (iso->parsed()) return CmdIso(o, out);
    if (so2->parsed()) return CmdSo2(so2_action, o, out);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gwl::Error& e) {
    err << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kCapExceeded: return kExitCap;
      case ErrorCode::kInvalidArgument: return kExitUsage;
      default: return kExitInput;
    }
  }
}

}  // namespace gwl::cli
