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

#ifndef GWLKIT_REFINEMENT_H_
#define GWLKIT_REFINEMENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwlkit/graph.h"
#include "gwlkit/isometry.h"

namespace gwl {

enum class TestKind { kWl, kGwl, kIgwl, kIgwlK, kSo2 };
const char* TestKindName(TestKind kind);  // "wl", "gwl", "igwl", "igwl-k", "so2"
TestKind ParseTestKind(std::string_view name);

enum class Termination { kHistogramsDiffer, kPartitionStable, kMaxIters };
const char* TerminationName(Termination t);

// colour -> number of nodes carrying it.
using Histogram = std::map<int, int>;

struct TraceStep {
  Histogram hist1;
  Histogram hist2;
  // Distinct colours over the disjoint union of both graphs.
  std::size_t class_count = 0;
};

struct RefinementTrace {
  std::vector<TraceStep> steps;  // steps[t] for t = 0, 1, ...
  Termination termination = Termination::kMaxIters;
};

struct Verdict {
  bool distinguished = false;
  // First iteration whose histograms differ (when distinguished).
  int iteration = -1;
  // Last iteration computed.
  int iterations_run = 0;
  // The last refinement step left the joint partition unchanged.
  bool stable = false;
};

struct RefinementResult {
  Verdict verdict;
  RefinementTrace trace;
  // Final per-node colours of each graph.
  std::vector<int> colours1;
  std::vector<int> colours2;
};

// Default budgets. GWL: the larger diameter plus one, or n1 + n2 when either
// graph is disconnected. The other tests: n1 + n2.
int DefaultGwlIterations(const GeometricGraph& g1, const GeometricGraph& g2);
int DefaultIterations(const GeometricGraph& g1, const GeometricGraph& g2);

// Joint colour refinement on scalars and adjacency; geometry ignored. Stops
// when histograms differ, the partition is stable, or after max_iters.
RefinementResult RunWl(const GeometricGraph& g1, const GeometricGraph& g2,
                       std::optional<int> max_iters = std::nullopt);

// Geometric WL: nested neighbourhood objects coloured up to the group. GWL
// objects keep growing after the partition settles, and a settled partition
// can split again later, so GWL runs until the histograms differ or the
// budget is spent; `stable` then records whether the last step was idle.
RefinementResult RunGwl(const GeometricGraph& g1, const GeometricGraph& g2,
                        const GroupSpec& group,
                        std::optional<int> max_iters = std::nullopt);

// Invariant GWL: depth-one objects over current colours and fixed geometry.
RefinementResult RunIgwl(const GeometricGraph& g1, const GeometricGraph& g2,
                         const GroupSpec& group,
                         std::optional<int> max_iters = std::nullopt);

// IGWL with k-body descriptors in place of full depth-one objects.
RefinementResult RunIgwlK(const GeometricGraph& g1, const GeometricGraph& g2,
                          const GroupSpec& group, int k,
                          std::optional<int> max_iters = std::nullopt);

// Shared driver for colour refinement over the disjoint union of two graphs
// (graph 1 first). Initial() yields the t = 0 colours; Step() maps the
// colours at t - 1 to those at t.
class ColourStepper {
 public:
  virtual ~ColourStepper() = default;
  virtual std::vector<int> Initial() = 0;
  virtual std::vector<int> Step(const std::vector<int>& previous) = 0;
};

RefinementResult Refine(ColourStepper& stepper, std::size_t n1, int max_iters,
                        bool stop_when_stable);

// True when both colourings induce the same partition of the nodes.
bool SamePartition(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace gwl

#endif  // GWLKIT_REFINEMENT_H_
