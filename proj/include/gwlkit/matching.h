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

#ifndef GWLKIT_MATCHING_H_
#define GWLKIT_MATCHING_H_

#include <cstddef>
#include <functional>
#include <vector>

namespace gwl {

// True when the bipartite compatibility relation on n x n items admits a
// perfect matching (Kuhn's augmenting paths). Needed wherever multisets are
// compared under a tolerance, since tolerant equality is not transitive and
// sorting alone cannot pair items up.
inline bool HasPerfectMatching(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& ok) {
  std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) edge[i][j] = ok(i, j) ? 1 : 0;
  }
  std::vector<std::size_t> match_right(n, n);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!edge[i][j] || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] == n || augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    if (!augment(i)) return false;
  }
  return true;
}

}  // namespace gwl

#endif  // GWLKIT_MATCHING_H_
