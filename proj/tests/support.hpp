// Copyright 2026 The Authors.
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

// Helpers shared by the test binaries.

#pragma once

#include <string>
#include <vector>

#include "nashdiv/nashdiv.hpp"

namespace testsupport {

inline nashdiv::Instance mk(std::vector<std::vector<std::int64_t>> rows) {
  int n = static_cast<int>(rows.size());
  int m = static_cast<int>(rows[0].size());
  return nashdiv::make_instance(n, m, std::move(rows));
}

namespace detail {
inline void all_paths_rec(const nashdiv::SwapGraph& g, int cur, int to,
                          std::vector<int>& path, std::vector<char>& used,
                          std::vector<std::vector<int>>& out) {
  if (cur == to) {
    out.push_back(path);
    return;
  }
  for (int b = 0; b < g.num_agents; ++b) {
    if (used[b] || g.multiplicity[cur][b] <= 0) continue;
    used[b] = 1;
    path.push_back(b);
    all_paths_rec(g, b, to, path, used, out);
    path.pop_back();
    used[b] = 0;
  }
}
}  // namespace detail

// Every simple directed path from -> ... -> to in the swap graph, as agent
// sequences. Exponential; for tiny n only.
inline std::vector<std::vector<int>> all_simple_paths(
    const nashdiv::SwapGraph& g, int from, int to) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{from};
  std::vector<char> used(g.num_agents, 0);
  used[from] = 1;
  detail::all_paths_rec(g, from, to, path, used, out);
  return out;
}

// Realizes an agent path as a chain, choosing the witness good of each edge
// by index: 0 picks the lowest-indexed witness, -1 the highest.
inline nashdiv::SwapChain chain_on_path(const nashdiv::SwapGraph& g,
                                        const std::vector<int>& path,
                                        int which) {
  nashdiv::SwapChain chain;
  chain.agents = path;
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    const auto& w = g.witnesses[path[t]][path[t + 1]];
    chain.goods.push_back(which == 0 ? w.front() : w.back());
  }
  return chain;
}

// what() of the exception thrown by fn, or "" if it does not throw.
template <typename Fn>
std::string thrown_message(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace testsupport
