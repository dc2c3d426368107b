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

#pragma once

#include <vector>

#include "nashdiv/model.hpp"

namespace nashdiv {

// Maximum matching between agents and positively valued goods (augmenting
// paths). Deterministic: agents are matched in index order and each agent
// scans its desired goods in index order, so equal inputs give equal
// matchings.
struct BipartiteMatching {
  std::vector<int> agent_to_good;  // -1 when unmatched
  std::vector<int> good_to_agent;  // -1 when unmatched
  int size = 0;
};

namespace detail {

inline bool try_augment(const Instance& inst, int agent,
                        std::vector<char>& visited,
                        BipartiteMatching& match) {
  for (int j = 0; j < inst.num_goods; ++j) {
    if (inst.values[agent][j] <= 0 || visited[j]) continue;
    visited[j] = 1;
    if (match.good_to_agent[j] == -1 ||
        try_augment(inst, match.good_to_agent[j], visited, match)) {
      match.agent_to_good[agent] = j;
      match.good_to_agent[j] = agent;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline BipartiteMatching max_matching(const Instance& inst) {
  BipartiteMatching match;
  match.agent_to_good.assign(inst.num_agents, -1);
  match.good_to_agent.assign(inst.num_goods, -1);
  for (int i = 0; i < inst.num_agents; ++i) {
    std::vector<char> visited(inst.num_goods, 0);
    if (detail::try_augment(inst, i, visited, match)) ++match.size;
  }
  return match;
}

// Given a maximum matching that leaves some agent unmatched, returns a Hall
// violator: agents reachable from the unmatched ones by alternating paths.
// Their combined desired goods number fewer than they do.
inline std::vector<int> hall_violator(const Instance& inst,
                                      const BipartiteMatching& match) {
  std::vector<char> in_set(inst.num_agents, 0);
  std::vector<char> good_seen(inst.num_goods, 0);
  std::vector<int> stack;
  for (int i = 0; i < inst.num_agents; ++i)
    if (match.agent_to_good[i] == -1 && !in_set[i]) {
      in_set[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < inst.num_goods; ++j) {
      if (inst.values[i][j] <= 0 || good_seen[j]) continue;
      good_seen[j] = 1;
      int k = match.good_to_agent[j];
      if (k != -1 && !in_set[k]) {
        in_set[k] = 1;
        stack.push_back(k);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < inst.num_agents; ++i)
    if (in_set[i]) out.push_back(i);
  return out;
}

}  // namespace nashdiv
