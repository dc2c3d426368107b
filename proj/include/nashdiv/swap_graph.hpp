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

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "nashdiv/model.hpp"

namespace nashdiv {

// Directed multigraph over agents induced by an allocation: one edge u -> v
// for every good that u currently holds and v desires. An edge means v could
// absorb one of u's goods without waste.
struct SwapGraph {
  int num_agents = 0;
  std::vector<std::vector<int>> multiplicity;  // [u][v] = |A_u ∩ Γ_v|, 0 on
                                               // the diagonal
  std::vector<std::vector<std::vector<int>>> witnesses;  // the goods behind
                                                         // each edge, sorted
};

// A path u_1 -> u_2 -> ... -> u_k of distinct agents together with the goods
// realizing its edges: goods[t] is held by agents[t] and desired by
// agents[t+1]. Applying the chain shifts every goods[t] one step forward, so
// only the endpoints' valued-good counts change (u_1 loses one, u_k gains
// one).
struct SwapChain {
  std::vector<int> agents;
  std::vector<int> goods;
};

inline SwapGraph build_swap_graph(const Instance& inst,
                                  const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.num_agents;
  SwapGraph g;
  g.num_agents = n;
  g.multiplicity.assign(n, std::vector<int>(n, 0));
  g.witnesses.assign(n, std::vector<std::vector<int>>(n));
  for (int u = 0; u < n; ++u) {
    for (int j : alloc.bundles[u]) {
      for (int v = 0; v < n; ++v) {
        if (v == u || inst.values[v][j] <= 0) continue;
        ++g.multiplicity[u][v];
        g.witnesses[u][v].push_back(j);
      }
    }
  }
  // Bundles are scanned in ascending order, but guard against callers who
  // built them unsorted.
  for (auto& row : g.witnesses)
    for (auto& w : row) std::sort(w.begin(), w.end());
  return g;
}

// All ordered pairs (u, v), u != v, with a directed path from u to v, in
// lexicographic order. These are exactly the pairs a chain can connect.
inline std::vector<std::pair<int, int>> reachable_pairs(const SwapGraph& g) {
  const int n = g.num_agents;
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue{u};
    seen[u] = 1;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < n; ++b)
        if (!seen[b] && g.multiplicity[a][b] > 0) {
          seen[b] = 1;
          queue.push_back(b);
        }
    }
    for (int v = 0; v < n; ++v)
      if (v != u && seen[v]) out.emplace_back(u, v);
  }
  return out;
}

// The lexicographically smallest among the shortest u -> v paths, with the
// lowest-indexed witness good on every edge. Deterministic so reruns and
// traces agree. Throws when v is unreachable from u.
inline SwapChain find_chain(const SwapGraph& g, int from, int to) {
  const int n = g.num_agents;
  if (from < 0 || from >= n || to < 0 || to >= n || from == to)
    throw validation_error("chain endpoints must be two distinct agents");
  const int kInf = n + 1;
  // dist_to[a] = shortest distance from a to `to`, via reverse traversal.
  std::vector<int> dist_to(n, kInf);
  dist_to[to] = 0;
  std::deque<int> queue{to};
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    for (int a = 0; a < n; ++a)
      if (dist_to[a] == kInf && g.multiplicity[a][b] > 0) {
        dist_to[a] = dist_to[b] + 1;
        queue.push_back(a);
      }
  }
  if (dist_to[from] == kInf)
    throw validation_error("no chain connects the requested agents");
  SwapChain chain;
  chain.agents.push_back(from);
  int cur = from;
  while (cur != to) {
    // Smallest next agent that stays on a shortest path.
    int next = -1;
    for (int b = 0; b < n && next == -1; ++b)
      if (g.multiplicity[cur][b] > 0 && dist_to[b] == dist_to[cur] - 1)
        next = b;
    if (next == -1)
      throw validation_error("swap graph is inconsistent with its distances");
    chain.goods.push_back(g.witnesses[cur][next].front());
    chain.agents.push_back(next);
    cur = next;
  }
  return chain;
}

// Moves every chain good one step forward along the chain and returns the
// resulting allocation. Verifies the chain against the allocation first
// (stale chains — goods no longer owned as claimed — are rejected), and
// checks the defining property afterwards: only the endpoints' valued-good
// counts changed, by exactly one each.
inline Allocation apply_chain(const Instance& inst, const Allocation& alloc,
                              const SwapChain& chain) {
  validate_allocation(inst, alloc);
  const int k = static_cast<int>(chain.agents.size());
  if (k < 2 || static_cast<int>(chain.goods.size()) != k - 1)
    throw validation_error("chain must list k >= 2 agents and k-1 goods");
  std::vector<char> seen(inst.num_agents, 0);
  for (int a : chain.agents) {
    if (a < 0 || a >= inst.num_agents)
      throw validation_error("chain mentions an out-of-range agent");
    if (seen[a]) throw validation_error("chain repeats an agent");
    seen[a] = 1;
  }
  for (int t = 0; t < k - 1; ++t) {
    int j = chain.goods[t];
    if (j < 0 || j >= inst.num_goods)
      throw validation_error("chain mentions an out-of-range good");
    if (alloc.owner[j] != chain.agents[t])
      throw validation_error("stale chain: good " + std::to_string(j + 1) +
                             " is not owned by agent " +
                             std::to_string(chain.agents[t] + 1));
    if (inst.values[chain.agents[t + 1]][j] <= 0)
      throw validation_error("chain edge good " + std::to_string(j + 1) +
                             " is not desired by its receiver");
  }
  std::vector<int> owner = alloc.owner;
  for (int t = 0; t < k - 1; ++t) owner[chain.goods[t]] = chain.agents[t + 1];
  Allocation next = allocation_from_owner(inst.num_agents, std::move(owner));
  for (int idx = 0; idx < k; ++idx) {
    int a = chain.agents[idx];
    int before = valued_count(inst, a, alloc.bundles[a]);
    int after = valued_count(inst, a, next.bundles[a]);
    int expected = idx == 0 ? -1 : (idx == k - 1 ? 1 : 0);
    if (after - before != expected)
      throw validation_error(
          "chain must shift exactly one valued good from its first agent to "
          "its last");
  }
  return next;
}

}  // namespace nashdiv
