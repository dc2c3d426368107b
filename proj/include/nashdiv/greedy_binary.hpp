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

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashdiv/matching.hpp"
#include "nashdiv/model.hpp"
#include "nashdiv/nsw.hpp"
#include "nashdiv/swap_graph.hpp"

namespace nashdiv {

// Effect of one chain from u to v on the welfare value (z, p):
// z becomes z + zero_delta and p becomes p * product_ratio. Gains compose by
// adding deltas and multiplying ratios, mirroring how NswValue itself
// composes, so ranking gains ranks the resulting allocations.
struct ChainGain {
  int zero_delta = 0;         // net change in the number of zero-utility agents
  Rational product_ratio = 1;  // exact multiplier on the positive product
};

// Larger = better: fewer zero agents first, then a bigger product ratio.
inline std::strong_ordering compare(const ChainGain& a, const ChainGain& b) {
  if (a.zero_delta != b.zero_delta)
    return a.zero_delta > b.zero_delta ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  if (a.product_ratio < b.product_ratio) return std::strong_ordering::less;
  if (a.product_ratio > b.product_ratio) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Strictly better than doing nothing (the neutral gain {0, 1}).
inline bool improving(const ChainGain& g) {
  return compare(g, ChainGain{}) == std::strong_ordering::greater;
}

// Gain of moving one valued good from agent u (holding counts_u valued
// goods, counts_u >= 1) to agent v (holding counts_v). Under additive binary
// utilities (profile == nullptr) the utilities are the counts themselves;
// under a profile they are table lookups. Zero-crossing factors move between
// the zero census and the product, hence the two-part gain.
inline ChainGain chain_gain(const Instance& inst, int counts_u, int counts_v,
                            const ConcaveProfile* profile, int u, int v) {
  if (counts_u < 1)
    throw validation_error("chain gain needs a donor with a valued good");
  if (counts_v < 0 || counts_v + 1 > inst.num_goods ||
      counts_u > inst.num_goods)
    throw validation_error("valued-good counts exceed the instance size");
  auto f = [&](int agent, int k) -> Rational {
    return profile ? profile->tables[agent][k] : Rational(k);
  };
  Rational fu_cur = f(u, counts_u);
  Rational fu_next = f(u, counts_u - 1);
  Rational fv_cur = f(v, counts_v);
  Rational fv_next = f(v, counts_v + 1);
  if (fu_cur <= 0)
    throw validation_error("chain gain needs a donor with positive utility");
  ChainGain g;
  if (fu_next == 0) ++g.zero_delta;
  if (fv_cur == 0) --g.zero_delta;
  Rational num = fv_next * (fu_next == 0 ? Rational(1) : fu_next);
  Rational den = fu_cur * (fv_cur == 0 ? Rational(1) : fv_cur);
  g.product_ratio = num / den;
  return g;
}

// ceil(2·m·(n+1)·ln(n·m)), floored at 1: an upper bound on how many accepted
// chains the solver can need before stabilizing.
inline long long iteration_cap(int num_agents, int num_goods) {
  double raw = 2.0 * num_goods * (num_agents + 1) *
               std::log(static_cast<double>(num_agents) * num_goods);
  long long cap = static_cast<long long>(std::ceil(raw));
  return cap < 1 ? 1 : cap;
}

// Matching-based start: every agent gets one good it values (throws
// infeasible_error with a witness agent set when impossible), every other
// good goes to its lowest-indexed valuer, dead goods to agent 1.
inline Allocation initial_allocation(const Instance& inst) {
  validate_instance(inst);
  BipartiteMatching match = max_matching(inst);
  if (match.size < inst.num_agents) {
    std::vector<int> witness = hall_violator(inst, match);
    throw infeasible_error(
        "no allocation gives every agent positive utility", witness);
  }
  std::vector<int> owner(inst.num_goods, -1);
  for (int i = 0; i < inst.num_agents; ++i)
    owner[match.agent_to_good[i]] = i;
  for (int j = 0; j < inst.num_goods; ++j) {
    if (owner[j] != -1) continue;
    int valuer = inst.first_valuer(j);
    owner[j] = valuer == -1 ? 0 : valuer;
  }
  return allocation_from_owner(inst.num_agents, owner);
}

// One accepted improvement step, with the exact welfare after it.
struct TraceRow {
  int iteration = 0;   // 1-based
  int from_agent = 0;  // 0-indexed donor (chain start)
  int to_agent = 0;    // 0-indexed receiver (chain end)
  int path_len = 0;    // agents on the chain; a direct transfer has length 2
  NswValue value;
};

struct BinarySolution {
  Allocation allocation;
  std::vector<TraceRow> trace;
  NswValue start_value;     // welfare before the first iteration
  bool stabilized = true;   // false only if the iteration cap cut the loop
  long long cap = 0;        // the cap that applied
};

// Exact welfare maximization for binary instances (optionally under a
// symmetric concave profile). Repeatedly builds the swap graph, evaluates the
// gain of every reachable (donor, receiver) pair, and applies a chain for the
// best strictly improving pair (lexicographically first on ties) until no
// pair improves. Stabilization implies global optimality in the exact
// welfare order.
//
// A caller-supplied start is normalized first: any good held by an agent
// that does not value it moves to its lowest-indexed valuer (welfare never
// drops; goods valued by nobody stay put). The normalization is not an
// iteration: it restores the invariant — kept by every chain — that every
// allocated good is either dead or valued by its owner, which is what makes
// the two-endpoint gain model exact.
inline BinarySolution solve_binary(const Instance& inst,
                                   const Allocation* start = nullptr,
                                   const ConcaveProfile* profile = nullptr) {
  validate_instance(inst);
  if (!classify(inst).is_binary)
    throw validation_error("instance is not binary");
  if (profile) validate_profile(inst, *profile);

  Allocation alloc;
  if (start) {
    validate_allocation(inst, *start);
    std::vector<int> owner = start->owner;
    for (int j = 0; j < inst.num_goods; ++j) {
      if (inst.values[owner[j]][j] > 0) continue;
      int valuer = inst.first_valuer(j);
      if (valuer != -1) owner[j] = valuer;
    }
    alloc = allocation_from_owner(inst.num_agents, std::move(owner));
  } else {
    alloc = initial_allocation(inst);
  }

  const int n = inst.num_agents;
  std::vector<int> counts(n);
  for (int i = 0; i < n; ++i)
    counts[i] = valued_count(inst, i, alloc.bundles[i]);

  auto welfare = [&](const Allocation& a) {
    return profile ? nsw_concave(inst, *profile, a) : nsw(inst, a);
  };

  BinarySolution sol;
  sol.cap = iteration_cap(inst.num_agents, inst.num_goods);
  sol.start_value = welfare(alloc);
  for (long long iter = 1;; ++iter) {
    if (iter > sol.cap) {
      sol.stabilized = false;
      break;
    }
    SwapGraph graph = build_swap_graph(inst, alloc);
    std::optional<std::pair<int, int>> best;
    ChainGain best_gain;
    for (auto [u, v] : reachable_pairs(graph)) {
      if (counts[u] < 1) continue;  // donor has nothing valued to give
      ChainGain gain = chain_gain(inst, counts[u], counts[v], profile, u, v);
      if (!improving(gain)) continue;
      if (!best || compare(gain, best_gain) == std::strong_ordering::greater) {
        best = {u, v};
        best_gain = gain;
      }
    }
    if (!best) {
      sol.stabilized = true;
      break;
    }
    SwapChain chain = find_chain(graph, best->first, best->second);
    alloc = apply_chain(inst, alloc, chain);
    --counts[best->first];
    ++counts[best->second];
    sol.trace.push_back(TraceRow{static_cast<int>(iter), best->first,
                                 best->second,
                                 static_cast<int>(chain.agents.size()),
                                 welfare(alloc)});
  }
  sol.allocation = std::move(alloc);
  return sol;
}

}  // namespace nashdiv
