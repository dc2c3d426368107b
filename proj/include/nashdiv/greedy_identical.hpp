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
#include <cstdint>
#include <numbers>
#include <vector>

#include "nashdiv/model.hpp"

namespace nashdiv {

// Shared view of an identical-valuations instance: one common value per good
// plus the deterministic processing order.
struct IdenticalView {
  std::vector<std::int64_t> common_values;  // v(j) for every good j
  std::vector<int> descending_order;  // positively valued goods, by value
                                      // descending, index ascending on ties
  std::vector<int> zero_goods;        // goods valued 0, ascending
};

inline IdenticalView make_identical_view(const Instance& inst) {
  validate_instance(inst);
  if (!classify(inst).is_identical)
    throw validation_error("instance is not identical");
  IdenticalView view;
  view.common_values = inst.values[0];
  for (int j = 0; j < inst.num_goods; ++j) {
    if (view.common_values[j] > 0)
      view.descending_order.push_back(j);
    else
      view.zero_goods.push_back(j);
  }
  std::stable_sort(view.descending_order.begin(), view.descending_order.end(),
                   [&](int a, int b) {
                     return view.common_values[a] > view.common_values[b];
                   });
  return view;
}

// Greedy run with the partial allocation recorded after every placement.
struct IdenticalRun {
  Allocation allocation;  // final allocation of all goods
  // bundles_after[t] = bundles right after the (t+1)-th positively valued
  // good has been placed (zero-valued goods are not yet attached).
  std::vector<std::vector<std::vector<int>>> bundles_after;
};

// Largest-first greedy for identical valuations: process goods by value
// descending and hand each to a currently poorest agent (lowest index on
// ties). Zero-valued goods go to agent 1 at the end — any owner leaves every
// utility unchanged. The result is envy-free up to any positively valued
// good, and its welfare is within a constant factor of the optimum.
// Recording the after-each-placement snapshots costs O(m) space per placed
// good; pass record_prefixes = false (as solve_identical does) to skip them.
inline IdenticalRun solve_identical_run(const Instance& inst,
                                        bool record_prefixes = true) {
  IdenticalView view = make_identical_view(inst);
  const int n = inst.num_agents;
  std::vector<std::vector<int>> bundles(n);
  std::vector<std::int64_t> load(n, 0);
  IdenticalRun run;
  if (record_prefixes) run.bundles_after.reserve(view.descending_order.size());
  for (int j : view.descending_order) {
    int poorest = 0;
    for (int i = 1; i < n; ++i)
      if (load[i] < load[poorest]) poorest = i;
    bundles[poorest].push_back(j);
    load[poorest] += view.common_values[j];
    if (record_prefixes) run.bundles_after.push_back(bundles);
  }
  for (int j : view.zero_goods) bundles[0].push_back(j);
  for (auto& b : bundles) std::sort(b.begin(), b.end());
  run.allocation = allocation_from_bundles(n, inst.num_goods, std::move(bundles));
  return run;
}

inline Allocation solve_identical(const Instance& inst) {
  return solve_identical_run(inst, /*record_prefixes=*/false).allocation;
}

// Worst-case ratio guaranteed by the greedy against the optimal geometric
// mean: (e · ln 2) / 2 = 0.9420846926818600…, i.e. the optimum never exceeds
// the greedy's welfare by more than a factor 1.0614756908….
inline double efx_ratio_bound() {
  return 0.5 * std::numbers::e * std::numbers::ln2;
}

// Two-agent family showing how little slack the bound leaves: m goods
// (m even, >= 4), two "big" goods of value m-2 and m-2 "unit" goods.
// The designated fair split (see tight_example_allocation) reaches exactly
// 2·sqrt(2)/3 = 0.9428090415… of the optimal geometric mean for every
// member; the greedy itself finds an optimal split on this family.
inline Instance gen_tight_example(int m) {
  if (m < 4 || m % 2 != 0)
    throw validation_error("tight family needs an even number of goods >= 4");
  std::vector<std::int64_t> row(m, 1);
  row[0] = row[1] = m - 2;
  return make_instance(2, m, {row, row});
}

// The designated allocation for gen_tight_example(m): agent 1 takes the two
// big goods, agent 2 all the unit goods. It is envy-free up to any good
// (dropping one big good kills agent 2's envy), with product
// 2(m-2) · (m-2) = 2(m-2)², while the optimum splits the total value evenly
// for ((3/2)(m-2))² = (9/4)(m-2)². The welfare ratio is therefore
// sqrt(8/9) = 2·sqrt(2)/3 exactly, for every even m >= 4.
inline Allocation tight_example_allocation(int m) {
  if (m < 4 || m % 2 != 0)
    throw validation_error("tight family needs an even number of goods >= 4");
  std::vector<int> owner(m, 1);
  owner[0] = owner[1] = 0;
  return allocation_from_owner(2, owner);
}

}  // namespace nashdiv
