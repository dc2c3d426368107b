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

#include <cstdint>
#include <optional>
#include <vector>

#include "nashdiv/model.hpp"

namespace nashdiv {

// A concrete fairness violation: `envier` strictly prefers `envied`'s bundle
// (for the up-to-any check, even after `dropped_good` is removed from it).
struct EnvyWitness {
  int envier = -1;
  int envied = -1;
  std::optional<int> dropped_good;  // set by the up-to-any check only
};

// Envy-freeness: no agent values another's bundle strictly above its own.
// Returns the first violation in (envier, envied) lexicographic order.
inline std::optional<EnvyWitness> check_ef(const Instance& inst,
                                           const Allocation& alloc) {
  validate_allocation(inst, alloc);
  for (int i = 0; i < inst.num_agents; ++i) {
    std::int64_t own = inst.bundle_value(i, alloc.bundles[i]);
    for (int k = 0; k < inst.num_agents; ++k) {
      if (k == i) continue;
      if (inst.bundle_value(i, alloc.bundles[k]) > own)
        return EnvyWitness{i, k, std::nullopt};
    }
  }
  return std::nullopt;
}

// Envy-freeness up to any positively valued good: for every pair (i, k),
// v_i(A_i) >= v_i(A_k \ {j}) for every j in A_k with v_i(j) > 0. It suffices
// to drop the cheapest such j (in i's eyes), so the witness — when one
// exists — names an argmin positive-value good of the envied bundle (ties
// broken toward the lowest good index). Bundles that i values at 0
// everywhere impose no constraint.
inline std::optional<EnvyWitness> check_efx(const Instance& inst,
                                            const Allocation& alloc) {
  validate_allocation(inst, alloc);
  for (int i = 0; i < inst.num_agents; ++i) {
    std::int64_t own = inst.bundle_value(i, alloc.bundles[i]);
    for (int k = 0; k < inst.num_agents; ++k) {
      if (k == i) continue;
      std::int64_t other = 0;
      int cheapest = -1;
      std::int64_t cheapest_value = 0;
      for (int j : alloc.bundles[k]) {
        std::int64_t v = inst.values[i][j];
        other += v;
        if (v > 0 && (cheapest == -1 || v < cheapest_value)) {
          cheapest = j;
          cheapest_value = v;
        }
      }
      if (cheapest != -1 && own < other - cheapest_value)
        return EnvyWitness{i, k, cheapest};
    }
  }
  return std::nullopt;
}

}  // namespace nashdiv
