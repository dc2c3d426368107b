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
#include <cstdint>
#include <string>
#include <vector>

#include "nashdiv/model.hpp"
#include "nashdiv/nsw.hpp"

namespace nashdiv {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  Allocation best;        // lexicographically smallest owner-vector optimum
  NswValue value;         // exact welfare of `best`
  std::uint64_t explored = 0;  // assignments enumerated (= n^m)
};

namespace detail {

// Throws unless n^m fits the budget; returns n^m.
inline std::uint64_t oracle_required_count(const Instance& inst,
                                           std::uint64_t budget) {
  BigInt required = 1;
  for (int j = 0; j < inst.num_goods; ++j) required *= inst.num_agents;
  if (required > budget)
    throw validation_error(
        "oracle budget exceeded: instance needs " + required.str() +
        " assignments, budget is " + std::to_string(budget));
  return required.convert_to<std::uint64_t>();
}

// True when every possible additive product fits comfortably in uint64, so
// the enumeration can run on machine words.
inline bool oracle_fits_u64(const Instance& inst) {
  long double max_sum = 1;  // +1 cushions log2 rounding
  for (int i = 0; i < inst.num_agents; ++i) {
    long double s = 0;
    for (int j = 0; j < inst.num_goods; ++j) s += inst.values[i][j];
    max_sum = std::max(max_sum, s + 1);
  }
  return inst.num_agents * std::log2(max_sum) < 62.0;
}

// Odometer over owner vectors in ascending lexicographic order (the last
// good's owner varies fastest), maintaining per-agent bundle sums and
// valued-good counts incrementally. Calls visit() once per assignment.
template <typename Visit>
void enumerate_assignments(const Instance& inst, Visit&& visit) {
  const int n = inst.num_agents, m = inst.num_goods;
  std::vector<int> owner(m, 0);
  std::vector<std::int64_t> sums(n, 0);
  std::vector<int> counts(n, 0);
  for (int j = 0; j < m; ++j) {
    sums[0] += inst.values[0][j];
    if (inst.values[0][j] > 0) ++counts[0];
  }
  auto detach = [&](int agent, int good) {
    sums[agent] -= inst.values[agent][good];
    if (inst.values[agent][good] > 0) --counts[agent];
  };
  auto attach = [&](int agent, int good) {
    sums[agent] += inst.values[agent][good];
    if (inst.values[agent][good] > 0) ++counts[agent];
  };
  while (true) {
    visit(owner, sums, counts);
    int j = m - 1;
    while (j >= 0 && owner[j] == n - 1) {
      detach(n - 1, j);
      owner[j] = 0;
      attach(0, j);
      --j;
    }
    if (j < 0) return;
    detach(owner[j], j);
    ++owner[j];
    attach(owner[j], j);
  }
}

}  // namespace detail

// Exhaustive search for the welfare-maximizing allocation. Enumerates all
// n^m owner vectors in ascending lexicographic order and keeps the first
// maximum under the exact NswValue order, so the result is deterministic.
// Pass a profile to maximize symmetric concave welfare instead of additive.
// Throws validation_error when n^m exceeds `budget`.
inline OracleResult brute_force(const Instance& inst,
                                const ConcaveProfile* profile = nullptr,
                                std::uint64_t budget = kDefaultOracleBudget) {
  validate_instance(inst);
  if (profile) validate_profile(inst, *profile);
  const int n = inst.num_agents;
  const std::uint64_t total = detail::oracle_required_count(inst, budget);

  std::vector<int> best_owner;
  int best_zeros = n + 1;

  if (!profile && detail::oracle_fits_u64(inst)) {
    std::uint64_t best_prod = 0;
    detail::enumerate_assignments(
        inst, [&](const std::vector<int>& owner,
                  const std::vector<std::int64_t>& sums,
                  const std::vector<int>&) {
          int zeros = 0;
          std::uint64_t prod = 1;
          for (int i = 0; i < n; ++i) {
            if (sums[i] == 0)
              ++zeros;
            else
              prod *= static_cast<std::uint64_t>(sums[i]);
          }
          if (zeros < best_zeros ||
              (zeros == best_zeros && prod > best_prod)) {
            best_zeros = zeros;
            best_prod = prod;
            best_owner = owner;
          }
        });
  } else {
    Rational best_prod = 0;
    detail::enumerate_assignments(
        inst, [&](const std::vector<int>& owner,
                  const std::vector<std::int64_t>& sums,
                  const std::vector<int>& counts) {
          int zeros = 0;
          Rational prod = 1;
          for (int i = 0; i < n; ++i) {
            Rational f = profile ? profile->tables[i][counts[i]]
                                 : Rational(sums[i]);
            if (f == 0)
              ++zeros;
            else
              prod *= f;
          }
          if (zeros < best_zeros ||
              (zeros == best_zeros && prod > best_prod)) {
            best_zeros = zeros;
            best_prod = prod;
            best_owner = owner;
          }
        });
  }

  OracleResult out;
  out.best = allocation_from_owner(n, best_owner);
  out.value = profile ? nsw_concave(inst, *profile, out.best)
                      : nsw(inst, out.best);
  out.explored = total;
  return out;
}

// Exact welfare of every assignment, in enumeration order (a multiset of
// n^m values). Meant for distribution-level sanity checks on tiny instances.
inline std::vector<NswValue> enumerate_nsw_distribution(
    const Instance& inst, std::uint64_t budget = kDefaultOracleBudget) {
  validate_instance(inst);
  const std::uint64_t total = detail::oracle_required_count(inst, budget);
  std::vector<NswValue> out;
  out.reserve(total);
  detail::enumerate_assignments(
      inst, [&](const std::vector<int>&, const std::vector<std::int64_t>& sums,
                const std::vector<int>&) {
        NswValue v;
        v.num_agents = inst.num_agents;
        BigInt num = 1;
        for (std::int64_t s : sums) {
          if (s == 0)
            ++v.zero_count;
          else
            num *= s;
        }
        v.positive_product = Rational(num);
        out.push_back(std::move(v));
      });
  return out;
}

}  // namespace nashdiv
