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
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nashdiv/errors.hpp"

namespace nashdiv {

using BigInt = boost::multiprecision::cpp_int;
// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Validation limits. They keep any single agent's additive bundle value
// inside int64: kMaxValue * kMaxGoods = 1e18 < 2^62.
inline constexpr std::int64_t kMaxValue = 1'000'000'000'000;  // 1e12
inline constexpr int kMaxAgents = 100'000;
inline constexpr int kMaxGoods = 1'000'000;

// A fair-division instance: n agents, m indivisible goods, and a dense
// nonnegative integer valuation matrix. Agents and goods are 0-indexed in
// memory; all file formats and reports are 1-indexed.
struct Instance {
  int num_agents = 0;
  int num_goods = 0;
  std::vector<std::vector<std::int64_t>> values;  // [agent][good]

  std::int64_t value(int agent, int good) const { return values[agent][good]; }

  std::int64_t bundle_value(int agent, const std::vector<int>& bundle) const {
    std::int64_t sum = 0;
    for (int j : bundle) sum += values[agent][j];
    return sum;
  }

  // Goods the agent values positively, ascending.
  std::vector<int> desire_set(int agent) const {
    std::vector<int> out;
    for (int j = 0; j < num_goods; ++j)
      if (values[agent][j] > 0) out.push_back(j);
    return out;
  }

  // Lowest-indexed agent valuing the good positively, or -1 if none does
  // (a "dead" good).
  int first_valuer(int good) const {
    for (int i = 0; i < num_agents; ++i)
      if (values[i][good] > 0) return i;
    return -1;
  }
};

inline void validate_instance(const Instance& inst) {
  if (inst.num_agents < 1 || inst.num_agents > kMaxAgents)
    throw validation_error("agents must be between 1 and " +
                           std::to_string(kMaxAgents));
  if (inst.num_goods < 1 || inst.num_goods > kMaxGoods)
    throw validation_error("goods must be between 1 and " +
                           std::to_string(kMaxGoods));
  if (static_cast<int>(inst.values.size()) != inst.num_agents)
    throw validation_error("valuation matrix must have one row per agent");
  for (int i = 0; i < inst.num_agents; ++i) {
    if (static_cast<int>(inst.values[i].size()) != inst.num_goods)
      throw validation_error("valuation row " + std::to_string(i + 1) +
                             " must have one entry per good");
    for (int j = 0; j < inst.num_goods; ++j) {
      std::int64_t v = inst.values[i][j];
      if (v < 0)
        throw validation_error("valuations must be nonnegative (agent " +
                               std::to_string(i + 1) + ", good " +
                               std::to_string(j + 1) + ")");
      if (v > kMaxValue)
        throw validation_error("valuations must not exceed " +
                               std::to_string(kMaxValue));
    }
  }
}

inline Instance make_instance(int num_agents, int num_goods,
                              std::vector<std::vector<std::int64_t>> values) {
  Instance inst{num_agents, num_goods, std::move(values)};
  validate_instance(inst);
  return inst;
}

struct InstanceClass {
  bool is_binary = false;     // every valuation is 0 or 1
  bool is_identical = false;  // every agent has the same valuation row
};

inline InstanceClass classify(const Instance& inst) {
  InstanceClass c{true, true};
  for (int i = 0; i < inst.num_agents && (c.is_binary || c.is_identical);
       ++i) {
    for (int j = 0; j < inst.num_goods; ++j) {
      if (inst.values[i][j] > 1) c.is_binary = false;
      if (inst.values[i][j] != inst.values[0][j]) c.is_identical = false;
    }
  }
  return c;
}

// A complete partition of the goods. Both views are stored; validation
// checks they agree. Kept a plain aggregate so callers (and tests) can also
// build intentionally broken ones and feed them to validate_allocation.
struct Allocation {
  std::vector<std::vector<int>> bundles;  // [agent] -> sorted good indices
  std::vector<int> owner;                 // [good] -> owning agent
};

// Builds the bundle view from an owner vector. Throws if any owner index is
// out of range.
inline Allocation allocation_from_owner(int num_agents,
                                        std::vector<int> owner) {
  Allocation a;
  a.bundles.assign(num_agents, {});
  for (int j = 0; j < static_cast<int>(owner.size()); ++j) {
    int i = owner[j];
    if (i < 0 || i >= num_agents)
      throw validation_error("owner of good " + std::to_string(j + 1) +
                             " is out of range");
    a.bundles[i].push_back(j);
  }
  a.owner = std::move(owner);
  return a;
}

// Builds the owner view from bundles. Throws if the bundles are not a
// partition of {0, ..., num_goods-1}.
inline Allocation allocation_from_bundles(
    int num_agents, int num_goods, std::vector<std::vector<int>> bundles) {
  if (static_cast<int>(bundles.size()) != num_agents)
    throw validation_error("expected one bundle per agent");
  Allocation a;
  a.owner.assign(num_goods, -1);
  for (int i = 0; i < num_agents; ++i) {
    for (int j : bundles[i]) {
      if (j < 0 || j >= num_goods)
        throw validation_error("bundle of agent " + std::to_string(i + 1) +
                               " mentions an out-of-range good");
      if (a.owner[j] != -1)
        throw validation_error("good " + std::to_string(j + 1) +
                               " is allocated twice");
      a.owner[j] = i;
    }
    std::sort(bundles[i].begin(), bundles[i].end());
  }
  for (int j = 0; j < num_goods; ++j)
    if (a.owner[j] == -1)
      throw validation_error("good " + std::to_string(j + 1) +
                             " is unallocated");
  a.bundles = std::move(bundles);
  return a;
}

// Checks that `alloc` is a complete, non-overlapping partition of the
// instance's goods and that the bundle and owner views agree.
inline void validate_allocation(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.bundles.size()) != inst.num_agents)
    throw validation_error("allocation must have one bundle per agent");
  if (static_cast<int>(alloc.owner.size()) != inst.num_goods)
    throw validation_error("allocation must assign every good an owner");
  std::vector<int> holder(inst.num_goods, -1);
  for (int i = 0; i < inst.num_agents; ++i) {
    for (int j : alloc.bundles[i]) {
      if (j < 0 || j >= inst.num_goods)
        throw validation_error("bundle of agent " + std::to_string(i + 1) +
                               " mentions an out-of-range good");
      if (holder[j] != -1)
        throw validation_error("good " + std::to_string(j + 1) +
                               " is allocated twice");
      holder[j] = i;
    }
  }
  for (int j = 0; j < inst.num_goods; ++j) {
    if (holder[j] == -1)
      throw validation_error("good " + std::to_string(j + 1) +
                             " is unallocated");
    if (alloc.owner[j] < 0 || alloc.owner[j] >= inst.num_agents)
      throw validation_error("owner of good " + std::to_string(j + 1) +
                             " is out of range");
    if (alloc.owner[j] != holder[j])
      throw validation_error("owner and bundle views disagree on good " +
                             std::to_string(j + 1));
  }
}

// |bundle ∩ Γ_agent|: how many goods of the bundle the agent values.
inline int valued_count(const Instance& inst, int agent,
                        const std::vector<int>& bundle) {
  int c = 0;
  for (int j : bundle)
    if (inst.values[agent][j] > 0) ++c;
  return c;
}

// Symmetric concave valuation profiles: agent i's utility for a bundle B is
// tables[i][|B ∩ Γ_i|]. Each row has num_goods + 1 entries with f(0) = 0,
// f(1) > 0, f nondecreasing and concave.
struct ConcaveProfile {
  std::vector<std::vector<Rational>> tables;
};

inline void validate_profile(const Instance& inst,
                             const ConcaveProfile& profile) {
  if (static_cast<int>(profile.tables.size()) != inst.num_agents)
    throw validation_error("profile must have one table per agent");
  for (int i = 0; i < inst.num_agents; ++i) {
    const auto& f = profile.tables[i];
    if (static_cast<int>(f.size()) != inst.num_goods + 1)
      throw validation_error("profile table " + std::to_string(i + 1) +
                             " must have goods+1 entries");
    if (f[0] != 0)
      throw validation_error("profile table " + std::to_string(i + 1) +
                             " must start at 0");
    if (f[1] <= 0)
      throw validation_error("profile table " + std::to_string(i + 1) +
                             " must be positive at 1");
    for (int k = 1; k <= inst.num_goods; ++k)
      if (f[k] < f[k - 1])
        throw validation_error("profile table " + std::to_string(i + 1) +
                               " must be nondecreasing");
    for (int k = 1; k < inst.num_goods; ++k)
      if (f[k + 1] - f[k] > f[k] - f[k - 1])
        throw validation_error("profile table " + std::to_string(i + 1) +
                               " must be concave");
  }
}

// f_i(k) = min(caps[i], k): utility saturates at the agent's cap.
inline ConcaveProfile caps_profile(const Instance& inst,
                                   const std::vector<std::int64_t>& caps) {
  if (static_cast<int>(caps.size()) != inst.num_agents)
    throw validation_error("expected one cap per agent");
  ConcaveProfile p;
  p.tables.resize(inst.num_agents);
  for (int i = 0; i < inst.num_agents; ++i) {
    if (caps[i] < 1)
      throw validation_error("caps must be positive (agent " +
                             std::to_string(i + 1) + ")");
    auto& f = p.tables[i];
    f.resize(inst.num_goods + 1);
    for (int k = 0; k <= inst.num_goods; ++k)
      f[k] = std::min<std::int64_t>(caps[i], k);
  }
  return p;
}

// f_i(k) = k for every agent; under this profile the symmetric utility of a
// bundle equals its additive binary value.
inline ConcaveProfile identity_profile(const Instance& inst) {
  ConcaveProfile p;
  p.tables.assign(inst.num_agents, {});
  for (auto& f : p.tables) {
    f.resize(inst.num_goods + 1);
    for (int k = 0; k <= inst.num_goods; ++k) f[k] = k;
  }
  return p;
}

}  // namespace nashdiv
