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
#include <vector>

#include "nashdiv/model.hpp"

namespace nashdiv {

// Identifier recorded in generated documents so files, reruns, and ports can
// be checked against the exact bit stream that produced them.
inline constexpr const char* kGeneratorId = "splitmix64/v1";

// splitmix64: tiny, fast, well-mixed 64-bit generator with a one-word state.
// Fixed here (rather than std::mt19937_64 + distributions) because the
// standard distributions are not bit-reproducible across library
// implementations, and generated instances must be byte-identical for a
// given seed everywhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by modulo fold. The fold's bias is below 2^-50 for
  // every bound used here; determinism matters more than perfect uniformity.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

  // Bernoulli(p) via one next_unit() draw.
  bool next_bernoulli(double p) { return next_unit() < p; }
};

// Random binary instance: each (agent, good) cell is 1 with probability
// `density`, drawn row-major (agent 1's goods first).
inline Instance gen_random_binary(int n, int m, double density,
                                  std::uint64_t seed) {
  if (density < 0.0 || density > 1.0)
    throw validation_error("density must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::vector<std::int64_t>> values(
      n, std::vector<std::int64_t>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      values[i][j] = rng.next_bernoulli(density) ? 1 : 0;
  return make_instance(n, m, std::move(values));
}

// Random identical instance: one shared row with values uniform in
// [1, max_value], drawn good by good.
inline Instance gen_random_identical(int n, int m, std::int64_t max_value,
                                     std::uint64_t seed) {
  if (max_value < 1 || max_value > kMaxValue)
    throw validation_error("max value must be in [1, " +
                           std::to_string(kMaxValue) + "]");
  SplitMix64 rng(seed);
  std::vector<std::int64_t> row(m);
  for (int j = 0; j < m; ++j)
    row[j] = 1 + static_cast<std::int64_t>(
                     rng.next_below(static_cast<std::uint64_t>(max_value)));
  return make_instance(n, m, std::vector<std::vector<std::int64_t>>(n, row));
}

// Random per-agent caps in [1, max_cap], drawn agent by agent.
inline std::vector<std::int64_t> gen_random_caps(int n, std::int64_t max_cap,
                                                 std::uint64_t seed) {
  if (max_cap < 1)
    throw validation_error("max cap must be positive");
  SplitMix64 rng(seed);
  std::vector<std::int64_t> caps(n);
  for (int i = 0; i < n; ++i)
    caps[i] = 1 + static_cast<std::int64_t>(
                      rng.next_below(static_cast<std::uint64_t>(max_cap)));
  return caps;
}

// Random valid concave profile for the instance: per agent, a positive first
// increment d_1 in {1/2, ..., 6} and then d_k = d_{k-1} · r with
// r in {0, 1/2, 2/3, 3/4, 1}, so increments are nonnegative and
// nonincreasing; the table is the prefix sums. Deterministic per seed.
inline ConcaveProfile gen_random_concave(const Instance& inst,
                                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  static const Rational kDecay[] = {Rational(0), Rational(1, 2),
                                    Rational(2, 3), Rational(3, 4),
                                    Rational(1)};
  ConcaveProfile p;
  p.tables.resize(inst.num_agents);
  for (int i = 0; i < inst.num_agents; ++i) {
    auto& f = p.tables[i];
    f.assign(inst.num_goods + 1, Rational(0));
    // Two named draws: C++ leaves argument evaluation order unspecified, and
    // the bit stream must not depend on the compiler.
    std::uint64_t step_num = 1 + rng.next_below(6);
    std::uint64_t step_den = 1 + rng.next_below(2);
    Rational step(step_num, step_den);
    for (int k = 1; k <= inst.num_goods; ++k) {
      f[k] = f[k - 1] + step;
      step *= kDecay[rng.next_below(5)];
    }
  }
  return p;
}

}  // namespace nashdiv
