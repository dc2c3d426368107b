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

#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "nashdiv/nashdiv.hpp"
#include "support.hpp"

using namespace nashdiv;
using testsupport::mk;

namespace {

// Exact per-agent bundle sums of an allocation under identical values.
std::vector<std::int64_t> loads(const Instance& inst, const Allocation& a) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < inst.num_agents; ++i)
    out.push_back(inst.bundle_value(i, a.bundles[i]));
  return out;
}

}  // namespace

TEST_CASE("the identical view orders goods by value then index", "[identical]") {
  Instance inst = mk({{2, 0, 2, 5, 1}, {2, 0, 2, 5, 1}});
  IdenticalView view = make_identical_view(inst);
  CHECK(view.common_values == std::vector<std::int64_t>{2, 0, 2, 5, 1});
  CHECK(view.descending_order == std::vector<int>{3, 0, 2, 4});
  CHECK(view.zero_goods == std::vector<int>{1});

  REQUIRE_THROWS_AS(make_identical_view(mk({{1, 2}, {2, 1}})),
                    validation_error);
}

TEST_CASE("largest-first greedy fills the poorest bundle", "[identical]") {
  SECTION("values (5,4,3,2) balance to (7,7)") {
    Instance inst = mk({{5, 4, 3, 2}, {5, 4, 3, 2}});
    Allocation a = solve_identical(inst);
    CHECK(a.bundles[0] == std::vector<int>{0, 3});
    CHECK(a.bundles[1] == std::vector<int>{1, 2});
    CHECK(loads(inst, a) == std::vector<std::int64_t>{7, 7});
  }
  SECTION("values (3,2,2) split as (3,4)") {
    Instance inst = mk({{3, 2, 2}, {3, 2, 2}});
    Allocation a = solve_identical(inst);
    CHECK(a.bundles[0] == std::vector<int>{0});
    CHECK(a.bundles[1] == std::vector<int>{1, 2});
  }
  SECTION("zero-valued goods all land on agent 1") {
    Instance inst = mk({{3, 0, 2}, {3, 0, 2}});
    Allocation a = solve_identical(inst);
    CHECK(a.bundles[0] == std::vector<int>{0, 1});
    CHECK(a.bundles[1] == std::vector<int>{2});
  }
  SECTION("a lone agent takes everything") {
    Instance inst = mk({{4, 0, 1}});
    Allocation a = solve_identical(inst);
    CHECK(a.bundles[0] == std::vector<int>{0, 1, 2});
  }
  SECTION("more agents than goods leaves empty bundles, still fair") {
    Instance inst = mk({{5}, {5}, {5}});
    Allocation a = solve_identical(inst);
    CHECK(a.bundles[0] == std::vector<int>{0});
    CHECK_FALSE(check_efx(inst, a).has_value());
  }
  SECTION("rejects non-identical input") {
    REQUIRE_THROWS_AS(solve_identical(mk({{1, 2}, {2, 1}})), validation_error);
  }
}

TEST_CASE("greedy snapshots record each placement", "[identical]") {
  Instance inst = mk({{5, 4, 3, 2}, {5, 4, 3, 2}});
  IdenticalRun run = solve_identical_run(inst);
  REQUIRE(run.bundles_after.size() == 4);
  CHECK(run.bundles_after[0] == std::vector<std::vector<int>>{{0}, {}});
  CHECK(run.bundles_after[1] == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(run.bundles_after[2] == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(run.bundles_after[3] ==
        std::vector<std::vector<int>>{{0, 3}, {1, 2}});
}

TEST_CASE("every greedy prefix is envy-free up to any good", "[identical]") {
  SplitMix64 rng(505);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng.next_below(4));
    int m = 2 + static_cast<int>(rng.next_below(9));
    std::int64_t maxv = 1 + static_cast<std::int64_t>(rng.next_below(15));
    Instance inst = gen_random_identical(n, m, maxv, rng.next());
    IdenticalRun run = solve_identical_run(inst);
    REQUIRE_FALSE(check_efx(inst, run.allocation).has_value());
    for (const auto& bundles : run.bundles_after) {
      // Rebuild the placed goods as a sub-instance to check the prefix.
      std::vector<int> placed;
      for (const auto& b : bundles)
        placed.insert(placed.end(), b.begin(), b.end());
      std::sort(placed.begin(), placed.end());
      std::vector<int> pos(inst.num_goods, -1);
      for (size_t idx = 0; idx < placed.size(); ++idx)
        pos[placed[idx]] = static_cast<int>(idx);
      std::vector<std::int64_t> row;
      for (int j : placed) row.push_back(inst.values[0][j]);
      Instance sub =
          make_instance(n, static_cast<int>(placed.size()),
                        std::vector<std::vector<std::int64_t>>(n, row));
      std::vector<std::vector<int>> sub_bundles(n);
      for (int i = 0; i < n; ++i)
        for (int j : bundles[i]) sub_bundles[i].push_back(pos[j]);
      Allocation partial = allocation_from_bundles(
          n, static_cast<int>(placed.size()), std::move(sub_bundles));
      REQUIRE_FALSE(check_efx(sub, partial).has_value());
    }
  }
}

TEST_CASE("greedy welfare is within the guaranteed factor of optimal",
          "[identical]") {
  SplitMix64 rng(906);
  int feasible = 0;
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng.next_below(3));
    int m = 2 + static_cast<int>(rng.next_below(6));
    std::int64_t maxv = 1 + static_cast<std::int64_t>(rng.next_below(12));
    Instance inst = gen_random_identical(n, m, maxv, rng.next());
    Allocation greedy = solve_identical(inst);
    OracleResult opt = brute_force(inst);
    NswValue g = nsw(inst, greedy);
    REQUIRE(g.zero_count == opt.value.zero_count);
    if (g.zero_count > 0) continue;
    ++feasible;
    // product_g * 10000^n >= product_opt * 9422^n, all in exact integers.
    BigInt lhs = boost::multiprecision::numerator(g.positive_product);
    BigInt rhs = boost::multiprecision::numerator(opt.value.positive_product);
    for (int i = 0; i < n; ++i) {
      lhs *= 10000;
      rhs *= 9422;
    }
    REQUIRE(lhs >= rhs);
  }
  CHECK(feasible > 0);
}

TEST_CASE("the ratio bound is the right constant", "[identical]") {
  double b = efx_ratio_bound();
  CHECK(std::abs(b - 0.5 * std::numbers::e * std::numbers::ln2) == 0.0);
  CHECK(std::abs(b - 0.9420846926818600) < 1e-15);
  CHECK(b < 1.0);
  CHECK(1.0 / b < 1.0615);
  CHECK(1.0 / b > 1.0614);
}

TEST_CASE("the tight family is built exactly", "[identical]") {
  Instance inst = gen_tight_example(6);
  CHECK(inst.num_agents == 2);
  CHECK(inst.num_goods == 6);
  CHECK(inst.values[0] == std::vector<std::int64_t>{4, 4, 1, 1, 1, 1});
  CHECK(inst.values[1] == inst.values[0]);
  REQUIRE_THROWS_AS(gen_tight_example(5), validation_error);
  REQUIRE_THROWS_AS(gen_tight_example(2), validation_error);
  REQUIRE_THROWS_AS(gen_tight_example(-4), validation_error);
}

TEST_CASE("the designated split hits the worst-case ratio exactly",
          "[identical]") {
  for (int m : {4, 6, 8, 12, 20}) {
    Instance inst = gen_tight_example(m);
    Allocation designated = tight_example_allocation(m);
    REQUIRE_FALSE(check_efx(inst, designated).has_value());
    NswValue d = nsw(inst, designated);
    OracleResult opt = brute_force(inst);
    // Product ratio 8/9, i.e. welfare ratio 2*sqrt(2)/3, exactly.
    CHECK(d.positive_product * 9 == opt.value.positive_product * 8);
    double measured = d.to_double() / opt.value.to_double();
    CHECK(std::abs(measured - 2.0 * std::sqrt(2.0) / 3.0) < 1e-9);
    // The greedy itself is optimal on this family.
    CHECK(compare(nsw(inst, solve_identical(inst)), opt.value) ==
          std::strong_ordering::equal);
  }
}

TEST_CASE("greedy is deterministic", "[identical]") {
  Instance inst = gen_random_identical(4, 9, 17, 99);
  Allocation a = solve_identical(inst);
  Allocation b = solve_identical(inst);
  CHECK(a.owner == b.owner);
  CHECK(a.bundles == b.bundles);
}
