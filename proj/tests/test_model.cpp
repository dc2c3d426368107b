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

#include <catch2/catch_amalgamated.hpp>

#include "nashdiv/nashdiv.hpp"
#include "support.hpp"

using namespace nashdiv;
using testsupport::mk;
using testsupport::thrown_message;

TEST_CASE("instances validate their shape and entries", "[model]") {
  REQUIRE_NOTHROW(mk({{5, 0, 2}, {1, 1, 1}}));
  REQUIRE_THROWS_AS(make_instance(0, 2, {}), validation_error);
  REQUIRE_THROWS_AS(make_instance(1, 0, {{}}), validation_error);
  REQUIRE_THROWS_AS(make_instance(2, 2, {{1, 1}}), validation_error);
  REQUIRE_THROWS_AS(make_instance(1, 2, {{1, 1, 1}}), validation_error);
  REQUIRE_THROWS_AS(mk({{1, -1}}), validation_error);
  REQUIRE_THROWS_AS(mk({{1, kMaxValue + 1}}), validation_error);
  REQUIRE_NOTHROW(mk({{kMaxValue, 0}}));
}

TEST_CASE("classification distinguishes binary and identical", "[model]") {
  auto c = classify(mk({{5, 0, 2}, {1, 1, 1}}));
  CHECK_FALSE(c.is_binary);
  CHECK_FALSE(c.is_identical);

  c = classify(mk({{1, 0, 1}, {0, 1, 1}}));
  CHECK(c.is_binary);
  CHECK_FALSE(c.is_identical);

  c = classify(mk({{5, 4, 3}, {5, 4, 3}}));
  CHECK_FALSE(c.is_binary);
  CHECK(c.is_identical);

  c = classify(mk({{1, 1}, {1, 1}}));
  CHECK(c.is_binary);
  CHECK(c.is_identical);

  // One agent is trivially identical.
  c = classify(mk({{7, 0, 7}}));
  CHECK(c.is_identical);
  CHECK_FALSE(c.is_binary);
}

TEST_CASE("classification agrees with its definition on random instances",
          "[model]") {
  SplitMix64 rng(2026);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.next_below(4));
    int m = 1 + static_cast<int>(rng.next_below(5));
    std::vector<std::vector<std::int64_t>> rows(
        n, std::vector<std::int64_t>(m));
    for (auto& r : rows)
      for (auto& v : r) v = static_cast<std::int64_t>(rng.next_below(3));
    Instance inst = make_instance(n, m, rows);
    bool binary = true, identical = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        binary = binary && rows[i][j] <= 1;
        identical = identical && rows[i][j] == rows[0][j];
      }
    InstanceClass c = classify(inst);
    REQUIRE(c.is_binary == binary);
    REQUIRE(c.is_identical == identical);
  }
}

TEST_CASE("instance helpers report desire sets and valuers", "[model]") {
  Instance inst = mk({{5, 0, 2}, {0, 0, 1}});
  CHECK(inst.desire_set(0) == std::vector<int>{0, 2});
  CHECK(inst.desire_set(1) == std::vector<int>{2});
  CHECK(inst.first_valuer(0) == 0);
  CHECK(inst.first_valuer(1) == -1);  // dead good
  CHECK(inst.first_valuer(2) == 0);
  CHECK(inst.bundle_value(0, {0, 2}) == 7);
  CHECK(valued_count(inst, 1, {0, 1, 2}) == 1);
}

TEST_CASE("allocations are validated as exact partitions", "[model]") {
  Instance inst = mk({{1, 1, 1}, {1, 1, 1}});

  SECTION("a good in two bundles is rejected") {
    Allocation a{{{0, 1}, {1, 2}}, {0, 0, 1}};
    std::string msg = thrown_message([&] { validate_allocation(inst, a); });
    CHECK(msg.find("allocated twice") != std::string::npos);
  }
  SECTION("an unallocated good is rejected") {
    Allocation a{{{0}, {2}}, {0, -1, 1}};
    std::string msg = thrown_message([&] { validate_allocation(inst, a); });
    CHECK(msg.find("unallocated") != std::string::npos);
  }
  SECTION("disagreeing owner and bundle views are rejected") {
    Allocation a{{{0, 1}, {2}}, {0, 1, 1}};
    std::string msg = thrown_message([&] { validate_allocation(inst, a); });
    CHECK(msg.find("disagree") != std::string::npos);
  }
  SECTION("wrong bundle count and out-of-range entries are rejected") {
    REQUIRE_THROWS_AS(validate_allocation(inst, Allocation{{{0, 1, 2}}, {0, 0, 0}}),
                      validation_error);
    REQUIRE_THROWS_AS(
        validate_allocation(inst, Allocation{{{0, 1, 3}, {2}}, {0, 0, 1}}),
        validation_error);
    REQUIRE_THROWS_AS(
        validate_allocation(inst, Allocation{{{0, 1}, {2}}, {0, 0, 5}}),
        validation_error);
  }
  SECTION("a correct partition passes") {
    REQUIRE_NOTHROW(
        validate_allocation(inst, allocation_from_owner(2, {0, 0, 1})));
  }
}

TEST_CASE("every owner vector yields a valid allocation and mutations fail",
          "[model]") {
  Instance inst = mk({{1, 2, 0}, {0, 1, 1}, {2, 2, 2}});
  const int n = 3, m = 3;
  for (int code = 0; code < 27; ++code) {
    std::vector<int> owner(m);
    int c = code;
    for (int j = 0; j < m; ++j) {
      owner[j] = c % n;
      c /= n;
    }
    Allocation a = allocation_from_owner(n, owner);
    REQUIRE_NOTHROW(validate_allocation(inst, a));

    // Dropping any good from its bundle must be caught.
    for (int j = 0; j < m; ++j) {
      Allocation broken = a;
      auto& b = broken.bundles[owner[j]];
      b.erase(std::find(b.begin(), b.end(), j));
      REQUIRE_THROWS_AS(validate_allocation(inst, broken), validation_error);
    }
    // Pointing the owner view elsewhere must be caught.
    for (int j = 0; j < m; ++j) {
      Allocation broken = a;
      broken.owner[j] = (owner[j] + 1) % n;
      REQUIRE_THROWS_AS(validate_allocation(inst, broken), validation_error);
    }
  }
}

TEST_CASE("allocation constructors agree and sort bundles", "[model]") {
  Allocation a = allocation_from_bundles(2, 4, {{3, 0}, {2, 1}});
  CHECK(a.bundles[0] == std::vector<int>{0, 3});
  CHECK(a.owner == std::vector<int>{0, 1, 1, 0});
  Allocation b = allocation_from_owner(2, {0, 1, 1, 0});
  CHECK(a.bundles == b.bundles);
  CHECK(a.owner == b.owner);

  REQUIRE_THROWS_AS(allocation_from_bundles(2, 3, {{0, 1}, {1, 2}}),
                    validation_error);
  REQUIRE_THROWS_AS(allocation_from_bundles(2, 3, {{0}, {2}}),
                    validation_error);
  REQUIRE_THROWS_AS(allocation_from_owner(2, {0, 2}), validation_error);
}

TEST_CASE("concave profiles enforce their invariants", "[model]") {
  Instance inst = mk({{1, 1, 1}, {1, 0, 1}});

  ConcaveProfile good;
  good.tables = {{0, 2, 3, Rational(7, 2)}, {0, 1, 2, 3}};
  REQUIRE_NOTHROW(validate_profile(inst, good));

  ConcaveProfile bad = good;
  bad.tables[0][0] = 1;  // must start at 0
  REQUIRE_THROWS_AS(validate_profile(inst, bad), validation_error);

  bad = good;
  bad.tables[1][1] = 0;  // f(1) must be positive
  REQUIRE_THROWS_AS(validate_profile(inst, bad), validation_error);

  bad = good;
  bad.tables[0][2] = 1;  // decreasing
  REQUIRE_THROWS_AS(validate_profile(inst, bad), validation_error);

  bad = good;
  bad.tables[0] = {0, 1, 2, 4};  // convex corner: increments 1,1,2
  REQUIRE_THROWS_AS(validate_profile(inst, bad), validation_error);

  bad = good;
  bad.tables.pop_back();  // one table per agent
  REQUIRE_THROWS_AS(validate_profile(inst, bad), validation_error);

  bad = good;
  bad.tables[0].pop_back();  // goods+1 entries
  REQUIRE_THROWS_AS(validate_profile(inst, bad), validation_error);
}

TEST_CASE("caps expand to saturating tables", "[model]") {
  Instance inst = mk({{1, 1, 1}, {1, 1, 1}});
  ConcaveProfile p = caps_profile(inst, {1, 2});
  CHECK(p.tables[0] == std::vector<Rational>{0, 1, 1, 1});
  CHECK(p.tables[1] == std::vector<Rational>{0, 1, 2, 2});
  REQUIRE_NOTHROW(validate_profile(inst, p));
  REQUIRE_THROWS_AS(caps_profile(inst, {0, 2}), validation_error);
  REQUIRE_THROWS_AS(caps_profile(inst, {1}), validation_error);
}

TEST_CASE("the identity profile is valid and linear", "[model]") {
  Instance inst = mk({{1, 0, 1}, {1, 1, 1}});
  ConcaveProfile p = identity_profile(inst);
  REQUIRE_NOTHROW(validate_profile(inst, p));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k <= 3; ++k) REQUIRE(p.tables[i][k] == k);
}

TEST_CASE("random concave profiles and caps are always valid", "[model]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    int m = 2 + static_cast<int>(seed % 6);
    Instance inst = gen_random_binary(n, m, 0.6, seed);
    REQUIRE_NOTHROW(validate_profile(inst, gen_random_concave(inst, seed)));
    auto caps = gen_random_caps(n, 3, seed);
    REQUIRE_NOTHROW(validate_profile(inst, caps_profile(inst, caps)));
  }
}
