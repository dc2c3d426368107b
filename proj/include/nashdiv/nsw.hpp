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
#include <cstdio>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nashdiv/model.hpp"

namespace nashdiv {

// Natural log of a positive rational, via a 50-digit float intermediate so
// that astronomically large or tiny products stay representable.
inline double log_rational(const Rational& q) {
  if (q <= 0) throw validation_error("log of a non-positive rational");
  using Wide = boost::multiprecision::cpp_bin_float_50;
  Wide num(boost::multiprecision::numerator(q));
  Wide den(boost::multiprecision::denominator(q));
  return (log(num) - log(den)).convert_to<double>();
}

// Exact Nash social welfare value: the geometric mean of the n bundle
// utilities, represented so that comparisons never touch floating point.
// Allocations with fewer zero-utility agents always rank higher; among
// allocations with the same number of zeros, the exact product of the
// positive utilities decides (the n-th root is monotone, so comparing
// products is comparing geometric means).
struct NswValue {
  int num_agents = 0;
  int zero_count = 0;          // agents with zero utility
  Rational positive_product = 1;  // product of the positive utilities

  // Geometric mean as a double: exp(ln(product)/n), or 0 if any factor is 0.
  double to_double() const {
    if (zero_count > 0) return 0.0;
    if (num_agents == 0) return 1.0;
    return std::exp(log_rational(positive_product) / num_agents);
  }

  // Human-readable report line, e.g.
  //   NSW = 5.656854249 (product = 32/1, zeros = 0, n = 2)
  std::string render() const {
    char head[64];
    std::snprintf(head, sizeof(head), "%.10g", to_double());
    std::string p = positive_product.str();
    if (p.find('/') == std::string::npos) p += "/1";
    return "NSW = " + std::string(head) + " (product = " + p +
           ", zeros = " + std::to_string(zero_count) +
           ", n = " + std::to_string(num_agents) + ")";
  }
};

// Total order on NswValue for a fixed number of agents. Throws if the two
// values come from different population sizes.
inline std::strong_ordering compare(const NswValue& a, const NswValue& b) {
  if (a.num_agents != b.num_agents)
    throw validation_error("cannot compare welfare across population sizes");
  if (a.zero_count != b.zero_count)
    // More zero-utility agents = strictly worse.
    return a.zero_count > b.zero_count ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  if (a.positive_product < b.positive_product)
    return std::strong_ordering::less;
  if (a.positive_product > b.positive_product)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace detail {

inline NswValue nsw_from_factors(const std::vector<Rational>& factors) {
  NswValue out;
  out.num_agents = static_cast<int>(factors.size());
  BigInt num = 1, den = 1;
  for (const Rational& f : factors) {
    if (f == 0) {
      ++out.zero_count;
    } else {
      num *= boost::multiprecision::numerator(f);
      den *= boost::multiprecision::denominator(f);
    }
  }
  out.positive_product = Rational(num, den);
  return out;
}

}  // namespace detail

// NSW of an allocation under the instance's additive valuations.
inline NswValue nsw(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  std::vector<Rational> factors(inst.num_agents);
  for (int i = 0; i < inst.num_agents; ++i)
    factors[i] = inst.bundle_value(i, alloc.bundles[i]);
  return detail::nsw_from_factors(factors);
}

// NSW under a symmetric concave profile: agent i contributes
// tables[i][|A_i ∩ Γ_i|].
inline NswValue nsw_concave(const Instance& inst, const ConcaveProfile& profile,
                            const Allocation& alloc) {
  validate_profile(inst, profile);
  validate_allocation(inst, alloc);
  std::vector<Rational> factors(inst.num_agents);
  for (int i = 0; i < inst.num_agents; ++i)
    factors[i] = profile.tables[i][valued_count(inst, i, alloc.bundles[i])];
  return detail::nsw_from_factors(factors);
}

}  // namespace nashdiv
