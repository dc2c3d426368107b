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
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nashdiv/model.hpp"

namespace nashdiv {

// How a generated document came to be; round-trips through serialization so
// regenerating with the same parameters can be checked byte for byte.
struct GenInfo {
  std::string family;
  std::optional<std::string> generator;  // RNG identifier, e.g. splitmix64/v1
  std::optional<std::uint64_t> seed;
  std::optional<double> density;          // random-binary
  std::optional<std::int64_t> max_value;  // random-identical
};

// A full instance document: the valuation matrix plus at most one utility
// modifier (saturation caps or explicit concave tables) and optional
// generator metadata.
struct InstanceDocument {
  Instance instance;
  std::optional<std::vector<std::int64_t>> caps;
  std::optional<ConcaveProfile> concave;
  std::optional<GenInfo> gen;

  // The symmetric concave profile the modifiers describe, if any.
  std::optional<ConcaveProfile> profile() const {
    if (caps) return caps_profile(instance, *caps);
    return concave;
  }
};

namespace detail {

using Json = nlohmann::json;

inline Json parse_json(std::string_view text, const char* what) {
  Json j = Json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw validation_error(std::string("malformed ") + what +
                           ": not valid JSON");
  return j;
}

inline std::int64_t require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw validation_error(where + " must be an integer");
  return j.get<std::int64_t>();
}

// "p" or "p/q" with nonnegative integer p and positive integer q.
inline Rational parse_rational(const std::string& text,
                               const std::string& where) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view s(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : s.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw validation_error(where + " must look like \"p\" or \"p/q\" with " +
                           "nonnegative integers");
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) throw validation_error(where + " has a zero denominator");
  return Rational(p, q);
}

inline std::string rational_to_string(const Rational& r) {
  std::string s = r.str();
  return s;  // cpp_rational prints "p" or "p/q", already in lowest terms
}

}  // namespace detail

// Parses and validates an instance document:
//   { "agents": n, "goods": m, "valuations": [[...], ...],
//     "caps": [c_1..c_n]?, "concave": [["p/q", ...], ...]?, "gen": {...}? }
// "caps" and "concave" are mutually exclusive. Unknown keys are ignored.
inline InstanceDocument parse_instance(std::string_view text) {
  using detail::Json;
  Json j = detail::parse_json(text, "instance document");
  if (!j.is_object())
    throw validation_error("instance document must be a JSON object");
  for (const char* key : {"agents", "goods", "valuations"})
    if (!j.contains(key))
      throw validation_error(std::string("instance document lacks \"") + key +
                             "\"");

  InstanceDocument doc;
  std::int64_t n = detail::require_int(j["agents"], "\"agents\"");
  std::int64_t m = detail::require_int(j["goods"], "\"goods\"");
  if (n < 1 || n > kMaxAgents)
    throw validation_error("\"agents\" out of range");
  if (m < 1 || m > kMaxGoods)
    throw validation_error("\"goods\" out of range");

  const Json& rows = j["valuations"];
  if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != n)
    throw validation_error("\"valuations\" must list one row per agent");
  std::vector<std::vector<std::int64_t>> values;
  values.reserve(rows.size());
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != m)
      throw validation_error("every valuation row must list one value per "
                             "good");
    std::vector<std::int64_t> r;
    r.reserve(row.size());
    for (const Json& cell : row)
      r.push_back(detail::require_int(cell, "valuation entry"));
    values.push_back(std::move(r));
  }
  doc.instance = make_instance(static_cast<int>(n), static_cast<int>(m),
                               std::move(values));

  if (j.contains("caps") && j.contains("concave"))
    throw validation_error(
        "\"caps\" and \"concave\" are mutually exclusive");
  if (j.contains("caps")) {
    const Json& caps = j["caps"];
    if (!caps.is_array() || static_cast<std::int64_t>(caps.size()) != n)
      throw validation_error("\"caps\" must list one cap per agent");
    std::vector<std::int64_t> c;
    for (const Json& cell : caps)
      c.push_back(detail::require_int(cell, "cap entry"));
    doc.caps = std::move(c);
    caps_profile(doc.instance, *doc.caps);  // validates positivity
  }
  if (j.contains("concave")) {
    const Json& tables = j["concave"];
    if (!tables.is_array() || static_cast<std::int64_t>(tables.size()) != n)
      throw validation_error("\"concave\" must list one table per agent");
    ConcaveProfile p;
    for (const Json& row : tables) {
      if (!row.is_array() || static_cast<std::int64_t>(row.size()) != m + 1)
        throw validation_error(
            "every concave table must list goods+1 entries");
      std::vector<Rational> f;
      for (const Json& cell : row) {
        if (!cell.is_string())
          throw validation_error("concave entries must be rational strings");
        f.push_back(detail::parse_rational(cell.get<std::string>(),
                                           "concave entry"));
      }
      p.tables.push_back(std::move(f));
    }
    validate_profile(doc.instance, p);
    doc.concave = std::move(p);
  }
  if (j.contains("gen") && j["gen"].is_object()) {
    const Json& g = j["gen"];
    GenInfo info;
    if (g.contains("family") && g["family"].is_string())
      info.family = g["family"].get<std::string>();
    if (g.contains("generator") && g["generator"].is_string())
      info.generator = g["generator"].get<std::string>();
    if (g.contains("seed")) {
      const Json& s = g["seed"];
      if (s.is_number_unsigned())  // full uint64 range
        info.seed = s.get<std::uint64_t>();
      else
        info.seed = static_cast<std::uint64_t>(
            detail::require_int(s, "\"seed\""));
    }
    if (g.contains("density") && g["density"].is_number())
      info.density = g["density"].get<double>();
    if (g.contains("max_value"))
      info.max_value = detail::require_int(g["max_value"], "\"max_value\"");
    doc.gen = std::move(info);
  }
  return doc;
}

// Canonical serialization: sorted keys, two-space indent, trailing newline.
// parse_instance(serialize_instance(d)) reproduces d exactly.
inline std::string serialize_instance(const InstanceDocument& doc) {
  using detail::Json;
  validate_instance(doc.instance);
  Json j;
  j["agents"] = doc.instance.num_agents;
  j["goods"] = doc.instance.num_goods;
  j["valuations"] = doc.instance.values;
  if (doc.caps && doc.concave)
    throw validation_error("\"caps\" and \"concave\" are mutually exclusive");
  if (doc.caps) j["caps"] = *doc.caps;
  if (doc.concave) {
    validate_profile(doc.instance, *doc.concave);
    Json tables = Json::array();
    for (const auto& f : doc.concave->tables) {
      Json row = Json::array();
      for (const Rational& r : f) row.push_back(detail::rational_to_string(r));
      tables.push_back(std::move(row));
    }
    j["concave"] = std::move(tables);
  }
  if (doc.gen) {
    Json g;
    g["family"] = doc.gen->family;
    if (doc.gen->generator) g["generator"] = *doc.gen->generator;
    if (doc.gen->seed) g["seed"] = *doc.gen->seed;
    if (doc.gen->density) g["density"] = *doc.gen->density;
    if (doc.gen->max_value) g["max_value"] = *doc.gen->max_value;
    j["gen"] = std::move(g);
  }
  return j.dump(2) + "\n";
}

// Allocation document: { "owner": [a_1, ..., a_m] } with 1-indexed agents.
inline Allocation parse_allocation(std::string_view text, int num_agents,
                                   int num_goods) {
  using detail::Json;
  Json j = detail::parse_json(text, "allocation document");
  if (!j.is_object() || !j.contains("owner") || !j["owner"].is_array())
    throw validation_error(
        "allocation document must be an object with an \"owner\" array");
  const Json& owner = j["owner"];
  if (static_cast<int>(owner.size()) != num_goods)
    throw validation_error("\"owner\" must list one agent per good");
  std::vector<int> o;
  o.reserve(owner.size());
  for (const Json& cell : owner) {
    std::int64_t a = detail::require_int(cell, "owner entry");
    if (a < 1 || a > num_agents)
      throw validation_error("owner entries must be agents between 1 and " +
                             std::to_string(num_agents));
    o.push_back(static_cast<int>(a - 1));
  }
  return allocation_from_owner(num_agents, std::move(o));
}

inline std::string serialize_allocation(const Allocation& alloc) {
  using detail::Json;
  std::vector<int> owner;
  owner.reserve(alloc.owner.size());
  for (int a : alloc.owner) owner.push_back(a + 1);
  Json j;
  j["owner"] = std::move(owner);
  return j.dump(2) + "\n";
}

// --- tiny file helpers -------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write " + path);
  out << text;
  if (!out) throw validation_error("cannot write " + path);
}

inline InstanceDocument load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

}  // namespace nashdiv
