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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nashdiv {

// A document or in-memory object violates its contract: malformed JSON,
// dimension mismatch, negative entry, broken partition, stale chain, ...
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what)
      : std::runtime_error(what) {}
};

// No allocation with positive Nash social welfare exists, i.e. there is no
// perfect matching of agents to goods they value. `unsatisfiable_agents`
// holds a 0-indexed witness set (a Hall violator: agents whose combined
// desired goods are too few).
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(const std::string& what, std::vector<int> agents)
      : std::runtime_error(what), unsatisfiable_agents(std::move(agents)) {}

  std::vector<int> unsatisfiable_agents;
};

}  // namespace nashdiv
