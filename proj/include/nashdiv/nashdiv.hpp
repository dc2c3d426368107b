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

// Umbrella header: Nash-social-welfare solvers for indivisible goods.

#pragma once

#include "nashdiv/envy.hpp"           // IWYU pragma: export
#include "nashdiv/errors.hpp"         // IWYU pragma: export
#include "nashdiv/generators.hpp"     // IWYU pragma: export
#include "nashdiv/greedy_binary.hpp"  // IWYU pragma: export
#include "nashdiv/greedy_identical.hpp"  // IWYU pragma: export
#include "nashdiv/io.hpp"             // IWYU pragma: export
#include "nashdiv/matching.hpp"       // IWYU pragma: export
#include "nashdiv/model.hpp"          // IWYU pragma: export
#include "nashdiv/nsw.hpp"            // IWYU pragma: export
#include "nashdiv/oracle.hpp"         // IWYU pragma: export
#include "nashdiv/swap_graph.hpp"     // IWYU pragma: export
