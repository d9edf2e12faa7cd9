// Copyright 2026 The arhub Authors
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

#include "arhub/instance.hpp"

namespace arhub {

// Work limits shared by all solvers. When a limit is hit the solver throws
// budget_exceeded; it never degrades into a silent "no".
struct SolveOptions {
    std::uint64_t subset_cap = 100'000'000;       // subset enumerations
    std::uint64_t empty_subset_cap = 1ull << 30;  // power-set oracle
    std::uint64_t dp_cell_cap = 50'000'000;       // dynamic-programming table cells
    std::uint64_t guess_cap = 10'000'000;         // guess loops
    int few_inhabitants_limit = 20;               // bitmask width for type counting
};

// Reference solvers. Deliberately free of pruning beyond the obvious: their
// job is to be trivially correct, and everything else is tested against them.

// All refugee placements of the requested size, in lexicographic order over
// the sorted empty vertices; accepts the first inhabitants-respecting one.
SolveReport solve_by_r_subsets(const Instance& inst, const SolveOptions& opts = {});

// Every subset of the empty vertices, as an independent enumeration route.
SolveReport solve_by_empty_subsets(const Instance& inst, const SolveOptions& opts = {});

// Chooses which empty vertices stay unused instead; complements to a housing.
SolveReport solve_by_extra_houses(const Instance& inst, const SolveOptions& opts = {});

// Relaxed reference: accepts total excess up to the instance budget (0 when
// absent). On "no", stats carry "min_excess" over all full-size placements.
SolveReport solve_relaxed_brute(const Instance& inst, const SolveOptions& opts = {});

}  // namespace arhub
