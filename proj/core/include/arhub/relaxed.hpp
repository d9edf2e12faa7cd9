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

#include "arhub/instance.hpp"
#include "arhub/oracle.hpp"

namespace arhub {

// Worst-case excess any size-R housing can be forced to pay: |I| * R.
// Every instance with |V_U| >= R admits a housing of excess at most this.
long long guaranteed_bound(const Instance& inst);

// Decides whether some housing achieves excess <= |I|*R - q, for q >= 1.
// Fixed-parameter tractable in q: guesses a set S of at most q inhabitants
// that each save at least one unit against the guarantee together with the
// effective neighbour count eff(s) each will tolerate, removes the others,
// raises ub(s) by eff(s), and solves the residue with the few-inhabitants
// search. Candidate housings are re-verified against the original bounds
// before acceptance, so a yes answer is always sound.
SolveReport solve_below_guarantee(const Instance& inst, int q, const SolveOptions& opts = {});

// Minimum of excess(pi) over all R-sized housings, by enumeration.
// Requires |V_U| >= R; 0 when R = 0.
long long min_excess(const Instance& inst, const SolveOptions& opts = {});

}  // namespace arhub
