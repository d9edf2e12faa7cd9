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

#include "arhub/error.hpp"

namespace arhub {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::malformed_graph: return "malformed_graph";
        case Errc::duplicate_occupancy: return "duplicate_occupancy";
        case Errc::upper_bound_exceeds_degree: return "upper_bound_exceeds_degree";
        case Errc::too_few_vertices: return "too_few_vertices";
        case Errc::placed_on_occupied: return "placed_on_occupied";
        case Errc::infeasible_detected: return "infeasible_detected";
        case Errc::budget_exceeded: return "budget_exceeded";
        case Errc::not_a_forest: return "not_a_forest";
        case Errc::degree_too_high: return "degree_too_high";
        case Errc::not_complete_bipartite: return "not_complete_bipartite";
        case Errc::invalid_modulator: return "invalid_modulator";
        case Errc::too_many_inhabitants: return "too_many_inhabitants";
        case Errc::invalid_decomposition: return "invalid_decomposition";
        case Errc::not_divisible_by_3: return "not_divisible_by_3";
        case Errc::invalid_params: return "invalid_params";
        case Errc::parse_error: return "parse_error";
        case Errc::io_error: return "io_error";
    }
    return "unknown";
}

}  // namespace arhub
