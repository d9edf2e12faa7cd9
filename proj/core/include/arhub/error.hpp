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

#include <stdexcept>
#include <string>
#include <string_view>

namespace arhub {

enum class Errc {
    malformed_graph,
    duplicate_occupancy,
    upper_bound_exceeds_degree,
    too_few_vertices,
    placed_on_occupied,
    infeasible_detected,
    budget_exceeded,
    not_a_forest,
    degree_too_high,
    not_complete_bipartite,
    invalid_modulator,
    too_many_inhabitants,
    invalid_decomposition,
    not_divisible_by_3,
    invalid_params,
    parse_error,
    io_error,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace arhub
