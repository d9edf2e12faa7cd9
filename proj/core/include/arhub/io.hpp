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

#include <iosfwd>
#include <string>
#include <vector>

#include "arhub/instance.hpp"

namespace arhub {

// On-disk instance document, JSON:
//   { "vertices": N, "edges": [[u,v],...],
//     "inhabitants": [{"vertex": v, "ub": b},...],
//     "refugees": R, "t": optional budget, "modulator": optional [v,...] }
// Vertex ids are 0-based. Unknown keys are rejected; bounds above the
// vertex degree are rejected rather than clamped.
struct InstanceDocument {
    Instance instance;
    std::vector<Vertex> modulator;  // empty when the field is absent
};

InstanceDocument parse_instance(std::istream& in);
InstanceDocument parse_instance_file(const std::string& path);
std::string serialize_instance(const Instance& inst,
                               const std::vector<Vertex>& modulator = {});
void write_instance_file(const std::string& path, const Instance& inst,
                         const std::vector<Vertex>& modulator = {});

// Plain graph document, JSON: { "vertices": N, "edges": [[u,v],...] }.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);

}  // namespace arhub
