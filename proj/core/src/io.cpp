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

#include "arhub/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arhub/error.hpp"

namespace arhub {

namespace {

using nlohmann::json;

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(Errc::parse_error, e.what());
    }
}

void require_keys(const json& doc, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (key == k) known = true;
        if (!known) fail(Errc::parse_error, "unknown key \"" + key + "\"");
    }
}

int require_int(const json& doc, const char* key, int min) {
    if (!doc.contains(key)) fail(Errc::parse_error, std::string("missing key \"") + key + '"');
    const json& v = doc.at(key);
    if (!v.is_number_integer())
        fail(Errc::parse_error, std::string("key \"") + key + "\" must be an integer");
    const long long x = v.get<long long>();
    if (x < min || x > INT32_MAX)
        fail(Errc::parse_error, std::string("key \"") + key + "\" out of range");
    return static_cast<int>(x);
}

std::vector<std::pair<Vertex, Vertex>> read_edges(const json& doc) {
    if (!doc.contains("edges") || !doc.at("edges").is_array())
        fail(Errc::parse_error, "\"edges\" must be an array");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const json& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(Errc::parse_error, "each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot read " + path);
    return in;
}

}  // namespace

InstanceDocument parse_instance(std::istream& in) {
    const json doc = parse_json(in);
    if (!doc.is_object()) fail(Errc::parse_error, "instance document must be an object");
    require_keys(doc, {"vertices", "edges", "inhabitants", "refugees", "t", "modulator"});
    const int n = require_int(doc, "vertices", 0);
    Graph g = Graph::from_edges(n, read_edges(doc));

    if (!doc.contains("inhabitants") || !doc.at("inhabitants").is_array())
        fail(Errc::parse_error, "\"inhabitants\" must be an array");
    std::vector<std::pair<Vertex, int>> inhabitants;
    for (const json& entry : doc.at("inhabitants")) {
        if (!entry.is_object()) fail(Errc::parse_error, "inhabitant entries must be objects");
        require_keys(entry, {"vertex", "ub"});
        inhabitants.emplace_back(require_int(entry, "vertex", 0), require_int(entry, "ub", 0));
    }
    const int refugees = require_int(doc, "refugees", 0);
    std::optional<int> budget;
    if (doc.contains("t")) budget = require_int(doc, "t", 0);

    InstanceDocument out{Instance::make(std::move(g), inhabitants, refugees, budget), {}};
    if (doc.contains("modulator")) {
        if (!doc.at("modulator").is_array())
            fail(Errc::parse_error, "\"modulator\" must be an array");
        for (const json& v : doc.at("modulator")) {
            if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= n)
                fail(Errc::parse_error, "modulator vertex out of range");
            out.modulator.push_back(v.get<int>());
        }
    }
    return out;
}

InstanceDocument parse_instance_file(const std::string& path) {
    auto in = open_input(path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst, const std::vector<Vertex>& modulator) {
    json doc;
    doc["vertices"] = inst.topology.vertex_count();
    json edges = json::array();
    for (auto [u, v] : inst.topology.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    json inhabitants = json::array();
    for (Vertex v : inst.occupied) inhabitants.push_back({{"vertex", v}, {"ub", inst.ub(v)}});
    doc["inhabitants"] = std::move(inhabitants);
    doc["refugees"] = inst.refugees;
    if (inst.relax_budget) doc["t"] = *inst.relax_budget;
    if (!modulator.empty()) doc["modulator"] = modulator;
    return doc.dump(2) + "\n";
}

void write_instance_file(const std::string& path, const Instance& inst,
                         const std::vector<Vertex>& modulator) {
    std::ofstream out(path);
    if (!out) fail(Errc::io_error, "cannot write " + path);
    out << serialize_instance(inst, modulator);
    if (!out) fail(Errc::io_error, "write to " + path + " failed");
}

Graph parse_graph(std::istream& in) {
    const json doc = parse_json(in);
    if (!doc.is_object()) fail(Errc::parse_error, "graph document must be an object");
    require_keys(doc, {"vertices", "edges"});
    const int n = require_int(doc, "vertices", 0);
    return Graph::from_edges(n, read_edges(doc));
}

Graph parse_graph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    json doc;
    doc["vertices"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

}  // namespace arhub
