// Copyright 2026 The zxopt authors
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

#include "zxopt/diagram.hpp"

#include <nlohmann/json.hpp>

namespace zxopt {

using ordered_json = nlohmann::ordered_json;

void ZxDiagram::validate() const {
    for (const auto& [id, data] : _vertices) {
        if (data.kind == VertexKind::Boundary) {
            if (!data.phase.is_zero()) {
                throw ZXError("boundary vertex " + std::to_string(id) + " carries a phase");
            }
            if (degree(id) != 1) {
                throw ZXError("boundary vertex " + std::to_string(id) + " has degree != 1");
            }
            bool in_io = false;
            for (VertexId b : _inputs) in_io = in_io || b == id;
            for (VertexId b : _outputs) in_io = in_io || b == id;
            if (!in_io) {
                throw ZXError("boundary vertex " + std::to_string(id) +
                              " is neither input nor output");
            }
        }
    }
    for (VertexId b : _inputs) {
        if (!has_vertex(b) || kind(b) != VertexKind::Boundary) {
            throw ZXError("input list contains a non-boundary vertex");
        }
    }
    for (VertexId b : _outputs) {
        if (!has_vertex(b) || kind(b) != VertexKind::Boundary) {
            throw ZXError("output list contains a non-boundary vertex");
        }
    }
    for (const auto& [u, nbrs] : _adj) {
        for (const auto& [v, mult] : nbrs) {
            if (!has_vertex(v)) throw ZXError("dangling edge endpoint");
            if (mult.simple < 0 || mult.hadamard < 0) throw ZXError("negative edge multiplicity");
        }
    }
}

std::string ZxDiagram::to_json() const {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& [id, data] : _vertices) {
        ordered_json v;
        v["id"] = id;
        switch (data.kind) {
            case VertexKind::Boundary: v["kind"] = "b"; break;
            case VertexKind::Z: v["kind"] = "z"; break;
            case VertexKind::X: v["kind"] = "x"; break;
        }
        v["phase"] = data.phase.to_string();
        j["vertices"].push_back(v);
    }
    j["edges"] = ordered_json::array();
    for (const auto& [u, nbrs] : _adj) {
        for (const auto& [v, mult] : nbrs) {
            if (v < u) continue;  // one entry per unordered pair
            for (int i = 0; i < mult.simple; ++i) j["edges"].push_back({u, v, "s"});
            for (int i = 0; i < mult.hadamard; ++i) j["edges"].push_back({u, v, "h"});
        }
    }
    j["inputs"] = _inputs;
    j["outputs"] = _outputs;
    return j.dump();
}

ZxDiagram ZxDiagram::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ZXError(std::string("diagram JSON parse error: ") + e.what());
    }
    ZxDiagram d;
    // Preserve file ids so serialization round-trips exactly.
    for (const auto& v : j.at("vertices")) {
        VertexId id = v.at("id").get<VertexId>();
        std::string ks = v.at("kind").get<std::string>();
        VertexKind kind;
        if (ks == "b" || ks == "boundary") {
            kind = VertexKind::Boundary;
        } else if (ks == "z") {
            kind = VertexKind::Z;
        } else if (ks == "x") {
            kind = VertexKind::X;
        } else {
            throw ZXError("unknown vertex kind: " + ks);
        }
        auto ph = Phase::parse(v.at("phase").get<std::string>());
        if (!ph) throw ZXError("bad phase string in diagram JSON");
        if (d._vertices.count(id)) throw ZXError("duplicate vertex id in diagram JSON");
        VertexData data;
        data.kind = kind;
        data.phase = *ph;
        d._vertices.emplace(id, data);
        d._adj.emplace(id, std::map<VertexId, EdgeMult>());
        if (id >= d._next_id) d._next_id = id + 1;
    }
    for (const auto& e : j.at("edges")) {
        VertexId u = e.at(0).get<VertexId>();
        VertexId v = e.at(1).get<VertexId>();
        std::string ks = e.at(2).get<std::string>();
        if (!d.has_vertex(u) || !d.has_vertex(v)) throw ZXError("dangling edge endpoint");
        d.add_edge(u, v, ks == "h" ? EdgeKind::Hadamard : EdgeKind::Simple);
    }
    for (const auto& b : j.at("inputs")) d.add_input(b.get<VertexId>());
    for (const auto& b : j.at("outputs")) d.add_output(b.get<VertexId>());
    d.validate();
    return d;
}

}  // namespace zxopt
