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

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxopt/phase.hpp"

namespace zxopt {

using VertexId = std::uint32_t;

enum class VertexKind : std::uint8_t { Boundary, Z, X };
enum class EdgeKind : std::uint8_t { Simple, Hadamard };

struct ZXError : std::runtime_error {
    explicit ZXError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Edge multiplicities between one vertex pair. Parallel edges and
/// self-loops only occur transiently, between a rewrite and the next
/// normalization pass.
struct EdgeMult {
    int simple = 0;
    int hadamard = 0;

    int total() const { return simple + hadamard; }
    bool empty() const { return simple == 0 && hadamard == 0; }
    int& of(EdgeKind k) { return k == EdgeKind::Simple ? simple : hadamard; }
    int of(EdgeKind k) const { return k == EdgeKind::Simple ? simple : hadamard; }
};

struct VertexData {
    VertexKind kind = VertexKind::Z;
    Phase phase;
    // Layout hints recorded while translating a circuit: the qubit line the
    // spider sits on and the interval of gate rows fused into it. -1 = unknown.
    std::int32_t qubit = -1;
    std::int32_t row_min = -1;
    std::int32_t row_max = -1;
};

/**
 * @brief An open ZX-diagram: spiders and boundary vertices with typed edges
 *        and ordered input/output lists.
 *
 * Vertex ids are monotonically increasing and never reused, so external maps
 * (step logs, flows) stay valid across rewrites. Diagrams are plain values;
 * copying gives an independent diagram.
 */
class ZxDiagram {
public:
    VertexId add_vertex(VertexKind kind, Phase phase = Phase(), std::int32_t qubit = -1,
                        std::int32_t row = -1) {
        VertexId id = _next_id++;
        VertexData d;
        d.kind = kind;
        d.phase = phase;
        d.qubit = qubit;
        d.row_min = row;
        d.row_max = row;
        _vertices.emplace(id, d);
        _adj.emplace(id, std::map<VertexId, EdgeMult>());
        return id;
    }

    void add_edge(VertexId u, VertexId v, EdgeKind kind, int count = 1) {
        check_vertex(u);
        check_vertex(v);
        if (count <= 0) throw ZXError("add_edge: count must be positive");
        _adj[u][v].of(kind) += count;
        if (u != v) _adj[v][u].of(kind) += count;
    }

    /// Removes `count` parallel edges of the given kind (throws if absent).
    void remove_edge(VertexId u, VertexId v, EdgeKind kind, int count = 1) {
        auto it = _adj.find(u);
        if (it == _adj.end()) throw ZXError("remove_edge: no such vertex");
        auto jt = it->second.find(v);
        if (jt == it->second.end() || jt->second.of(kind) < count) {
            throw ZXError("remove_edge: no such edge");
        }
        jt->second.of(kind) -= count;
        if (jt->second.empty()) it->second.erase(jt);
        if (u != v) {
            auto& back = _adj[v];
            auto kt = back.find(u);
            kt->second.of(kind) -= count;
            if (kt->second.empty()) back.erase(kt);
        }
    }

    void remove_all_edges(VertexId u, VertexId v) {
        auto it = _adj.find(u);
        if (it == _adj.end()) return;
        it->second.erase(v);
        if (u != v) _adj[v].erase(u);
    }

    void remove_vertex(VertexId v) {
        check_vertex(v);
        for (const auto& [n, mult] : _adj[v]) {
            if (n != v) _adj[n].erase(v);
        }
        _adj.erase(v);
        _vertices.erase(v);
        std::erase(_inputs, v);
        std::erase(_outputs, v);
    }

    bool has_vertex(VertexId v) const { return _vertices.count(v) != 0; }

    const VertexData& vertex(VertexId v) const {
        auto it = _vertices.find(v);
        if (it == _vertices.end()) throw ZXError("no such vertex: " + std::to_string(v));
        return it->second;
    }
    VertexData& vertex(VertexId v) {
        auto it = _vertices.find(v);
        if (it == _vertices.end()) throw ZXError("no such vertex: " + std::to_string(v));
        return it->second;
    }

    VertexKind kind(VertexId v) const { return vertex(v).kind; }
    Phase phase(VertexId v) const { return vertex(v).phase; }
    void set_phase(VertexId v, Phase p) { vertex(v).phase = p; }
    void add_phase(VertexId v, Phase p) { vertex(v).phase += p; }

    bool is_boundary(VertexId v) const { return kind(v) == VertexKind::Boundary; }
    bool is_spider(VertexId v) const { return kind(v) != VertexKind::Boundary; }

    /// Edge endpoints incident to v, counting multiplicity; a self-loop adds 2.
    int degree(VertexId v) const {
        int d = 0;
        for (const auto& [n, mult] : adjacency(v)) d += (n == v ? 2 : 1) * mult.total();
        return d;
    }

    const std::map<VertexId, EdgeMult>& adjacency(VertexId v) const {
        auto it = _adj.find(v);
        if (it == _adj.end()) throw ZXError("no such vertex: " + std::to_string(v));
        return it->second;
    }

    EdgeMult edge(VertexId u, VertexId v) const {
        const auto& a = adjacency(u);
        auto it = a.find(v);
        return it == a.end() ? EdgeMult{} : it->second;
    }

    bool connected(VertexId u, VertexId v) const { return !edge(u, v).empty(); }

    /// Distinct neighbours (excluding v itself), ascending id.
    std::vector<VertexId> neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (const auto& [n, mult] : adjacency(v)) {
            if (n != v && !mult.empty()) out.push_back(n);
        }
        return out;
    }

    const std::map<VertexId, VertexData>& vertices() const { return _vertices; }
    std::size_t vertex_count() const { return _vertices.size(); }

    std::size_t spider_count() const {
        std::size_t n = 0;
        for (const auto& [id, d] : _vertices) {
            if (d.kind != VertexKind::Boundary) ++n;
        }
        return n;
    }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& [u, nbrs] : _adj) {
            for (const auto& [v, mult] : nbrs) {
                if (v >= u) n += static_cast<std::size_t>(mult.total());
            }
        }
        return n;
    }

    const std::vector<VertexId>& inputs() const { return _inputs; }
    const std::vector<VertexId>& outputs() const { return _outputs; }

    void add_input(VertexId v) {
        check_boundary_free(v);
        _inputs.push_back(v);
    }
    void add_output(VertexId v) {
        check_boundary_free(v);
        _outputs.push_back(v);
    }

    /// The unique spider a boundary vertex is attached to, with the edge kind.
    std::pair<VertexId, EdgeKind> boundary_attachment(VertexId b) const {
        if (!is_boundary(b)) throw ZXError("boundary_attachment: not a boundary vertex");
        const auto& a = adjacency(b);
        if (a.size() != 1) throw ZXError("boundary vertex must have degree 1");
        const auto& [n, mult] = *a.begin();
        if (mult.total() != 1) throw ZXError("boundary vertex must have degree 1");
        return {n, mult.hadamard > 0 ? EdgeKind::Hadamard : EdgeKind::Simple};
    }

    /// True if the spider is connected to some input or output boundary vertex.
    bool is_boundary_spider(VertexId v) const {
        for (const auto& [n, mult] : adjacency(v)) {
            if (n != v && !mult.empty() && is_boundary(n)) return true;
        }
        return false;
    }
    bool is_interior(VertexId v) const { return is_spider(v) && !is_boundary_spider(v); }

    /// Boundary vertices attached to a spider.
    std::vector<VertexId> attached_boundaries(VertexId v) const {
        std::vector<VertexId> out;
        for (const auto& [n, mult] : adjacency(v)) {
            if (n != v && !mult.empty() && is_boundary(n)) out.push_back(n);
        }
        return out;
    }

    /// Checks basic well-formedness; throws on violation.
    void validate() const;

    std::string to_json() const;
    static ZxDiagram from_json(const std::string& text);

private:
    void check_vertex(VertexId v) const {
        if (!has_vertex(v)) throw ZXError("no such vertex: " + std::to_string(v));
    }
    void check_boundary_free(VertexId v) const {
        check_vertex(v);
        if (kind(v) != VertexKind::Boundary) throw ZXError("input/output must be a Boundary vertex");
        for (VertexId b : _inputs) {
            if (b == v) throw ZXError("duplicate boundary assignment");
        }
        for (VertexId b : _outputs) {
            if (b == v) throw ZXError("duplicate boundary assignment");
        }
    }

    std::map<VertexId, VertexData> _vertices;
    std::map<VertexId, std::map<VertexId, EdgeMult>> _adj;
    std::vector<VertexId> _inputs;
    std::vector<VertexId> _outputs;
    VertexId _next_id = 0;
};

}  // namespace zxopt
