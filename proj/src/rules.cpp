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

#include "zxopt/rules.hpp"

#include <algorithm>

namespace zxopt {

VertexId fuse(ZxDiagram& d, VertexId u, VertexId v) {
    if (u == v) throw ZXError("fuse: vertices must differ");
    VertexKind ku = d.kind(u);
    VertexKind kv = d.kind(v);
    if (ku == VertexKind::Boundary || kv == VertexKind::Boundary) {
        throw ZXError("fuse: boundary vertex");
    }
    if (ku != kv) throw ZXError("fuse: spider kind mismatch");
    if (d.edge(u, v).simple < 1) throw ZXError("fuse: no Simple edge between spiders");

    VertexId keep = std::min(u, v);
    VertexId gone = std::max(u, v);

    // all connecting Simple wires are consumed by the fusion; connecting
    // Hadamard edges become self-loops on the survivor
    EdgeMult between = d.edge(u, v);
    d.remove_all_edges(u, v);
    if (between.hadamard > 0) d.add_edge(keep, keep, EdgeKind::Hadamard, between.hadamard);

    d.add_phase(keep, d.phase(gone));

    // merge layout hints when they are consistent
    auto& kd = d.vertex(keep);
    const auto& gd = d.vertex(gone);
    if (kd.qubit != gd.qubit) {
        kd.qubit = -1;
        kd.row_min = kd.row_max = -1;
    } else if (kd.row_min >= 0 && gd.row_min >= 0) {
        kd.row_min = std::min(kd.row_min, gd.row_min);
        kd.row_max = std::max(kd.row_max, gd.row_max);
    }

    // reattach the rest of gone's edges (self-loops on gone stay self-loops)
    std::vector<std::pair<VertexId, EdgeMult>> moved(d.adjacency(gone).begin(),
                                                     d.adjacency(gone).end());
    for (const auto& [n, mult] : moved) {
        VertexId tgt = (n == gone) ? keep : n;
        if (mult.simple > 0) d.add_edge(keep, tgt, EdgeKind::Simple, mult.simple);
        if (mult.hadamard > 0) d.add_edge(keep, tgt, EdgeKind::Hadamard, mult.hadamard);
    }
    d.remove_vertex(gone);
    return keep;
}

void color_change(ZxDiagram& d, VertexId v) {
    VertexKind k = d.kind(v);
    if (k == VertexKind::Boundary) throw ZXError("color_change: boundary vertex");
    d.vertex(v).kind = (k == VertexKind::Z) ? VertexKind::X : VertexKind::Z;
    // toggle every incident edge once; a self-loop is conjugated on both
    // ends and keeps its kind
    std::vector<std::pair<VertexId, EdgeMult>> inc(d.adjacency(v).begin(), d.adjacency(v).end());
    for (const auto& [n, mult] : inc) {
        if (n == v) continue;
        d.remove_all_edges(v, n);
        if (mult.simple > 0) d.add_edge(v, n, EdgeKind::Hadamard, mult.simple);
        if (mult.hadamard > 0) d.add_edge(v, n, EdgeKind::Simple, mult.hadamard);
    }
}

void remove_identity(ZxDiagram& d, VertexId v) {
    if (!d.is_spider(v)) throw ZXError("remove_identity: not a spider");
    if (!d.phase(v).is_zero()) throw ZXError("remove_identity: nonzero phase");
    if (d.degree(v) != 2) throw ZXError("remove_identity: degree != 2");
    if (!d.edge(v, v).empty()) throw ZXError("remove_identity: self-loop");

    // exactly two edge endpoints to collect
    std::vector<std::pair<VertexId, EdgeKind>> ends;
    for (const auto& [n, mult] : d.adjacency(v)) {
        for (int i = 0; i < mult.simple; ++i) ends.emplace_back(n, EdgeKind::Simple);
        for (int i = 0; i < mult.hadamard; ++i) ends.emplace_back(n, EdgeKind::Hadamard);
    }
    EdgeKind joined = (ends[0].second == ends[1].second) ? EdgeKind::Simple : EdgeKind::Hadamard;
    VertexId a = ends[0].first;
    VertexId b = ends[1].first;
    d.remove_vertex(v);
    d.add_edge(a, b, joined);
}

void normalize_multiedges(ZxDiagram& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexId> ids;
        for (const auto& [id, data] : d.vertices()) ids.push_back(id);
        for (VertexId u : ids) {
            if (!d.has_vertex(u) || !d.is_spider(u)) continue;

            // self-loops first
            EdgeMult self = d.edge(u, u);
            if (self.simple > 0) {
                d.remove_edge(u, u, EdgeKind::Simple, self.simple);
                changed = true;
            }
            if (self.hadamard > 0) {
                d.remove_edge(u, u, EdgeKind::Hadamard, self.hadamard);
                if (self.hadamard % 2 == 1) d.add_phase(u, Phase::pi());
                else if (self.hadamard >= 2) { /* pairs cancel to pi+pi = 0 */ }
                if (self.hadamard > 1) d.add_phase(u, Phase(self.hadamard - 1));
                changed = true;
            }

            std::vector<VertexId> nbrs = d.neighbors(u);
            for (VertexId v : nbrs) {
                if (!d.has_vertex(u)) break;
                if (!d.has_vertex(v) || !d.is_spider(v)) continue;
                EdgeMult m = d.edge(u, v);
                if (d.kind(u) == d.kind(v)) {
                    if (m.simple > 0) {
                        // fusing handles any accompanying parallels
                        fuse(d, u, v);
                        changed = true;
                        break;
                    }
                    if (m.hadamard >= 2) {
                        d.remove_edge(u, v, EdgeKind::Hadamard, (m.hadamard / 2) * 2);
                        changed = true;
                    }
                } else {
                    // Z--X pair: double Simple edges cancel by the antipode rule
                    if (m.simple >= 2) {
                        d.remove_edge(u, v, EdgeKind::Simple, (m.simple / 2) * 2);
                        changed = true;
                    }
                    // parallel Hadamard pair between opposite colours is a
                    // colour-changed antipode; resolved likewise
                    if (m.hadamard >= 2) {
                        d.remove_edge(u, v, EdgeKind::Hadamard, (m.hadamard / 2) * 2);
                        changed = true;
                    }
                }
            }
        }
    }
}

void apply_antipode(ZxDiagram& d, VertexId u, VertexId v) {
    VertexKind ku = d.kind(u);
    VertexKind kv = d.kind(v);
    bool colored = (ku == VertexKind::Z && kv == VertexKind::X) ||
                   (ku == VertexKind::X && kv == VertexKind::Z);
    if (!colored) throw ZXError("apply_antipode: need one Z- and one X-spider");
    if (d.edge(u, v).simple != 2) throw ZXError("apply_antipode: need exactly two Simple edges");
    d.remove_edge(u, v, EdgeKind::Simple, 2);
}

void apply_pi_copy(ZxDiagram& d, VertexId x_vertex, VertexId z_vertex) {
    if (d.kind(x_vertex) != VertexKind::X || d.phase(x_vertex) != Phase::pi() ||
        d.degree(x_vertex) != 1) {
        throw ZXError("apply_pi_copy: first vertex must be a degree-1 X(pi) spider");
    }
    if (d.kind(z_vertex) != VertexKind::Z) throw ZXError("apply_pi_copy: second vertex must be Z");
    if (d.edge(x_vertex, z_vertex).simple != 1) {
        throw ZXError("apply_pi_copy: spiders must be joined by one Simple edge");
    }

    d.set_phase(z_vertex, -d.phase(z_vertex));
    d.remove_vertex(x_vertex);

    // attach a fresh X(pi) leg to every remaining edge endpoint of z
    std::vector<std::pair<VertexId, EdgeMult>> inc(d.adjacency(z_vertex).begin(),
                                                   d.adjacency(z_vertex).end());
    for (const auto& [n, mult] : inc) {
        if (n == z_vertex) throw ZXError("apply_pi_copy: self-loop on Z-spider");
        for (int i = 0; i < mult.simple; ++i) {
            d.remove_edge(z_vertex, n, EdgeKind::Simple);
            VertexId pi = d.add_vertex(VertexKind::X, Phase::pi());
            d.add_edge(z_vertex, pi, EdgeKind::Simple);
            d.add_edge(pi, n, EdgeKind::Simple);
        }
        for (int i = 0; i < mult.hadamard; ++i) {
            d.remove_edge(z_vertex, n, EdgeKind::Hadamard);
            VertexId pi = d.add_vertex(VertexKind::X, Phase::pi());
            d.add_edge(z_vertex, pi, EdgeKind::Simple);
            d.add_edge(pi, n, EdgeKind::Hadamard);
        }
    }
}

GraphLikeReport is_graph_like(const ZxDiagram& d) {
    GraphLikeReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    for (const auto& [id, data] : d.vertices()) {
        if (data.kind == VertexKind::X) {
            fail("condition 1: vertex " + std::to_string(id) + " is an X-spider");
        }
    }
    for (const auto& [u, data] : d.vertices()) {
        if (data.kind == VertexKind::Boundary) continue;
        for (const auto& [v, mult] : d.adjacency(u)) {
            if (v < u) continue;
            if (u == v && mult.total() > 0) {
                fail("condition 3: self-loop on vertex " + std::to_string(u));
                continue;
            }
            if (d.is_boundary(v)) continue;
            if (mult.simple > 0) {
                fail("condition 2: Simple edge between spiders " + std::to_string(u) + "," +
                     std::to_string(v));
            }
            if (mult.total() > 1) {
                fail("condition 3: parallel edges between " + std::to_string(u) + "," +
                     std::to_string(v));
            }
        }
    }
    for (VertexId b : d.inputs()) {
        if (d.degree(b) != 1 || !d.is_spider(d.adjacency(b).begin()->first)) {
            fail("condition 4: input " + std::to_string(b) + " not attached to a spider");
        }
    }
    for (VertexId b : d.outputs()) {
        if (d.degree(b) != 1 || !d.is_spider(d.adjacency(b).begin()->first)) {
            fail("condition 4: output " + std::to_string(b) + " not attached to a spider");
        }
    }
    for (const auto& [id, data] : d.vertices()) {
        if (data.kind == VertexKind::Boundary) continue;
        if (d.attached_boundaries(id).size() > 1) {
            fail("condition 4: spider " + std::to_string(id) + " attached to several boundaries");
        }
    }
    return rep;
}

namespace {

// Splits the boundary edge (s -- b) as s --H-- dummy --(kind^H)-- b, making
// `dummy` the spider attached to b. Preserves the wire's map since the two
// introduced Hadamards cancel through the phase-free dummy.
VertexId insert_boundary_dummy(ZxDiagram& d, VertexId s, VertexId b, EdgeKind kind) {
    const auto& sd = d.vertex(s);
    std::int32_t row = sd.row_max;
    bool is_input = false;
    for (VertexId i : d.inputs()) is_input = is_input || i == b;
    VertexId dummy = d.add_vertex(VertexKind::Z, Phase(), sd.qubit,
                                  row < 0 ? -1 : (is_input ? sd.row_min - 1 : row + 1));
    d.remove_edge(s, b, kind);
    d.add_edge(s, dummy, EdgeKind::Hadamard);
    d.add_edge(dummy, b,
               kind == EdgeKind::Hadamard ? EdgeKind::Simple : EdgeKind::Hadamard);
    return dummy;
}

}  // namespace

void to_graph_like(ZxDiagram& d) {
    // 1. colour-change every X-spider; Hadamard cancellation is implicit in
    //    the edge-kind toggles
    std::vector<VertexId> xs;
    for (const auto& [id, data] : d.vertices()) {
        if (data.kind == VertexKind::X) xs.push_back(id);
    }
    for (VertexId v : xs) color_change(d, v);

    // 2. fuse across Simple spider-spider edges and clean multi-edges until
    //    saturated, folding away interior phase-0 identities as they appear
    bool changed = true;
    while (changed) {
        changed = false;
        normalize_multiedges(d);

        std::vector<VertexId> ids;
        for (const auto& [id, data] : d.vertices()) ids.push_back(id);
        for (VertexId u : ids) {
            if (!d.has_vertex(u) || !d.is_spider(u)) continue;
            for (VertexId v : d.neighbors(u)) {
                if (d.is_spider(v) && d.edge(u, v).simple > 0) {
                    fuse(d, u, v);
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;

        for (VertexId u : ids) {
            if (!d.has_vertex(u) || !d.is_spider(u)) continue;
            if (!d.phase(u).is_zero() || d.degree(u) != 2 || !d.edge(u, u).empty()) continue;
            auto nbrs = d.neighbors(u);
            if (nbrs.size() != 2) continue;  // parallel pair; normalization handles it
            if (!d.is_spider(nbrs[0]) || !d.is_spider(nbrs[1])) continue;
            remove_identity(d, u);
            changed = true;
            break;
        }
    }

    // 3. boundary conditions: every input/output attached to its own spider
    std::vector<VertexId> boundaries = d.inputs();
    boundaries.insert(boundaries.end(), d.outputs().begin(), d.outputs().end());

    for (VertexId b : boundaries) {
        auto [n, kind] = d.boundary_attachment(b);
        if (d.is_boundary(n)) {
            // bare (possibly Hadamard) wire between two boundaries
            bool b_is_input = false;
            for (VertexId i : d.inputs()) b_is_input = b_is_input || i == b;
            VertexId in_b = b_is_input ? b : n;
            VertexId out_b = b_is_input ? n : b;
            std::int32_t qubit = -1;
            for (std::size_t q = 0; q < d.inputs().size(); ++q) {
                if (d.inputs()[q] == in_b) qubit = static_cast<std::int32_t>(q);
            }
            d.remove_edge(b, n, kind);
            VertexId z1 = d.add_vertex(VertexKind::Z, Phase(), qubit, 0);
            VertexId z2 = d.add_vertex(VertexKind::Z, Phase(), qubit, 1);
            d.add_edge(in_b, z1, EdgeKind::Simple);
            d.add_edge(z1, z2, EdgeKind::Hadamard);
            d.add_edge(z2, out_b,
                       kind == EdgeKind::Hadamard ? EdgeKind::Simple : EdgeKind::Hadamard);
        }
    }

    // spiders holding more than one boundary keep the first (inputs before
    // outputs) and get a dummy for each further one
    for (VertexId b : boundaries) {
        if (!d.has_vertex(b)) continue;
        auto [s, kind] = d.boundary_attachment(b);
        if (d.is_boundary(s)) continue;  // handled above
        auto attached = d.attached_boundaries(s);
        if (attached.size() <= 1) continue;
        // keep the earliest boundary in I-then-O order attached directly
        VertexId first = 0;
        bool found = false;
        for (VertexId cand : boundaries) {
            for (VertexId a : attached) {
                if (a == cand && !found) {
                    first = cand;
                    found = true;
                }
            }
        }
        if (b == first) continue;
        insert_boundary_dummy(d, s, b, kind);
    }
}

}  // namespace zxopt
