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

#include <string>
#include <vector>

#include "zxopt/diagram.hpp"

namespace zxopt {

// Primitive spider rewrites. All mutate the diagram in place and preserve
// its linear map up to a nonzero scalar; diagrams are values, so callers
// wanting the functional flavour copy first.

/**
 * @brief Fuses two same-kind spiders joined by at least one Simple edge.
 *        The smaller id survives and receives the phase sum and the merged
 *        neighbour multiset (parallel edges and self-loops may appear and
 *        are left for normalize_multiedges). Returns the surviving id.
 */
VertexId fuse(ZxDiagram& d, VertexId u, VertexId v);

/// Toggles a spider's colour and the kind of every incident edge.
void color_change(ZxDiagram& d, VertexId v);

/**
 * @brief Deletes a phase-0 spider of degree 2, joining its two neighbour
 *        edges into one whose kind is their XOR.
 */
void remove_identity(ZxDiagram& d, VertexId v);

/**
 * @brief Removes parallel Hadamard-edge pairs between same-kind spiders,
 *        Simple self-loops, and Hadamard self-loops (adding pi per loop).
 *        A Simple+Hadamard parallel pair between same-kind spiders is
 *        resolved by fusing across the Simple edge first.
 */
void normalize_multiedges(ZxDiagram& d);

/// Deletes the double Simple edge between a Z- and an X-spider.
void apply_antipode(ZxDiagram& d, VertexId u, VertexId v);

/**
 * @brief Copies a degree-1 X(pi) spider through the Z-spider it touches:
 *        the Z phase is negated and an X(pi) leg is attached to every other
 *        edge of the Z-spider.
 */
void apply_pi_copy(ZxDiagram& d, VertexId x_vertex, VertexId z_vertex);

struct GraphLikeReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks the four graph-like conditions; reports every violation found.
GraphLikeReport is_graph_like(const ZxDiagram& d);

/**
 * @brief Rewrites any diagram into graph-like form: colour-change X-spiders,
 *        fuse across Simple edges, normalize multi-edges, drop interior
 *        phase-0 identities, then insert dummy spiders so every boundary is
 *        attached to its own spider.
 */
void to_graph_like(ZxDiagram& d);

}  // namespace zxopt
