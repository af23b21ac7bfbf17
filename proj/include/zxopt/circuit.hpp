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
#include <string>
#include <vector>

#include "zxopt/diagram.hpp"
#include "zxopt/phase.hpp"

namespace zxopt {

enum class GateType : std::uint8_t { H, ZPhase, XPhase, CNOT, CZ, Swap };

/**
 * @brief One gate over indexed qubits. Named phase gates (S, T, Z, X, ...)
 *        are normalized to ZPhase/XPhase with exact phases on construction;
 *        QASM emission maps them back to their named forms.
 */
struct Gate {
    GateType type = GateType::H;
    Phase phase;          // ZPhase / XPhase only
    std::uint32_t q0 = 0; // CNOT: control
    std::uint32_t q1 = 0; // CNOT: target; unused for 1-qubit gates

    static Gate h(std::uint32_t q) { return {GateType::H, Phase(), q, q}; }
    static Gate z_phase(std::uint32_t q, Phase p) { return {GateType::ZPhase, p, q, q}; }
    static Gate x_phase(std::uint32_t q, Phase p) { return {GateType::XPhase, p, q, q}; }
    static Gate s(std::uint32_t q) { return z_phase(q, Phase(1, 2)); }
    static Gate sdg(std::uint32_t q) { return z_phase(q, Phase(-1, 2)); }
    static Gate t(std::uint32_t q) { return z_phase(q, Phase(1, 4)); }
    static Gate tdg(std::uint32_t q) { return z_phase(q, Phase(-1, 4)); }
    static Gate z(std::uint32_t q) { return z_phase(q, Phase(1)); }
    static Gate x(std::uint32_t q) { return x_phase(q, Phase(1)); }
    static Gate cnot(std::uint32_t control, std::uint32_t target) {
        return {GateType::CNOT, Phase(), control, target};
    }
    static Gate cz(std::uint32_t a, std::uint32_t b) { return {GateType::CZ, Phase(), a, b}; }
    static Gate swap(std::uint32_t a, std::uint32_t b) { return {GateType::Swap, Phase(), a, b}; }

    bool is_two_qubit() const {
        return type == GateType::CNOT || type == GateType::CZ || type == GateType::Swap;
    }
    bool is_clifford() const {
        if (type == GateType::ZPhase || type == GateType::XPhase) return phase.is_clifford();
        return true;
    }
    // Non-Clifford phase gate (T and friends).
    bool is_t_like() const {
        return (type == GateType::ZPhase || type == GateType::XPhase) && !phase.is_clifford();
    }
    bool touches(std::uint32_t q) const { return q0 == q || (is_two_qubit() && q1 == q); }

    bool operator==(const Gate&) const = default;
};

struct Circuit {
    std::uint32_t qubit_count = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::uint32_t n) : qubit_count(n) {}

    void push(const Gate& g) {
        if (g.q0 >= qubit_count || (g.is_two_qubit() && g.q1 >= qubit_count)) {
            throw ZXError("gate qubit index out of range");
        }
        if (g.is_two_qubit() && g.q0 == g.q1) throw ZXError("two-qubit gate needs distinct qubits");
        gates.push_back(g);
    }

    bool operator==(const Circuit&) const = default;
};

struct GateStats {
    std::size_t total = 0;
    std::size_t two_qubit = 0;
    std::size_t t_like = 0;
    std::size_t h_count = 0;

    bool operator==(const GateStats&) const = default;
};

GateStats gate_stats(const Circuit& c);

/**
 * @brief Lightweight peephole pass: cancels adjacent inverse pairs, fuses
 *        adjacent same-axis phase gates and delays Hadamards through CZ
 *        gates via CZ(1 x H) = (1 x H) CNOT. The circuit is re-scanned in
 *        both directions until a fixpoint.
 */
Circuit peephole_optimize(const Circuit& c);

/// Translates a circuit into a ZX-diagram with qubit/row hints on every spider.
ZxDiagram circuit_to_diagram(const Circuit& c);

}  // namespace zxopt
