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

#include "zxopt/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace zxopt {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// One parallel edge occurrence. Self-loops have u == v.
struct EdgeInst {
    VertexId u;
    VertexId v;
    EdgeKind kind;
};

struct Slot {
    bool is_boundary = false;
    VertexId boundary = 0;      // valid when is_boundary
    std::size_t leg = SIZE_MAX; // unique leg token: edge_idx * 2 + endpoint
};

// Flat tensor over a dynamic set of binary slots; slot i is bit i of the
// amplitude index. Deliberately simple: this is the oracle everything else
// is checked against.
class TensorState {
public:
    std::size_t slot_count() const { return _slots.size(); }
    Slot& slot(std::size_t i) { return _slots[i]; }

    void guard(std::size_t extra) const {
        if (_slots.size() + extra > 24) {
            throw ZXError("diagram_to_matrix: contraction front too wide");
        }
    }

    // Tensor-product d new slots carrying `t` (rank-d, bit i of t's index is
    // new slot i). New slots are appended above the existing ones.
    void append(const std::vector<Complex>& t, std::size_t d, const Slot& proto) {
        guard(d);
        std::size_t old_n = _amp.size();
        std::vector<Complex> next(old_n << d);
        for (std::size_t hi = 0; hi < (std::size_t{1} << d); ++hi) {
            const Complex& w = t[hi];
            if (w == Complex(0.0, 0.0)) continue;
            for (std::size_t lo = 0; lo < old_n; ++lo) next[hi * old_n + lo] = w * _amp[lo];
        }
        _amp.swap(next);
        for (std::size_t i = 0; i < d; ++i) _slots.push_back(proto);
    }

    void apply_h(std::size_t s) {
        std::size_t bit = std::size_t{1} << s;
        for (std::size_t i = 0; i < _amp.size(); ++i) {
            if (i & bit) continue;
            Complex a0 = _amp[i];
            Complex a1 = _amp[i | bit];
            _amp[i] = (a0 + a1) * kInvSqrt2;
            _amp[i | bit] = (a0 - a1) * kInvSqrt2;
        }
    }

    // Sums out slots s1 and s2 with a delta (wire join); both removed.
    void contract(std::size_t s1, std::size_t s2) {
        if (s1 == s2) throw ZXError("contract: identical slots");
        if (s1 > s2) std::swap(s1, s2);
        std::size_t b1 = std::size_t{1} << s1;
        std::size_t b2 = std::size_t{1} << s2;
        std::vector<Complex> next(_amp.size() >> 2, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < _amp.size(); ++i) {
            bool v1 = (i & b1) != 0;
            bool v2 = (i & b2) != 0;
            if (v1 != v2) continue;
            next[squeeze(i, s1, s2)] += _amp[i];
        }
        _amp.swap(next);
        _slots.erase(_slots.begin() + static_cast<std::ptrdiff_t>(s2));
        _slots.erase(_slots.begin() + static_cast<std::ptrdiff_t>(s1));
    }

    const std::vector<Complex>& amplitudes() const { return _amp; }
    const std::vector<Slot>& slots() const { return _slots; }

private:
    static std::size_t squeeze(std::size_t i, std::size_t s1, std::size_t s2) {
        std::size_t low = i & ((std::size_t{1} << s1) - 1);
        std::size_t mid = (i >> (s1 + 1)) & ((std::size_t{1} << (s2 - s1 - 1)) - 1);
        std::size_t high = i >> (s2 + 1);
        return low | (mid << s1) | (high << (s2 - 1));
    }

    std::vector<Complex> _amp{Complex(1.0, 0.0)};
    std::vector<Slot> _slots;
};

std::vector<Complex> spider_tensor(VertexKind kind, Phase phase, std::size_t d) {
    double alpha = phase.to_radians();
    Complex ea(std::cos(alpha), std::sin(alpha));
    std::vector<Complex> t(std::size_t{1} << d, Complex(0.0, 0.0));
    if (kind == VertexKind::Z) {
        t.front() = Complex(1.0, 0.0);
        t.back() += ea;  // += so that d == 0 yields 1 + e^{ia}
    } else {
        double scale = std::pow(kInvSqrt2, static_cast<double>(d));
        for (std::size_t i = 0; i < t.size(); ++i) {
            double sign = (std::popcount(i) % 2 == 0) ? 1.0 : -1.0;
            t[i] = scale * (Complex(1.0, 0.0) + sign * ea);
        }
    }
    return t;
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
}

DenseMatrix diagram_to_matrix(const ZxDiagram& d, const SemanticsOptions& opt) {
    std::size_t n_in = d.inputs().size();
    std::size_t n_out = d.outputs().size();
    if (n_in + n_out > opt.wire_cap) {
        throw ZXError("diagram_to_matrix: wire cap exceeded");
    }

    // Collect parallel edges as separate instances; a leg is one endpoint of
    // one instance (a self-loop contributes two legs to its vertex).
    std::vector<EdgeInst> edges;
    std::map<VertexId, std::vector<std::size_t>> legs_at;  // spider -> leg tokens
    for (const auto& [u, data] : d.vertices()) {
        for (const auto& [v, mult] : d.adjacency(u)) {
            if (v < u) continue;
            for (int i = 0; i < mult.simple; ++i) edges.push_back({u, v, EdgeKind::Simple});
            for (int i = 0; i < mult.hadamard; ++i) edges.push_back({u, v, EdgeKind::Hadamard});
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (d.is_spider(edges[e].u)) legs_at[edges[e].u].push_back(2 * e);
        if (d.is_spider(edges[e].v)) legs_at[edges[e].v].push_back(2 * e + 1);
    }

    TensorState state;

    auto find_slot = [&](std::size_t leg) -> std::size_t {
        for (std::size_t s = 0; s < state.slot_count(); ++s) {
            if (!state.slot(s).is_boundary && state.slot(s).leg == leg) return s;
        }
        return SIZE_MAX;
    };

    // A boundary-boundary edge is a bare (possibly Hadamard) wire.
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!d.is_boundary(edges[e].u) || !d.is_boundary(edges[e].v)) continue;
        std::vector<Complex> wire(4);
        wire[0b00] = Complex(1.0, 0.0);
        wire[0b11] = Complex(1.0, 0.0);
        Slot proto;
        proto.is_boundary = true;
        std::size_t base = state.slot_count();
        state.append(wire, 2, proto);
        state.slot(base).boundary = edges[e].u;
        state.slot(base + 1).boundary = edges[e].v;
        if (edges[e].kind == EdgeKind::Hadamard) state.apply_h(base);
    }

    // Deterministic spider order: row-hint order is cheap on circuit-shaped
    // diagrams; ascending id is the independent cross-check order.
    std::vector<VertexId> order;
    for (const auto& [id, data] : d.vertices()) {
        if (data.kind != VertexKind::Boundary) order.push_back(id);
    }
    if (opt.contraction_order == 0) {
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            auto key = [&](VertexId v) {
                std::int32_t r = d.vertex(v).row_min;
                return std::pair<std::int64_t, VertexId>(r < 0 ? INT32_MAX : r, v);
            };
            return key(a) < key(b);
        });
    }

    for (VertexId v : order) {
        const auto& legs = legs_at[v];
        std::size_t deg = legs.size();
        std::vector<Complex> t = spider_tensor(d.kind(v), d.phase(v), deg);
        std::size_t base = state.slot_count();
        Slot proto;
        state.append(t, deg, proto);
        for (std::size_t i = 0; i < deg; ++i) state.slot(base + i).leg = legs[i];

        // Claim each new leg: join it with its partner leg if that slot is
        // already open, otherwise leave it pending / mark it as a wire end.
        // Positions shift as we contract, so legs are located by token.
        for (std::size_t leg : legs) {
            std::size_t pos = find_slot(leg);
            if (pos == SIZE_MAX) continue;  // contracted together with its partner

            std::size_t e = leg / 2;
            VertexId other = (leg % 2 == 0) ? edges[e].v : edges[e].u;
            std::size_t partner_leg = leg ^ 1;
            std::size_t partner = find_slot(partner_leg);

            if (partner != SIZE_MAX) {
                if (edges[e].kind == EdgeKind::Hadamard) state.apply_h(pos);
                state.contract(std::min(partner, pos), std::max(partner, pos));
            } else if (!d.is_spider(other)) {
                // boundary wire end
                if (edges[e].kind == EdgeKind::Hadamard) state.apply_h(pos);
                state.slot(pos).is_boundary = true;
                state.slot(pos).boundary = other;
            }
            // else: partner spider not processed yet; slot stays open
        }
    }

    for (std::size_t s = 0; s < state.slot_count(); ++s) {
        if (!state.slot(s).is_boundary) throw ZXError("diagram_to_matrix: unresolved edge");
    }

    // Assemble: rows over outputs, cols over inputs, list head = MSB.
    std::map<VertexId, std::size_t> slot_by_boundary;
    for (std::size_t s = 0; s < state.slot_count(); ++s) {
        if (!state.slot(s).is_boundary) throw ZXError("diagram_to_matrix: stray open slot");
        slot_by_boundary[state.slot(s).boundary] = s;
    }
    if (slot_by_boundary.size() != n_in + n_out) {
        throw ZXError("diagram_to_matrix: boundary mismatch");
    }

    DenseMatrix m(std::size_t{1} << n_out, std::size_t{1} << n_in);
    const auto& amp = state.amplitudes();
    for (std::size_t idx = 0; idx < amp.size(); ++idx) {
        if (amp[idx] == Complex(0.0, 0.0)) continue;
        std::size_t r = 0;
        std::size_t c = 0;
        for (std::size_t k = 0; k < n_out; ++k) {
            std::size_t s = slot_by_boundary.at(d.outputs()[k]);
            if (idx & (std::size_t{1} << s)) r |= std::size_t{1} << (n_out - 1 - k);
        }
        for (std::size_t k = 0; k < n_in; ++k) {
            std::size_t s = slot_by_boundary.at(d.inputs()[k]);
            if (idx & (std::size_t{1} << s)) c |= std::size_t{1} << (n_in - 1 - k);
        }
        m.at(r, c) += amp[idx];
    }
    return m;
}

namespace {

// Left-multiplies m by the 1-qubit unitary u on qubit q (qubit 0 = MSB).
void apply_1q(DenseMatrix& m, std::size_t n, std::uint32_t q, const Complex u[2][2]) {
    std::size_t bit = std::size_t{1} << (n - 1 - q);
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (r & bit) continue;
        for (std::size_t c = 0; c < m.cols; ++c) {
            Complex a0 = m.at(r, c);
            Complex a1 = m.at(r | bit, c);
            m.at(r, c) = u[0][0] * a0 + u[0][1] * a1;
            m.at(r | bit, c) = u[1][0] * a0 + u[1][1] * a1;
        }
    }
}

void swap_rows(DenseMatrix& m, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

}  // namespace

DenseMatrix circuit_to_matrix(const Circuit& circ, const SemanticsOptions& opt) {
    std::size_t n = circ.qubit_count;
    if (2 * n > opt.wire_cap) throw ZXError("circuit_to_matrix: wire cap exceeded");
    DenseMatrix m = DenseMatrix::identity(std::size_t{1} << n);
    for (const Gate& g : circ.gates) {
        switch (g.type) {
            case GateType::H: {
                const Complex u[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
                apply_1q(m, n, g.q0, u);
                break;
            }
            case GateType::ZPhase: {
                double a = g.phase.to_radians();
                const Complex u[2][2] = {{1.0, 0.0}, {0.0, Complex(std::cos(a), std::sin(a))}};
                apply_1q(m, n, g.q0, u);
                break;
            }
            case GateType::XPhase: {
                double a = g.phase.to_radians();
                Complex ea(std::cos(a), std::sin(a));
                Complex d0 = (Complex(1.0, 0.0) + ea) * 0.5;
                Complex d1 = (Complex(1.0, 0.0) - ea) * 0.5;
                const Complex u[2][2] = {{d0, d1}, {d1, d0}};
                apply_1q(m, n, g.q0, u);
                break;
            }
            case GateType::CNOT: {
                std::size_t cb = std::size_t{1} << (n - 1 - g.q0);
                std::size_t tb = std::size_t{1} << (n - 1 - g.q1);
                for (std::size_t r = 0; r < m.rows; ++r) {
                    if ((r & cb) && !(r & tb)) swap_rows(m, r, r | tb);
                }
                break;
            }
            case GateType::CZ: {
                std::size_t b0 = std::size_t{1} << (n - 1 - g.q0);
                std::size_t b1 = std::size_t{1} << (n - 1 - g.q1);
                for (std::size_t r = 0; r < m.rows; ++r) {
                    if ((r & b0) && (r & b1)) {
                        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
                    }
                }
                break;
            }
            case GateType::Swap: {
                std::size_t b0 = std::size_t{1} << (n - 1 - g.q0);
                std::size_t b1 = std::size_t{1} << (n - 1 - g.q1);
                for (std::size_t r = 0; r < m.rows; ++r) {
                    if ((r & b0) && !(r & b1)) swap_rows(m, r, (r & ~b0) | b1);
                }
                break;
            }
        }
    }
    return m;
}

namespace {

double max_abs(const DenseMatrix& m) {
    double best = 0.0;
    for (const Complex& x : m.a) best = std::max(best, std::abs(x));
    return best;
}

}  // namespace

double global_phase_distance(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw ZXError("global_phase_distance: dimension mismatch");
    }
    double na = max_abs(a);
    double nb = max_abs(b);
    if (na == 0.0 || nb == 0.0) return std::max(na, nb);  // zero matrices compare equal
    std::size_t ref = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < b.a.size(); ++i) {
        if (std::abs(b.a[i]) > best) {
            best = std::abs(b.a[i]);
            ref = i;
        }
    }
    Complex z = (a.a[ref] / na) / (b.a[ref] / nb);
    double dist = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        dist = std::max(dist, std::abs(a.a[i] / na - z * (b.a[i] / nb)));
    }
    return dist;
}

bool equal_up_to_global_phase(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    return global_phase_distance(a, b) <= tol;
}

}  // namespace zxopt
