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

#include <complex>
#include <cstddef>
#include <vector>

#include "zxopt/circuit.hpp"
#include "zxopt/diagram.hpp"

namespace zxopt {

using Complex = std::complex<double>;

/**
 * @brief Dense complex matrix of a diagram or circuit. Rows index output
 *        basis states (outputs[0] is the most significant bit), columns
 *        index input basis states likewise.
 */
struct DenseMatrix {
    std::size_t rows = 1;
    std::size_t cols = 1;
    std::vector<Complex> a;  // row-major

    DenseMatrix() : a(1, Complex(1.0, 0.0)) {}
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Complex(0.0, 0.0)) {}

    Complex& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static DenseMatrix identity(std::size_t n);
};

struct SemanticsOptions {
    // Maximum total boundary wires (inputs + outputs) a diagram may have;
    // for circuits, qubit_count counts twice (inputs and outputs).
    std::size_t wire_cap = 12;
    // Tensor contraction order: 0 = row-hint order (cheap on circuit-shaped
    // diagrams), 1 = ascending vertex id. Both must agree; tests check this.
    int contraction_order = 0;
};

/// Contracts the spider tensors of a diagram into its linear map.
DenseMatrix diagram_to_matrix(const ZxDiagram& d, const SemanticsOptions& opt = {});

/// Ordered product of gate unitaries.
DenseMatrix circuit_to_matrix(const Circuit& c, const SemanticsOptions& opt = {});

/**
 * @brief True iff a = z*b for some complex z != 0, within tol, after both
 *        matrices are normalized by their largest-magnitude entry. z is
 *        estimated from the entries at b's largest-magnitude position.
 */
bool equal_up_to_global_phase(const DenseMatrix& a, const DenseMatrix& b, double tol = 1e-9);

/// Largest absolute entry difference after phase alignment (for diagnostics).
double global_phase_distance(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace zxopt
