// Copyright 2026 The spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense materialization of Pauli strings and sums as Eigen matrices.
 * Capacity-limited; the simulation path never goes through here.
 */

#pragma once

#include <Eigen/Dense>

#include "spinsim/errors.hpp"
#include "spinsim/pauli.hpp"

namespace spinsim {

/// Largest qubit count for which dense 2^n x 2^n matrices are materialized.
inline constexpr std::size_t kDenseQubitCutoff = 12;

inline Eigen::Matrix2cd letter_matrix(PauliLetter l) {
    const Complex i{0.0, 1.0};
    Eigen::Matrix2cd m;
    switch (l) {
    case PauliLetter::I:
        m << 1, 0, 0, 1;
        break;
    case PauliLetter::X:
        m << 0, 1, 1, 0;
        break;
    case PauliLetter::Y:
        m << 0, -i, i, 0;
        break;
    case PauliLetter::Z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

/**
 * @brief Kronecker product of the letter matrices times the global phase.
 * Factor 0 of the string is the most significant qubit of the row/column
 * index, i.e. dense_matrix("XY") = X (x) Y in the usual Kronecker order.
 * @throws CapacityError above the dense cutoff.
 */
inline Eigen::MatrixXcd dense_matrix(const PauliString &s) {
    if (s.num_qubits() > kDenseQubitCutoff) {
        throw CapacityError("dense_matrix: " + std::to_string(s.num_qubits()) +
                            " qubits exceeds dense cutoff " +
                            std::to_string(kDenseQubitCutoff));
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(1, 1, s.phase());
    for (std::size_t k = 0; k < s.num_qubits(); ++k) {
        const Eigen::Matrix2cd m = letter_matrix(s.letter(k));
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = out(r, c) * m;
            }
        }
        out = std::move(next);
    }
    return out;
}

inline Eigen::MatrixXcd dense_matrix(const WeightedPauliSum &sum,
                                     std::size_t n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[coeff, str] : sum.terms()) {
        if (str.num_qubits() != n_qubits) {
            throw DimensionError("dense_matrix: sum term qubit mismatch");
        }
        out += coeff * dense_matrix(str);
    }
    return out;
}

} // namespace spinsim
