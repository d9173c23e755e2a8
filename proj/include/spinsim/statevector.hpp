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
 * Exact complex statevector simulation. Pauli strings act in a single
 * O(2^n) pass through bit flips and phase lookups; no operator is ever
 * materialized as a matrix. States are immutable values; operations return
 * new states and re-check the unit-norm invariant.
 */

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "spinsim/clifford.hpp"
#include "spinsim/errors.hpp"
#include "spinsim/pauli.hpp"

namespace spinsim {

/// Unit-norm tolerance enforced on construction and after every operation.
inline constexpr double kNormTolerance = 1e-10;

namespace detail {

/// Per-string action, precomputed once: out[j] = base * (-1)^popcount(j &
/// sign_mask) * in[j ^ flip_mask]. X and Y flip the target bit; Y and Z
/// read the output bit for their sign; each Y contributes a factor -i
/// (its +i branch is absorbed by the sign mask).
struct PauliAction {
    std::uint64_t flip_mask = 0;
    std::uint64_t sign_mask = 0;
    Complex base{1.0, 0.0};

    explicit PauliAction(const PauliString &s) {
        const std::size_t n = s.num_qubits();
        std::size_t y_count = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t bit = std::uint64_t(1) << (n - 1 - k);
            switch (s.letter(k)) {
            case PauliLetter::I:
                break;
            case PauliLetter::X:
                flip_mask |= bit;
                break;
            case PauliLetter::Y:
                flip_mask |= bit;
                sign_mask |= bit;
                ++y_count;
                break;
            case PauliLetter::Z:
                sign_mask |= bit;
                break;
            }
        }
        const auto exp = static_cast<std::uint8_t>(
            (s.phase_exponent() + 3 * (y_count & 3u)) & 3u);
        base = phase_value(exp);
    }

    Complex coefficient(std::uint64_t out_index) const {
        const bool flip = std::popcount(out_index & sign_mask) & 1u;
        return flip ? -base : base;
    }
};

} // namespace detail

/// Applies a Pauli string to a raw amplitude vector. Linear; no norm
/// checks, so callers may pass unnormalized data.
inline std::vector<Complex> apply_pauli_raw(const PauliString &s,
                                            const std::vector<Complex> &in) {
    const std::size_t dim = std::size_t(1) << s.num_qubits();
    if (in.size() != dim) {
        throw DimensionError("apply_pauli: state has " +
                             std::to_string(in.size()) +
                             " amplitudes, operator expects " +
                             std::to_string(dim));
    }
    const detail::PauliAction action(s);
    std::vector<Complex> out(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        out[j] = action.coefficient(j) * in[j ^ action.flip_mask];
    }
    return out;
}

/**
 * @brief 2^n complex amplitudes with unit L2 norm. Basis index bit k
 * (counting from the most significant of the n used bits) corresponds to
 * tensor factor k, matching dense_matrix.
 */
class StateVector {
  public:
    static StateVector computational_basis(std::size_t n_qubits,
                                           std::uint64_t index) {
        std::vector<Complex> amps(std::size_t(1) << n_qubits, Complex{0, 0});
        if (index >= amps.size()) {
            throw ParameterError("basis index out of range");
        }
        amps[index] = Complex{1, 0};
        return StateVector(n_qubits, std::move(amps));
    }

    /// Adopts amplitudes that must already be unit-norm within 1e-10.
    static StateVector from_amplitudes(std::size_t n_qubits,
                                       std::vector<Complex> amps) {
        return StateVector(n_qubits, std::move(amps));
    }

    /// Normalizes arbitrary nonzero amplitudes.
    static StateVector normalized(std::size_t n_qubits,
                                  std::vector<Complex> amps) {
        double sum = 0;
        for (const Complex &a : amps) {
            sum += std::norm(a);
        }
        if (sum <= 0) {
            throw ParameterError("cannot normalize the zero vector");
        }
        const double scale = 1.0 / std::sqrt(sum);
        for (Complex &a : amps) {
            a *= scale;
        }
        return StateVector(n_qubits, std::move(amps));
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_[index]; }

    double norm() const {
        double sum = 0;
        for (const Complex &a : amps_) {
            sum += std::norm(a);
        }
        return std::sqrt(sum);
    }

  private:
    StateVector(std::size_t n_qubits, std::vector<Complex> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {
        if (amps_.size() != std::size_t(1) << n_qubits_) {
            throw DimensionError("StateVector: expected " +
                                 std::to_string(std::size_t(1) << n_qubits_) +
                                 " amplitudes, got " +
                                 std::to_string(amps_.size()));
        }
        if (std::abs(norm() - 1.0) > kNormTolerance) {
            throw ContractError("StateVector: norm " + std::to_string(norm()) +
                                " violates the unit-norm invariant");
        }
    }

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

inline Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner_product: dimension mismatch");
    }
    Complex acc{0, 0};
    for (std::size_t j = 0; j < a.dim(); ++j) {
        acc += std::conj(a.amplitude(j)) * b.amplitude(j);
    }
    return acc;
}

inline StateVector apply_pauli(const PauliString &s, const StateVector &psi) {
    if (s.num_qubits() != psi.n_qubits()) {
        throw DimensionError("apply_pauli: operator acts on " +
                             std::to_string(s.num_qubits()) +
                             " qubits, state has " +
                             std::to_string(psi.n_qubits()));
    }
    return StateVector::from_amplitudes(
        psi.n_qubits(), apply_pauli_raw(s, psi.amplitudes()));
}

/**
 * @brief Applies the rotor exp(theta gamma_i gamma_j) = cos(theta) I +
 * sin(theta) gamma_i gamma_j in closed form (two O(2^n) passes).
 *
 * @throws ParameterError for i == j, where the closed form does not hold
 * ((gamma_i gamma_j)^2 = -I fails).
 */
inline StateVector apply_rotor_factor(std::size_t i, std::size_t j,
                                      double theta, const GeneratorSet &gens,
                                      const StateVector &psi) {
    if (i == j) {
        throw ParameterError("apply_rotor_factor: i == j");
    }
    const PauliString bivector = multiply(gens.gamma(i), gens.gamma(j));
    const std::vector<Complex> rotated =
        apply_pauli_raw(bivector, psi.amplitudes());
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<Complex> out(psi.dim());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = c * psi.amplitude(k) + s * rotated[k];
    }
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(out));
}

/**
 * @brief Real expectation value of a Hermitian Pauli string, in one pass
 * without materializing the transformed state.
 *
 * @throws ContractError if the string is anti-Hermitian (phase +-i) or the
 * accumulated imaginary residue exceeds 1e-10.
 */
inline double expectation(const PauliString &s, const StateVector &psi) {
    if (!s.is_hermitian()) {
        throw ContractError("expectation: observable " + s.str() +
                            " is not Hermitian");
    }
    if (s.num_qubits() != psi.n_qubits()) {
        throw DimensionError("expectation: qubit count mismatch");
    }
    const detail::PauliAction action(s);
    Complex acc{0, 0};
    for (std::uint64_t j = 0; j < psi.dim(); ++j) {
        acc += std::conj(psi.amplitude(j)) * action.coefficient(j) *
               psi.amplitude(j ^ action.flip_mask);
    }
    if (std::abs(acc.imag()) > kNormTolerance) {
        throw ContractError("expectation: imaginary residue " +
                            std::to_string(acc.imag()));
    }
    return acc.real();
}

/// Expectation of a Hermitian weighted sum (all coefficients real in
/// canonical form).
inline double expectation(const WeightedPauliSum &obs, const StateVector &psi) {
    if (!obs.is_hermitian()) {
        throw ContractError("expectation: weighted sum is not Hermitian");
    }
    double acc = 0;
    for (const auto &[coeff, str] : obs.terms()) {
        acc += coeff.real() * expectation(str, psi);
    }
    return acc;
}

} // namespace spinsim
