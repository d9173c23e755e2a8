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
 * Spinor eigenstates of the generators, tensor-product rotors across
 * factor slots, class signatures from expectation-value signs, and chiral
 * sector membership.
 *
 * Multi-factor states live in one flat amplitude array of length (2^n)^m;
 * factor slot k (0-based) occupies qubits [k*n, (k+1)*n) in tensor order.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spinsim/clifford.hpp"
#include "spinsim/errors.hpp"
#include "spinsim/sampling.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

/// Sign convention used for class signatures: sgn(0) = +1.
inline int sign_of(double x) { return x >= 0 ? +1 : -1; }

/**
 * @brief Branch choices selecting one explicit eigenvector of gamma_j
 * (main-text convention only).
 *
 * For j in [1, n] (the Y-slot family) the vector is
 *   (1, s_1) (x) ... (x) (1, s_{j-1}) (x) (1, m i) (x) (1, 0)^(n-j)
 * normalized, and for j in [n+1, 2n] (the Z-slot family, block j' = j-n)
 * the middle factor is (1, 0) for m = +1 or (0, 1) for m = -1. The
 * eigenvalue is (prod of signs) * middle_sign.
 */
struct EigenstateSpec {
    std::size_t j = 1;
    std::vector<int> signs;
    int middle_sign = +1;
};

namespace detail {

struct EigenstateShape {
    std::size_t block;  // j' in [1, n]
    bool y_family;      // true for j <= n
};

inline EigenstateShape validate_eigenstate_spec(const EigenstateSpec &spec,
                                                const GeneratorSet &gens) {
    if (gens.convention() != GeneratorConvention::MainText) {
        throw UnsupportedError(
            "eigenstate: explicit eigenvector formulas are specific to the "
            "main-text convention");
    }
    const std::size_t n = gens.n();
    if (spec.j < 1 || spec.j > 2 * n) {
        throw ParameterError("eigenstate: j = " + std::to_string(spec.j) +
                             " outside [1, " + std::to_string(2 * n) + "]");
    }
    const bool y_family = spec.j <= n;
    const std::size_t block = y_family ? spec.j : spec.j - n;
    if (spec.signs.size() != block - 1) {
        throw ParameterError("eigenstate: expected " +
                             std::to_string(block - 1) + " branch signs, got " +
                             std::to_string(spec.signs.size()));
    }
    for (int s : spec.signs) {
        if (s != 1 && s != -1) {
            throw ParameterError("eigenstate: branch signs must be +-1");
        }
    }
    if (spec.middle_sign != 1 && spec.middle_sign != -1) {
        throw ParameterError("eigenstate: middle_sign must be +-1");
    }
    return {block, y_family};
}

} // namespace detail

/// Eigenvalue of gamma_j on the eigenstate selected by `spec`.
inline int eigenstate_eigenvalue(const EigenstateSpec &spec) {
    int lambda = spec.middle_sign;
    for (int s : spec.signs) {
        lambda *= s;
    }
    return lambda;
}

/**
 * @brief Builds the normalized eigenvector of gamma_j selected by the
 * branch signs. The nonzero amplitudes are fourth roots of unity times a
 * common 1/sqrt(support) scale, so small cases reproduce reference values
 * bit-exactly.
 */
inline StateVector eigenstate(const EigenstateSpec &spec,
                              const GeneratorSet &gens) {
    const auto shape = detail::validate_eigenstate_spec(spec, gens);
    const std::size_t n = gens.n();
    const std::size_t prefix_len = shape.block - 1;
    const std::size_t support = std::size_t(1)
                                << (prefix_len + (shape.y_family ? 1 : 0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(support));

    std::vector<Complex> amps(std::size_t(1) << n, Complex{0, 0});
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << prefix_len);
         ++mask) {
        double prefix_unit = 1.0;
        std::uint64_t index = 0;
        for (std::size_t k = 0; k < prefix_len; ++k) {
            const bool bit = (mask >> k) & 1u;
            if (bit) {
                prefix_unit *= spec.signs[k];
                index |= std::uint64_t(1) << (n - 1 - k);
            }
        }
        const std::uint64_t middle_bit = std::uint64_t(1)
                                         << (n - shape.block);
        if (shape.y_family) {
            amps[index] = scale * prefix_unit;
            amps[index | middle_bit] =
                Complex{0, scale * prefix_unit * spec.middle_sign};
        } else {
            if (spec.middle_sign == -1) {
                index |= middle_bit;
            }
            amps[index] = scale * prefix_unit;
        }
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

/**
 * @brief The pair (alpha, beta) = (|gamma_j>, gamma_i gamma_j |gamma_j>):
 * beta is an eigenvector of gamma_j with the opposite eigenvalue, hence
 * orthogonal to alpha.
 *
 * @throws ParameterError for i == j or when spec.j != j.
 */
inline std::pair<StateVector, StateVector>
orthogonal_pair(std::size_t j, std::size_t i, const GeneratorSet &gens,
                const EigenstateSpec &spec) {
    if (i == j) {
        throw ParameterError("orthogonal_pair: i == j");
    }
    if (spec.j != j) {
        throw ParameterError("orthogonal_pair: spec selects gamma_" +
                             std::to_string(spec.j) + ", expected gamma_" +
                             std::to_string(j));
    }
    const StateVector alpha = eigenstate(spec, gens);
    const PauliString bivector = multiply(gens.gamma(i), gens.gamma(j));
    StateVector beta = apply_pauli(bivector, alpha);
    return {alpha, std::move(beta)};
}

/// One rotor factor exp(theta_k gamma_i gamma_j) acting on its slot.
struct TensorRotorFactor {
    std::size_t i = 1;
    std::size_t j = 2;
    double theta = 0;
};

struct TensorRotorSpec {
    std::vector<TensorRotorFactor> factors;
};

/// Shape of a flat multi-factor state: m factors of n qubits each.
struct TensorLayout {
    std::size_t qubits_per_factor = 1;
    std::size_t factors = 1;

    std::size_t total_qubits() const { return qubits_per_factor * factors; }
};

/// Places an n-qubit string into factor slot `slot` of an m-slot system,
/// identity elsewhere.
inline PauliString embed_in_slot(const PauliString &s, std::size_t slot,
                                 std::size_t m) {
    if (slot >= m) {
        throw ParameterError("embed_in_slot: slot " + std::to_string(slot) +
                             " outside [0, " + std::to_string(m) + ")");
    }
    const std::size_t n = s.num_qubits();
    std::vector<PauliLetter> letters(n * m, PauliLetter::I);
    for (std::size_t k = 0; k < n; ++k) {
        letters[slot * n + k] = s.letter(k);
    }
    return PauliString(std::move(letters), s.phase_exponent());
}

/**
 * @brief Applies one rotor factor per slot. On a product state this yields
 * the product of the per-factor rotated states; a single factor reduces to
 * apply_rotor_factor.
 */
inline StateVector apply_tensor_rotor(const TensorRotorSpec &spec,
                                      const GeneratorSet &gens,
                                      const StateVector &psi) {
    const std::size_t m = spec.factors.size();
    if (m == 0) {
        throw ParameterError("apply_tensor_rotor: no factors");
    }
    if (psi.n_qubits() != gens.n() * m) {
        throw DimensionError("apply_tensor_rotor: state has " +
                             std::to_string(psi.n_qubits()) +
                             " qubits, expected " +
                             std::to_string(gens.n() * m));
    }
    std::vector<Complex> amps = psi.amplitudes();
    for (std::size_t slot = 0; slot < m; ++slot) {
        const auto &factor = spec.factors[slot];
        if (factor.i == factor.j) {
            throw ParameterError("apply_tensor_rotor: i == j in slot " +
                                 std::to_string(slot));
        }
        const PauliString bivector = embed_in_slot(
            multiply(gens.gamma(factor.i), gens.gamma(factor.j)), slot, m);
        const std::vector<Complex> rotated = apply_pauli_raw(bivector, amps);
        const double c = std::cos(factor.theta);
        const double s = std::sin(factor.theta);
        for (std::size_t k = 0; k < amps.size(); ++k) {
            amps[k] = c * amps[k] + s * rotated[k];
        }
    }
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(amps));
}

/// m-tuple of expectation-value signs identifying a class.
struct ClassSignature {
    std::vector<int> signs;

    friend bool operator==(const ClassSignature &a,
                           const ClassSignature &b) = default;
};

/**
 * @brief Signs of <M_k> for single-slot observables M_k. With shots = 0
 * the exact expectation is used; otherwise each observable is estimated
 * from `shots` +-1 draws on its own derived stream.
 *
 * @throws ContractError if an observable is not a Hermitian string
 * supported on exactly one factor slot.
 */
inline ClassSignature class_signature(const StateVector &psi,
                                      const TensorLayout &layout,
                                      const std::vector<PauliString> &observables,
                                      std::uint64_t shots,
                                      const SampleStream &stream) {
    if (psi.n_qubits() != layout.total_qubits()) {
        throw DimensionError("class_signature: layout does not match state");
    }
    ClassSignature signature;
    signature.signs.reserve(observables.size());
    for (std::size_t k = 0; k < observables.size(); ++k) {
        const PauliString &obs = observables[k];
        if (obs.num_qubits() != layout.total_qubits()) {
            throw ContractError("class_signature: observable width mismatch");
        }
        if (!obs.is_hermitian()) {
            throw ContractError("class_signature: observable " + obs.str() +
                                " is not Hermitian");
        }
        std::size_t slots_touched = 0;
        for (std::size_t slot = 0; slot < layout.factors; ++slot) {
            bool touched = false;
            for (std::size_t q = 0; q < layout.qubits_per_factor; ++q) {
                touched |= obs.letter(slot * layout.qubits_per_factor + q) !=
                           PauliLetter::I;
            }
            slots_touched += touched;
        }
        if (slots_touched != 1) {
            throw ContractError(
                "class_signature: observable must act on exactly one slot");
        }
        double mean = 0;
        if (shots == 0) {
            mean = expectation(obs, psi);
        } else {
            const std::vector<int> draws =
                sample_pm_observable(obs, psi, shots, stream.child(k));
            for (int d : draws) {
                mean += d;
            }
            mean /= static_cast<double>(shots);
        }
        signature.signs.push_back(sign_of(mean));
    }
    return signature;
}

enum class ChiralSector { Plus, Minus, Mixed };

inline char chiral_sector_symbol(ChiralSector s) {
    switch (s) {
    case ChiralSector::Plus:
        return '+';
    case ChiralSector::Minus:
        return '-';
    default:
        return 'm';
    }
}

/**
 * @brief Per-slot chirality membership: Plus/Minus when the slot-embedded
 * chirality operator fixes psi up to sign within 1e-10, Mixed otherwise.
 * Membership is invariant under rotors, which commute with chirality.
 */
inline std::vector<ChiralSector>
chiral_membership(const StateVector &psi, const TensorLayout &layout,
                  const ChiralityOperator &chir) {
    if (psi.n_qubits() != layout.total_qubits()) {
        throw DimensionError("chiral_membership: layout does not match state");
    }
    if (chir.string.num_qubits() != layout.qubits_per_factor) {
        throw DimensionError(
            "chiral_membership: chirality operator width mismatch");
    }
    std::vector<ChiralSector> sectors;
    sectors.reserve(layout.factors);
    for (std::size_t slot = 0; slot < layout.factors; ++slot) {
        const PauliString embedded =
            embed_in_slot(chir.string, slot, layout.factors);
        const std::vector<Complex> mapped =
            apply_pauli_raw(embedded, psi.amplitudes());
        double residual_plus = 0;
        double residual_minus = 0;
        for (std::size_t k = 0; k < mapped.size(); ++k) {
            residual_plus += std::norm(mapped[k] - psi.amplitude(k));
            residual_minus += std::norm(mapped[k] + psi.amplitude(k));
        }
        residual_plus = std::sqrt(residual_plus);
        residual_minus = std::sqrt(residual_minus);
        if (residual_plus < kNormTolerance) {
            sectors.push_back(ChiralSector::Plus);
        } else if (residual_minus < kNormTolerance) {
            sectors.push_back(ChiralSector::Minus);
        } else {
            sectors.push_back(ChiralSector::Mixed);
        }
    }
    return sectors;
}

} // namespace spinsim
