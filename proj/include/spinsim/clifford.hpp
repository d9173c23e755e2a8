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
 * Anticommuting generator sets of Cl(2n) on n qubits, the chirality
 * operator, chiral projectors, and the bivector commutator structure.
 *
 * Generator indices are 1-based throughout: gamma(1) .. gamma(2n), and
 * gamma(2n+1) for the optional odd generator.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinsim/errors.hpp"
#include "spinsim/pauli.hpp"

namespace spinsim {

/// Largest n for which symbolic generator sets are built.
inline constexpr std::size_t kSymbolicQubitCutoff = 16;

/**
 * Two equivalent generator constructions on n qubits:
 *
 *   MainText:   gamma_j     = X^(j-1) (x) Y (x) I^(n-j)
 *               gamma_{n+j} = X^(j-1) (x) Z (x) I^(n-j)
 *   AppendixJW: gamma_j     = Z^(j-1) (x) X (x) I^(n-j)
 *               gamma_{n+j} = Z^(j-1) (x) Y (x) I^(n-j)
 *
 * for 1 <= j <= n. MainText is the default; the explicit eigenstate
 * formulas in spinor.hpp are specific to it.
 */
enum class GeneratorConvention { MainText, AppendixJW };

inline std::string convention_name(GeneratorConvention c) {
    return c == GeneratorConvention::MainText ? "main-text" : "appendix-jw";
}

inline GeneratorConvention convention_from_name(const std::string &name) {
    if (name == "main-text") {
        return GeneratorConvention::MainText;
    }
    if (name == "appendix-jw") {
        return GeneratorConvention::AppendixJW;
    }
    throw ParameterError("unknown convention '" + name +
                         "' (expected main-text or appendix-jw)");
}

/**
 * @brief The 2n anticommuting generators of Cl(2n), plus optionally the odd
 * generator Z^(x)n extending to Cl(2n+1) (AppendixJW only; Z^(x)n fails to
 * anticommute with the MainText family).
 */
class GeneratorSet {
  public:
    GeneratorSet(std::size_t n, GeneratorConvention convention,
                 std::vector<PauliString> gammas,
                 std::optional<PauliString> odd_extra)
        : n_(n), convention_(convention), gammas_(std::move(gammas)),
          odd_extra_(std::move(odd_extra)) {}

    /// Number of qubits; the algebra dimension is 2n.
    std::size_t n() const { return n_; }

    /// Number of generators addressable through gamma(), 2n or 2n+1.
    std::size_t count() const { return gammas_.size() + (odd_extra_ ? 1 : 0); }

    GeneratorConvention convention() const { return convention_; }

    /// Generator by 1-based index a in [1, count()].
    const PauliString &gamma(std::size_t a) const {
        if (a < 1 || a > count()) {
            throw ParameterError("generator index " + std::to_string(a) +
                                 " outside [1, " + std::to_string(count()) +
                                 "]");
        }
        if (a <= gammas_.size()) {
            return gammas_[a - 1];
        }
        return *odd_extra_;
    }

    const std::vector<PauliString> &gammas() const { return gammas_; }
    const std::optional<PauliString> &odd_extra() const { return odd_extra_; }

  private:
    std::size_t n_;
    GeneratorConvention convention_;
    std::vector<PauliString> gammas_;
    std::optional<PauliString> odd_extra_;
};

/**
 * @brief Builds the 2n generators for the chosen convention.
 *
 * @param include_odd also build gamma(2n+1) = Z^(x)n. Only valid for
 *        AppendixJW, where it anticommutes with the whole family.
 * @throws ParameterError for n = 0 or n above the symbolic cutoff.
 * @throws UnsupportedError for include_odd with MainText.
 */
inline GeneratorSet build_generators(std::size_t n,
                                     GeneratorConvention convention,
                                     bool include_odd = false) {
    if (n == 0 || n > kSymbolicQubitCutoff) {
        throw ParameterError("build_generators: n = " + std::to_string(n) +
                             " outside [1, " +
                             std::to_string(kSymbolicQubitCutoff) + "]");
    }
    const PauliLetter prefix = convention == GeneratorConvention::MainText
                                   ? PauliLetter::X
                                   : PauliLetter::Z;
    const PauliLetter first = convention == GeneratorConvention::MainText
                                  ? PauliLetter::Y
                                  : PauliLetter::X;
    const PauliLetter second = convention == GeneratorConvention::MainText
                                   ? PauliLetter::Z
                                   : PauliLetter::Y;
    std::vector<PauliString> gammas(2 * n, PauliString(n));
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<PauliLetter> letters(n, PauliLetter::I);
        for (std::size_t k = 0; k + 1 < j; ++k) {
            letters[k] = prefix;
        }
        letters[j - 1] = first;
        gammas[j - 1] = PauliString(letters);
        letters[j - 1] = second;
        gammas[n + j - 1] = PauliString(std::move(letters));
    }
    std::optional<PauliString> odd;
    if (include_odd) {
        if (convention == GeneratorConvention::MainText) {
            throw UnsupportedError(
                "build_generators: the odd generator Z^(x)n does not "
                "anticommute with the main-text family; use appendix-jw");
        }
        odd = PauliString(std::vector<PauliLetter>(n, PauliLetter::Z));
    }
    return GeneratorSet(n, convention, std::move(gammas), std::move(odd));
}

/// Hermitian involution i^n gamma_1 ... gamma_2n splitting the spinor space
/// into +1 / -1 eigenspaces of equal dimension.
struct ChiralityOperator {
    PauliString string;
};

inline ChiralityOperator chirality(const GeneratorSet &gens) {
    PauliString product(gens.n());
    for (std::size_t a = 1; a <= 2 * gens.n(); ++a) {
        product = multiply(product, gens.gamma(a));
    }
    const auto exp = static_cast<std::uint8_t>(
        (product.phase_exponent() + gens.n()) & 3u);
    return ChiralityOperator{product.with_phase_exponent(exp)};
}

/**
 * @brief The projectors P_pm = (I +- chirality)/2 onto the chiral
 * eigenspaces. Idempotent, mutually orthogonal, and summing to the identity.
 */
inline std::pair<WeightedPauliSum, WeightedPauliSum>
chiral_projectors(const GeneratorSet &gens) {
    const PauliString star = chirality(gens).string;
    const PauliString id(gens.n());
    auto plus = WeightedPauliSum::from_terms({{0.5, id}, {0.5, star}});
    auto minus = WeightedPauliSum::from_terms({{0.5, id}, {-0.5, star}});
    return {std::move(plus), std::move(minus)};
}

/**
 * @brief Commutator [gamma_i gamma_j / 2, gamma_r gamma_s / 2] of two
 * bivectors, computed through the string product. These brackets close on
 * bivectors and realize so(2n).
 *
 * @throws ParameterError for indices outside [1, 2n] or i == j / r == s.
 */
inline WeightedPauliSum bivector_commutator(const GeneratorSet &gens,
                                            std::size_t i, std::size_t j,
                                            std::size_t r, std::size_t s) {
    const std::size_t dim = 2 * gens.n();
    for (std::size_t idx : {i, j, r, s}) {
        if (idx < 1 || idx > dim) {
            throw ParameterError("bivector_commutator: index " +
                                 std::to_string(idx) + " outside [1, " +
                                 std::to_string(dim) + "]");
        }
    }
    if (i == j || r == s) {
        throw ParameterError("bivector_commutator: bivector indices must "
                             "be distinct");
    }
    const PauliString a = multiply(gens.gamma(i), gens.gamma(j));
    const PauliString b = multiply(gens.gamma(r), gens.gamma(s));
    const PauliString ab = multiply(a, b);
    const PauliString ba = multiply(b, a);
    return WeightedPauliSum::from_terms({{0.25, ab}, {-0.25, ba}});
}

} // namespace spinsim
