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
 * Exact symbolic algebra of phase-tracked Pauli strings: multiplication,
 * commutation structure, grades and involution signs. No floating point
 * enters the symbolic layer; global phases live in {1, i, -1, -i}.
 */

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinsim/errors.hpp"

namespace spinsim {

using Complex = std::complex<double>;

/// Single-qubit tensor factor. X, Y, Z are sigma_1, sigma_2, sigma_3.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char letter_to_char(PauliLetter l) {
    constexpr const char *names = "IXYZ";
    return names[static_cast<std::size_t>(l)];
}

inline PauliLetter letter_from_char(char c) {
    switch (c) {
    case 'I':
    case '_':
        return PauliLetter::I;
    case 'X':
        return PauliLetter::X;
    case 'Y':
        return PauliLetter::Y;
    case 'Z':
        return PauliLetter::Z;
    default:
        throw ParameterError(std::string("unknown Pauli letter '") + c + "'");
    }
}

namespace detail {

/// Product of two letters as (power of i, result letter).
/// The cyclic products XY, YZ, ZX pick up +i; the reversed orders pick up -i.
inline std::pair<std::uint8_t, PauliLetter> letter_product(PauliLetter a,
                                                           PauliLetter b) {
    const auto ia = static_cast<std::uint8_t>(a);
    const auto ib = static_cast<std::uint8_t>(b);
    if (ia == 0) {
        return {0, b};
    }
    if (ib == 0) {
        return {0, a};
    }
    if (ia == ib) {
        return {0, PauliLetter::I};
    }
    const auto ic = static_cast<std::uint8_t>(6 - ia - ib);
    // (X,Y) -> +iZ and cyclic; ib == ia%3 + 1 detects the cyclic order.
    const bool cyclic = ib == ia % 3 + 1;
    return {static_cast<std::uint8_t>(cyclic ? 1 : 3),
            static_cast<PauliLetter>(ic)};
}

inline Complex phase_value(std::uint8_t exponent) {
    switch (exponent & 3u) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace detail

/**
 * @brief A global phase in {1, i, -1, -i} times a tensor product of Pauli
 * letters, one per qubit. Tensor factor 0 is the most significant qubit of
 * the basis index. Immutable after construction.
 */
class PauliString {
  public:
    /// Identity string on n qubits.
    explicit PauliString(std::size_t n_qubits)
        : phase_exp_(0), letters_(n_qubits, PauliLetter::I) {}

    PauliString(std::vector<PauliLetter> letters, std::uint8_t phase_exp = 0)
        : phase_exp_(static_cast<std::uint8_t>(phase_exp & 3u)),
          letters_(std::move(letters)) {}

    /// Parses "XYI", "+iXZ", "-Z", "_" (underscore = identity letter).
    static PauliString from_text(std::string_view text) {
        std::uint8_t exp = 0;
        std::size_t pos = 0;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') {
                exp = 2;
            }
            ++pos;
        }
        if (pos < text.size() && text[pos] == 'i') {
            exp = static_cast<std::uint8_t>((exp + 1) & 3u);
            ++pos;
        }
        std::vector<PauliLetter> letters;
        letters.reserve(text.size() - pos);
        for (; pos < text.size(); ++pos) {
            letters.push_back(letter_from_char(text[pos]));
        }
        return PauliString(std::move(letters), exp);
    }

    std::size_t num_qubits() const { return letters_.size(); }

    /// Power of i carried as the global phase, in {0, 1, 2, 3}.
    std::uint8_t phase_exponent() const { return phase_exp_; }

    Complex phase() const { return detail::phase_value(phase_exp_); }

    /// Letter at tensor factor `pos` (0-based, factor 0 most significant).
    PauliLetter letter(std::size_t pos) const { return letters_[pos]; }

    const std::vector<PauliLetter> &letters() const { return letters_; }

    /// Count of non-identity letters.
    std::size_t weight() const {
        std::size_t w = 0;
        for (PauliLetter l : letters_) {
            w += l != PauliLetter::I;
        }
        return w;
    }

    bool is_identity() const { return phase_exp_ == 0 && weight() == 0; }

    /// True iff the operator is Hermitian, i.e. the phase is real. The
    /// letter part is always Hermitian, so only the phase matters.
    bool is_hermitian() const { return (phase_exp_ & 1u) == 0; }

    PauliString with_phase_exponent(std::uint8_t exp) const {
        return PauliString(letters_, exp);
    }

    std::string str() const {
        static constexpr const char *prefix[4] = {"+", "+i", "-", "-i"};
        std::string out = prefix[phase_exp_ & 3u];
        for (PauliLetter l : letters_) {
            out += letter_to_char(l);
        }
        return out;
    }

    friend bool operator==(const PauliString &a, const PauliString &b) {
        return a.phase_exp_ == b.phase_exp_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const PauliString &a, const PauliString &b) {
        return !(a == b);
    }

  private:
    std::uint8_t phase_exp_;
    std::vector<PauliLetter> letters_;
};

/**
 * @brief Product a*b with exact phase tracking.
 * @throws DimensionError if the strings act on different qubit counts.
 */
inline PauliString multiply(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("PauliString product: " +
                             std::to_string(a.num_qubits()) + " vs " +
                             std::to_string(b.num_qubits()) + " qubits");
    }
    std::uint8_t exp =
        static_cast<std::uint8_t>(a.phase_exponent() + b.phase_exponent());
    std::vector<PauliLetter> letters(a.num_qubits());
    for (std::size_t k = 0; k < letters.size(); ++k) {
        auto [e, l] = detail::letter_product(a.letter(k), b.letter(k));
        exp = static_cast<std::uint8_t>(exp + e);
        letters[k] = l;
    }
    return PauliString(std::move(letters), static_cast<std::uint8_t>(exp & 3u));
}

/**
 * @brief True iff ab = -ba. O(n): two strings anticommute iff the number of
 * positions where both letters are non-identity and different is odd.
 */
inline bool anticommutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("anticommutes: qubit count mismatch");
    }
    std::size_t clashes = 0;
    for (std::size_t k = 0; k < a.num_qubits(); ++k) {
        const PauliLetter la = a.letter(k);
        const PauliLetter lb = b.letter(k);
        clashes +=
            la != PauliLetter::I && lb != PauliLetter::I && la != lb;
    }
    return (clashes & 1u) != 0;
}

/// The three canonical involutions of a Clifford algebra.
enum class Involution { Grade, Reversion, Conjugation };

/// Sign picked up by a grade-k element: (-1)^k, (-1)^{k(k-1)/2},
/// (-1)^{k(k+1)/2} for grade involution, reversion, conjugation.
inline int involution_sign(Involution kind, std::uint64_t grade_k) {
    const std::uint64_t k = grade_k;
    std::uint64_t parity = 0;
    switch (kind) {
    case Involution::Grade:
        parity = k;
        break;
    case Involution::Reversion:
        parity = (k * (k - 1) / 2) & 1u;
        break;
    case Involution::Conjugation:
        parity = (k * (k + 1) / 2) & 1u;
        break;
    }
    return (parity & 1u) ? -1 : +1;
}

/**
 * @brief Canonical linear combination of Pauli strings.
 *
 * Stored strings carry phase exponent 0; string phases are folded into the
 * coefficients on construction. Terms are sorted by letters, equal strings
 * merged, and coefficients below 1e-14 in magnitude dropped, so equality of
 * canonical forms is meaningful.
 */
class WeightedPauliSum {
  public:
    static constexpr double kCoefficientEpsilon = 1e-14;

    using Term = std::pair<Complex, PauliString>;

    WeightedPauliSum() = default;

    static WeightedPauliSum from_terms(std::vector<Term> terms) {
        WeightedPauliSum sum;
        for (auto &[coeff, str] : terms) {
            sum.accumulate(coeff, str);
        }
        sum.prune();
        return sum;
    }

    /// n-qubit identity with coefficient c.
    static WeightedPauliSum scaled_identity(std::size_t n_qubits, Complex c) {
        return from_terms({{c, PauliString(n_qubits)}});
    }

    const std::vector<Term> &terms() const { return terms_; }

    bool empty() const { return terms_.empty(); }

    std::size_t num_qubits() const {
        return terms_.empty() ? 0 : terms_.front().second.num_qubits();
    }

    /// True iff every coefficient is real within `tol` (stored strings have
    /// phase +1, so this is exactly Hermiticity of the sum).
    bool is_hermitian(double tol = kCoefficientEpsilon) const {
        for (const auto &[coeff, str] : terms_) {
            (void)str;
            if (std::abs(coeff.imag()) > tol) {
                return false;
            }
        }
        return true;
    }

    WeightedPauliSum &add(Complex coeff, const PauliString &s) {
        accumulate(coeff, s);
        prune();
        return *this;
    }

    friend WeightedPauliSum operator+(const WeightedPauliSum &a,
                                      const WeightedPauliSum &b) {
        WeightedPauliSum out = a;
        for (const auto &[coeff, str] : b.terms_) {
            out.accumulate(coeff, str);
        }
        out.prune();
        return out;
    }

    friend WeightedPauliSum operator*(Complex c, const WeightedPauliSum &a) {
        WeightedPauliSum out;
        for (const auto &[coeff, str] : a.terms_) {
            out.accumulate(c * coeff, str);
        }
        out.prune();
        return out;
    }

    friend bool operator==(const WeightedPauliSum &a,
                           const WeightedPauliSum &b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeightedPauliSum &a,
                           const WeightedPauliSum &b) {
        return !(a == b);
    }

    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[coeff, s] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + std::to_string(coeff.real()) + "," +
                   std::to_string(coeff.imag()) + ")*";
            std::string body = s.str();
            out += body.substr(1); // canonical strings carry a "+" prefix
        }
        return out;
    }

  private:
    void accumulate(Complex coeff, const PauliString &s) {
        if (!terms_.empty() &&
            s.num_qubits() != terms_.front().second.num_qubits()) {
            throw DimensionError("WeightedPauliSum: mixed qubit counts");
        }
        const Complex folded = coeff * s.phase();
        const PauliString canon = s.with_phase_exponent(0);
        auto it = std::find_if(terms_.begin(), terms_.end(),
                               [&](const Term &t) { return t.second == canon; });
        if (it != terms_.end()) {
            it->first += folded;
        } else {
            auto insert_at = std::find_if(
                terms_.begin(), terms_.end(), [&](const Term &t) {
                    return canon.letters() < t.second.letters();
                });
            terms_.insert(insert_at, Term{folded, canon});
        }
    }

    void prune() {
        std::erase_if(terms_, [](const Term &t) {
            return std::abs(t.first) < kCoefficientEpsilon;
        });
    }

    std::vector<Term> terms_;
};

} // namespace spinsim
