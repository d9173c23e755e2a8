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

// Test-only reference machinery, kept independent of the library paths it
// checks: dense operators are built here from hard-coded 2x2 matrices and
// an explicit Kronecker loop, matrix exponentials go through an
// eigendecomposition, and the four-delta commutator reference is assembled
// term by term.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spinsim/clifford.hpp"
#include "spinsim/pauli.hpp"
#include "spinsim/sampling.hpp"
#include "spinsim/statevector.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline Eigen::Matrix2cd letter2x2(spinsim::PauliLetter l) {
    const Complex i{0, 1};
    Eigen::Matrix2cd m;
    switch (l) {
    case spinsim::PauliLetter::I:
        m << 1, 0, 0, 1;
        return m;
    case spinsim::PauliLetter::X:
        m << 0, 1, 1, 0;
        return m;
    case spinsim::PauliLetter::Y:
        m << 0, -i, i, 0;
        return m;
    case spinsim::PauliLetter::Z:
        m << 1, 0, 0, -1;
        return m;
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a,
                             const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) =
                a(r, c) * b;
        }
    }
    return out;
}

/// Dense matrix of a phase-tracked string, factor 0 most significant.
inline Eigen::MatrixXcd dense_of(const spinsim::PauliString &s) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(1, 1, s.phase());
    for (std::size_t k = 0; k < s.num_qubits(); ++k) {
        out = kron(out, letter2x2(s.letter(k)));
    }
    return out;
}

inline Eigen::MatrixXcd dense_of(const spinsim::WeightedPauliSum &sum,
                                 std::size_t n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[coeff, str] : sum.terms()) {
        out += coeff * dense_of(str);
    }
    return out;
}

/// exp(theta * M) for anti-Hermitian M, via the eigendecomposition of the
/// Hermitian matrix iM: exp(theta M) = V exp(-i theta Lambda) V^dagger.
inline Eigen::MatrixXcd expm_antihermitian(double theta,
                                           const Eigen::MatrixXcd &m) {
    const Complex i{0, 1};
    const Eigen::MatrixXcd hermitian = i * m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
    const Eigen::VectorXd evals = solver.eigenvalues();
    const Eigen::MatrixXcd v = solver.eigenvectors();
    Eigen::VectorXcd phases(evals.size());
    for (Eigen::Index k = 0; k < evals.size(); ++k) {
        phases(k) = std::exp(-i * theta * evals(k));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

inline Eigen::VectorXcd vec_of(const spinsim::StateVector &psi) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dim()));
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        v(static_cast<Eigen::Index>(k)) = psi.amplitude(k);
    }
    return v;
}

inline Eigen::VectorXcd vec_of(const std::vector<Complex> &amps) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t k = 0; k < amps.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = amps[k];
    }
    return v;
}

/// Four-delta reference for [gamma_i gamma_j / 2, gamma_r gamma_s / 2]:
///   d_jr G_is - d_ir G_js + d_js G_ri - d_is G_rj
/// with G_ab = gamma_a gamma_b / 2 (G_aa = I/2), valid for every index
/// quadruple including coincident indices.
inline spinsim::WeightedPauliSum
closed_form_commutator(const spinsim::GeneratorSet &gens, std::size_t i,
                       std::size_t j, std::size_t r, std::size_t s) {
    using spinsim::multiply;
    std::vector<spinsim::WeightedPauliSum::Term> terms;
    if (j == r) {
        terms.push_back({+0.5, multiply(gens.gamma(i), gens.gamma(s))});
    }
    if (i == r) {
        terms.push_back({-0.5, multiply(gens.gamma(j), gens.gamma(s))});
    }
    if (j == s) {
        terms.push_back({+0.5, multiply(gens.gamma(r), gens.gamma(i))});
    }
    if (i == s) {
        terms.push_back({-0.5, multiply(gens.gamma(r), gens.gamma(j))});
    }
    return spinsim::WeightedPauliSum::from_terms(std::move(terms));
}

/// Deterministic pseudo-random Pauli string (letters only, phase +1).
inline spinsim::PauliString random_string(std::size_t n,
                                          std::mt19937_64 &rng) {
    std::vector<spinsim::PauliLetter> letters(n);
    for (auto &l : letters) {
        l = static_cast<spinsim::PauliLetter>(rng() % 4);
    }
    return spinsim::PauliString(std::move(letters));
}

inline spinsim::PauliString random_string_with_phase(std::size_t n,
                                                     std::mt19937_64 &rng) {
    return random_string(n, rng).with_phase_exponent(
        static_cast<std::uint8_t>(rng() % 4));
}

inline spinsim::StateVector random_state(std::size_t n,
                                         std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::size_t(1) << n);
    for (auto &a : amps) {
        a = Complex{gauss(rng), gauss(rng)};
    }
    return spinsim::StateVector::normalized(n, std::move(amps));
}

/// Gram-Schmidt over seeded Gaussian vectors; returns k orthonormal states.
inline std::vector<spinsim::StateVector>
random_orthonormal_states(std::size_t n, std::size_t k,
                          std::mt19937_64 &rng) {
    std::vector<Eigen::VectorXcd> basis;
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index dim = Eigen::Index(1) << n;
    while (basis.size() < k) {
        Eigen::VectorXcd v(dim);
        for (Eigen::Index idx = 0; idx < dim; ++idx) {
            v(idx) = Complex{gauss(rng), gauss(rng)};
        }
        for (const auto &b : basis) {
            v -= b.dot(v) * b;
        }
        if (v.norm() < 1e-6) {
            continue;
        }
        v.normalize();
        basis.push_back(v);
    }
    std::vector<spinsim::StateVector> out;
    out.reserve(k);
    for (const auto &b : basis) {
        std::vector<Complex> amps(b.data(), b.data() + b.size());
        out.push_back(spinsim::StateVector::from_amplitudes(n, std::move(amps)));
    }
    return out;
}

/// Total-variation distance between the exact distribution and an
/// empirical histogram with `shots` samples.
inline double tv_distance(const std::map<std::string, double> &theoretical,
                          const spinsim::Histogram &sampled,
                          std::uint64_t shots) {
    double tv = 0;
    for (const auto &[bits, p] : theoretical) {
        const auto it = sampled.find(bits);
        const double freq =
            it == sampled.end()
                ? 0.0
                : static_cast<double>(it->second) / static_cast<double>(shots);
        tv += std::abs(p - freq);
    }
    for (const auto &[bits, count] : sampled) {
        if (theoretical.find(bits) == theoretical.end()) {
            tv += static_cast<double>(count) / static_cast<double>(shots);
        }
    }
    return tv / 2.0;
}

} // namespace oracle
