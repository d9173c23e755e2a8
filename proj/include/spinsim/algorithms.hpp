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
 * The three algorithms: expectation-sign classification with a Hoeffding
 * shot budget, Grover search from a non-uniform initial state with the
 * oracle realized by a single generator, and search by Hamiltonian
 * evolution with closed-form readout time.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "spinsim/clifford.hpp"
#include "spinsim/errors.hpp"
#include "spinsim/sampling.hpp"
#include "spinsim/spinor.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

/// Tasks closer than this to the decision boundary |cos 2theta| = 0 are
/// rejected; sign classification is not guaranteed there.
inline constexpr double kBoundaryMargin = 1e-6;

/**
 * @brief Number of +-1 measurements sufficient to resolve the sign of an
 * expectation value with margin at least g_min at confidence 1 - delta:
 * ceil(ln(2/delta) / (2 g_min^2)). Monotone decreasing in both arguments.
 */
inline std::uint64_t shot_budget(double g_min, double delta) {
    if (!(g_min > 0.0) || !(g_min <= 1.0)) {
        throw ParameterError("shot_budget: g_min must lie in (0, 1]");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw ParameterError("shot_budget: delta must lie in (0, 1)");
    }
    return static_cast<std::uint64_t>(
        std::ceil(std::log(2.0 / delta) / (2.0 * g_min * g_min)));
}

/**
 * @brief Iteration count k = round(pi/(4 theta) - 1/2), floored at 0.
 * Exact half-integer ties round down: both candidates then reach exactly
 * the same success probability, so the cheaper one wins (in particular
 * theta >= pi/4 gives k = 0).
 */
inline int grover_iterations(double theta) {
    if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
        throw ParameterError("grover_iterations: theta outside (0, pi/2)");
    }
    const double x = std::numbers::pi / (4.0 * theta) - 0.5;
    const double rounded = std::ceil(x - 0.5);
    return rounded < 0.0 ? 0 : static_cast<int>(rounded);
}

/// Reflection 2|about><about| - I applied to psi (the diffusion step).
inline StateVector reflect_about(const StateVector &about,
                                 const StateVector &psi) {
    const Complex overlap = inner_product(about, psi);
    std::vector<Complex> out(psi.dim());
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        out[k] = 2.0 * overlap * about.amplitude(k) - psi.amplitude(k);
    }
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(out));
}

enum class ClassLabel { A, B };

inline const char *class_label_name(ClassLabel l) {
    return l == ClassLabel::A ? "A" : "B";
}

/**
 * One classification instance. The input state is
 * cos(theta)|alpha> + sin(theta) gamma_i gamma_j |alpha> with alpha the
 * +1 eigenstate of gamma_j; the observable is O = sign * gamma_j, whose
 * exact mean is sign * cos(2 theta).
 */
struct ClassificationTask {
    double theta = 0;
    std::size_t i = 2;
    std::size_t j = 1;
    EigenstateSpec eigen_spec;
    int class_operator_sign = +1; // +1 labels class A items, -1 class B
    double delta = 0.05;
    double g_min = 0.5;
};

struct ClassifyResult {
    ClassLabel label;
    double empirical_mean;
    std::uint64_t budget_used;
};

namespace detail {

inline void validate_plus_one_branch(const EigenstateSpec &spec,
                                     const char *who) {
    if (eigenstate_eigenvalue(spec) != +1) {
        throw ParameterError(std::string(who) +
                             ": the eigenstate branch must select the +1 "
                             "eigenvector of gamma_j");
    }
}

} // namespace detail

/**
 * @brief Runs the classification. With shots = 0 the exact expectation is
 * used and budget_used is 0; with shots > 0 the mean is estimated from
 * N = shot_budget(g_min, delta) independent +-1 draws. The label is A
 * exactly when the mean is >= 0.
 *
 * @throws BoundaryError when |cos 2theta| < 1e-6.
 */
inline ClassifyResult classify(const ClassificationTask &task,
                               const GeneratorSet &gens, std::uint64_t shots,
                               const SampleStream &stream) {
    if (!(task.delta > 0.0) || !(task.delta < 1.0)) {
        throw ParameterError("classify: delta must lie in (0, 1)");
    }
    if (!(task.g_min > 0.0) || !(task.g_min <= 1.0)) {
        throw ParameterError("classify: g_min must lie in (0, 1]");
    }
    if (task.class_operator_sign != 1 && task.class_operator_sign != -1) {
        throw ParameterError("classify: class_operator_sign must be +-1");
    }
    if (task.i == task.j) {
        throw ParameterError("classify: i == j");
    }
    if (task.eigen_spec.j != task.j) {
        throw ParameterError("classify: eigen_spec must select gamma_j");
    }
    if (std::abs(std::cos(2.0 * task.theta)) < kBoundaryMargin) {
        throw BoundaryError("classify: |cos 2theta| below margin; the task "
                            "sits on the decision boundary");
    }
    detail::validate_plus_one_branch(task.eigen_spec, "classify");

    const StateVector alpha = eigenstate(task.eigen_spec, gens);
    const StateVector psi =
        apply_rotor_factor(task.i, task.j, task.theta, gens, alpha);
    const PauliString observable = gens.gamma(task.j).with_phase_exponent(
        task.class_operator_sign == -1 ? 2 : 0);

    double mean = 0;
    std::uint64_t budget = 0;
    if (shots == 0) {
        mean = expectation(observable, psi);
    } else {
        budget = shot_budget(task.g_min, task.delta);
        const std::vector<int> draws =
            sample_pm_observable(observable, psi, budget, stream);
        for (int d : draws) {
            mean += d;
        }
        mean /= static_cast<double>(budget);
    }
    const ClassLabel label = mean >= 0 ? ClassLabel::A : ClassLabel::B;
    return {label, mean, budget};
}

/**
 * One search instance: bad subspace |alpha> = |gamma_j>, good subspace
 * |beta> = gamma_i gamma_j |gamma_j>, initial overlap sin(theta) with the
 * good subspace, oracle gamma_j (which flips beta relative to alpha).
 */
struct SearchTask {
    double theta = 0;
    std::size_t i = 2;
    std::size_t j = 1;
    EigenstateSpec eigen_spec;
    std::uint64_t shots = 0;
};

struct SearchResult {
    StateVector final_state;
    double p_solution_exact;
    Histogram histogram;
    int k_used;
};

/**
 * @brief Runs k = grover_iterations(theta) rounds of oracle + reflection
 * about the initial state. The simulated state after k rounds equals
 * cos((2k+1)theta)|alpha> + sin((2k+1)theta)|beta>, so p_solution_exact =
 * |<beta|psi_k>|^2 = sin^2((2k+1)theta).
 */
inline SearchResult grover_search(const SearchTask &task,
                                  const GeneratorSet &gens,
                                  const SampleStream &stream) {
    if (!(task.theta > 0.0) || !(task.theta < std::numbers::pi / 2)) {
        throw ParameterError("grover_search: theta outside (0, pi/2)");
    }
    if (task.i == task.j) {
        throw ParameterError("grover_search: i == j");
    }
    if (task.eigen_spec.j != task.j) {
        throw ParameterError("grover_search: eigen_spec must select gamma_j");
    }
    detail::validate_plus_one_branch(task.eigen_spec, "grover_search");

    const auto [alpha, beta] =
        orthogonal_pair(task.j, task.i, gens, task.eigen_spec);
    const StateVector initial =
        apply_rotor_factor(task.i, task.j, task.theta, gens, alpha);
    const PauliString oracle = gens.gamma(task.j);

    const int k = grover_iterations(task.theta);
    StateVector state = initial;
    for (int round = 0; round < k; ++round) {
        state = apply_pauli(oracle, state);
        state = reflect_about(initial, state);
    }
    const double p_solution = std::norm(inner_product(beta, state));
    Histogram histogram = sample_bitstrings(state, task.shots, stream);
    return {std::move(state), p_solution, std::move(histogram), k};
}

/**
 * Multi-subspace Grover step: reflection about the span of k orthonormal
 * states composed with the product of k oracles.
 */
struct GeneralizedGroverSpec {
    std::vector<StateVector> psi_states;
    std::vector<PauliString> oracles;
};

/**
 * @brief Applies (2 sum_i |psi_i><psi_i| - I) O_1 ... O_k to psi, oracles
 * in ascending index order. Unitary whenever the psi_i are orthonormal.
 *
 * @throws ContractError if the states are not orthonormal within 1e-10 or
 * the oracles do not pairwise commute (the product order would matter).
 */
inline StateVector generalized_grover_apply(const GeneralizedGroverSpec &spec,
                                            const StateVector &psi) {
    const std::size_t k = spec.psi_states.size();
    if (k == 0 || spec.oracles.size() != k) {
        throw ParameterError("generalized_grover_apply: need equally many "
                             "states and oracles, at least one each");
    }
    for (std::size_t a = 0; a < k; ++a) {
        if (spec.psi_states[a].dim() != psi.dim()) {
            throw DimensionError("generalized_grover_apply: state dimension "
                                 "mismatch");
        }
        for (std::size_t b = a; b < k; ++b) {
            const Complex overlap =
                inner_product(spec.psi_states[a], spec.psi_states[b]);
            const double expected = a == b ? 1.0 : 0.0;
            if (std::abs(overlap - expected) > kNormTolerance) {
                throw ContractError(
                    "generalized_grover_apply: psi states are not "
                    "orthonormal");
            }
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (anticommutes(spec.oracles[a], spec.oracles[b])) {
                throw ContractError("generalized_grover_apply: oracles " +
                                    std::to_string(a + 1) + " and " +
                                    std::to_string(b + 1) +
                                    " do not commute");
            }
        }
    }
    std::vector<Complex> amps = psi.amplitudes();
    for (const PauliString &oracle : spec.oracles) {
        amps = apply_pauli_raw(oracle, amps);
    }
    std::vector<Complex> out(amps.size());
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        out[idx] = -amps[idx];
    }
    for (const StateVector &basis_state : spec.psi_states) {
        Complex overlap{0, 0};
        for (std::size_t idx = 0; idx < amps.size(); ++idx) {
            overlap += std::conj(basis_state.amplitude(idx)) * amps[idx];
        }
        for (std::size_t idx = 0; idx < out.size(); ++idx) {
            out[idx] += 2.0 * overlap * basis_state.amplitude(idx);
        }
    }
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(out));
}

/// State reached by preparing exp(theta gamma_i gamma_j)|gamma_j> and
/// evolving for time t, i.e. total rotor angle theta (1 + t).
inline StateVector hamiltonian_evolved_state(double theta, std::size_t i,
                                             std::size_t j,
                                             const GeneratorSet &gens,
                                             const EigenstateSpec &spec,
                                             double t) {
    if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
        throw ParameterError("hamiltonian_search: theta outside (0, pi/2)");
    }
    if (i == j) {
        throw ParameterError("hamiltonian_search: i == j");
    }
    if (spec.j != j) {
        throw ParameterError("hamiltonian_search: eigen_spec must select "
                             "gamma_j");
    }
    const StateVector alpha = eigenstate(spec, gens);
    const StateVector prepared = apply_rotor_factor(i, j, theta, gens, alpha);
    return apply_rotor_factor(i, j, theta * t, gens, prepared);
}

struct HamiltonianSearchResult {
    double t_star;
    StateVector final_state;
    double overlap;
    int rotor_sign; // sign of the bivector exponent actually applied
};

/**
 * @brief Evolves under the rotor family generated by gamma_i gamma_j and
 * reads out at t* = pi/(2 theta) - 1, where the state reaches the target
 * gamma_i |gamma_j> with overlap 1. The positive rotor sign achieves the
 * contract and is reported in the result.
 */
inline HamiltonianSearchResult
hamiltonian_search(double theta, std::size_t i, std::size_t j,
                   const GeneratorSet &gens, const EigenstateSpec &spec) {
    const double t_star = std::numbers::pi / (2.0 * theta) - 1.0;
    StateVector final_state =
        hamiltonian_evolved_state(theta, i, j, gens, spec, t_star);
    const StateVector alpha = eigenstate(spec, gens);
    const StateVector target = apply_pauli(gens.gamma(i), alpha);
    const double overlap = std::norm(inner_product(target, final_state));
    return {t_star, std::move(final_state), overlap, +1};
}

} // namespace spinsim
