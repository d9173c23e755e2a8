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
 * Reproducible Born-rule shot sampling. Every draw sequence is a pure
 * function of (master_seed, stream_index): stream seeds are derived by a
 * SplitMix64 hash, so independently seeded streams can run in any order,
 * or in parallel, without changing results.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spinsim/errors.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Identifies one reproducible draw sequence.
struct SampleStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    /// Derived stream for sub-experiment k (per-observable, per-trial, ...).
    SampleStream child(std::uint64_t k) const {
        return SampleStream{master_seed,
                            detail::splitmix64(stream_index) ^
                                detail::splitmix64(~k)};
    }
};

/**
 * @brief Deterministic generator for one stream. Raw engine output is
 * converted to doubles in-house; std::mt19937_64 output is fully specified
 * by the standard, so sequences are identical across platforms.
 */
class ShotRng {
  public:
    explicit ShotRng(const SampleStream &stream)
        : engine_(detail::splitmix64(stream.master_seed) ^
                  detail::splitmix64(detail::splitmix64(stream.stream_index))) {
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

/// Basis index rendered MSB-first, factor 0 leftmost.
inline std::string bitstring_of(std::uint64_t index, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        if (index & (std::uint64_t(1) << (width - 1 - k))) {
            out[k] = '1';
        }
    }
    return out;
}

using Histogram = std::map<std::string, std::uint64_t>;

/**
 * @brief Samples computational-basis outcomes by inverse CDF. Counts sum
 * to `shots`; only observed bitstrings appear as keys.
 */
inline Histogram sample_bitstrings(const StateVector &psi, std::uint64_t shots,
                                   const SampleStream &stream) {
    Histogram hist;
    if (shots == 0) {
        return hist;
    }
    std::vector<double> cdf(psi.dim());
    double acc = 0;
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        acc += std::norm(psi.amplitude(j));
        cdf[j] = acc;
    }
    const double total = cdf.back();
    ShotRng rng(stream);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.next_uniform() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t index =
            std::min<std::size_t>(psi.dim() - 1, it - cdf.begin());
        ++hist[bitstring_of(index, psi.n_qubits())];
    }
    return hist;
}

/**
 * @brief Independent +-1 draws of a Hermitian +-1-valued Pauli observable,
 * with P(+1) = (1 + <obs>)/2, so the empirical mean converges to <obs>.
 *
 * @throws ContractError for phase +-i strings (anti-Hermitian, so the
 * measured values would not be +-1).
 */
inline std::vector<int> sample_pm_observable(const PauliString &obs,
                                             const StateVector &psi,
                                             std::uint64_t shots,
                                             const SampleStream &stream) {
    if (!obs.is_hermitian()) {
        throw ContractError("sample_pm_observable: " + obs.str() +
                            " has imaginary phase and is not an observable");
    }
    const double mean = expectation(obs, psi);
    const double p_plus = std::clamp((1.0 + mean) / 2.0, 0.0, 1.0);
    ShotRng rng(stream);
    std::vector<int> draws(shots);
    for (std::uint64_t k = 0; k < shots; ++k) {
        draws[k] = rng.next_uniform() < p_plus ? +1 : -1;
    }
    return draws;
}

} // namespace spinsim
