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

#include <catch2/catch_amalgamated.hpp>

#include "spinsim/clifford.hpp"
#include "spinsim/dense.hpp"
#include "support/oracles.hpp"

using namespace spinsim;

namespace {

void check_clifford_relations(const GeneratorSet &gens) {
    const std::size_t count = 2 * gens.n();
    for (std::size_t a = 1; a <= count; ++a) {
        const PauliString square = multiply(gens.gamma(a), gens.gamma(a));
        CHECK(square == PauliString(gens.n()));
        for (std::size_t b = a + 1; b <= count; ++b) {
            CHECK(anticommutes(gens.gamma(a), gens.gamma(b)));
        }
    }
}

} // namespace

TEST_CASE("main-text generators for n=2 are the documented strings") {
    const auto gens = build_generators(2, GeneratorConvention::MainText);
    CHECK(gens.gamma(1) == PauliString::from_text("YI"));
    CHECK(gens.gamma(2) == PauliString::from_text("XY"));
    CHECK(gens.gamma(3) == PauliString::from_text("ZI"));
    CHECK(gens.gamma(4) == PauliString::from_text("XZ"));
}

TEST_CASE("n=1 main-text generators collapse to Y and Z") {
    const auto gens = build_generators(1, GeneratorConvention::MainText);
    CHECK(gens.gamma(1) == PauliString::from_text("Y"));
    CHECK(gens.gamma(2) == PauliString::from_text("Z"));
}

TEST_CASE("both conventions satisfy the Clifford relations up to n=8") {
    for (auto convention :
         {GeneratorConvention::MainText, GeneratorConvention::AppendixJW}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            check_clifford_relations(build_generators(n, convention));
        }
    }
}

TEST_CASE("appendix convention n=3 has all 15 pairs anticommuting") {
    const auto gens = build_generators(3, GeneratorConvention::AppendixJW);
    std::size_t pairs = 0;
    for (std::size_t a = 1; a <= 6; ++a) {
        for (std::size_t b = a + 1; b <= 6; ++b) {
            CHECK(anticommutes(gens.gamma(a), gens.gamma(b)));
            ++pairs;
        }
    }
    CHECK(pairs == 15);
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(build_generators(0, GeneratorConvention::MainText),
                    ParameterError);
    CHECK_THROWS_AS(build_generators(17, GeneratorConvention::MainText),
                    ParameterError);
    CHECK_THROWS_AS(
        build_generators(2, GeneratorConvention::MainText, true),
        UnsupportedError);
}

TEST_CASE("odd generator extends the appendix family") {
    const auto gens = build_generators(3, GeneratorConvention::AppendixJW, true);
    REQUIRE(gens.odd_extra().has_value());
    CHECK(gens.gamma(7) == PauliString::from_text("ZZZ"));
    CHECK(multiply(gens.gamma(7), gens.gamma(7)) == PauliString(3));
    for (std::size_t a = 1; a <= 6; ++a) {
        CHECK(anticommutes(gens.gamma(7), gens.gamma(a)));
    }
}

TEST_CASE("generators are Hermitian as dense matrices") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto gens = build_generators(n, GeneratorConvention::MainText);
        for (std::size_t a = 1; a <= 2 * n; ++a) {
            const Eigen::MatrixXcd m = oracle::dense_of(gens.gamma(a));
            CHECK((m - m.adjoint()).norm() < 1e-14);
        }
    }
}

TEST_CASE("chirality for n=1 is -X") {
    const auto gens = build_generators(1, GeneratorConvention::MainText);
    const auto star = chirality(gens).string;
    CHECK(star == PauliString::from_text("-X"));

    const Eigen::MatrixXcd dense_star =
        Complex{0, 1} * oracle::dense_of(gens.gamma(1)) *
        oracle::dense_of(gens.gamma(2));
    CHECK((dense_star - oracle::dense_of(star)).norm() < 1e-14);
}

TEST_CASE("chirality squares to +identity up to n=6") {
    for (auto convention :
         {GeneratorConvention::MainText, GeneratorConvention::AppendixJW}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto gens = build_generators(n, convention);
            const auto star = chirality(gens).string;
            CHECK(star.is_hermitian());
            CHECK(multiply(star, star) == PauliString(n));
        }
    }
}

TEST_CASE("chirality commutes with even products") {
    const auto gens = build_generators(2, GeneratorConvention::MainText);
    const auto star = chirality(gens).string;
    const auto bivector = multiply(gens.gamma(1), gens.gamma(2));
    CHECK(multiply(star, bivector) == multiply(bivector, star));
}

TEST_CASE("chiral projectors for n=1 are (I -+ X)/2") {
    const auto gens = build_generators(1, GeneratorConvention::MainText);
    const auto [plus, minus] = chiral_projectors(gens);
    CHECK(plus == WeightedPauliSum::from_terms(
                      {{0.5, PauliString(1)},
                       {-0.5, PauliString::from_text("X")}}));
    CHECK(minus == WeightedPauliSum::from_terms(
                       {{0.5, PauliString(1)},
                        {0.5, PauliString::from_text("X")}}));
}

TEST_CASE("chiral projectors are idempotent, orthogonal, complete") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto gens = build_generators(n, GeneratorConvention::MainText);
        const auto [plus, minus] = chiral_projectors(gens);
        const Eigen::MatrixXcd p = oracle::dense_of(plus, n);
        const Eigen::MatrixXcd q = oracle::dense_of(minus, n);
        const Eigen::Index dim = Eigen::Index(1) << n;
        CHECK((p * p - p).norm() < 1e-12);
        CHECK((q * q - q).norm() < 1e-12);
        CHECK((p * q).norm() < 1e-12);
        CHECK((p + q - Eigen::MatrixXcd::Identity(dim, dim)).norm() < 1e-12);
        CHECK(std::abs(p.trace().real() - std::pow(2.0, double(n) - 1)) <
              1e-10);
        CHECK(std::abs(q.trace().real() - std::pow(2.0, double(n) - 1)) <
              1e-10);
    }
}

TEST_CASE("bivector commutator vanishes on disjoint and equal index pairs") {
    const auto gens = build_generators(2, GeneratorConvention::MainText);
    CHECK(bivector_commutator(gens, 1, 2, 3, 4).empty());
    CHECK(bivector_commutator(gens, 1, 2, 1, 2).empty());
}

TEST_CASE("bivector commutator picks the surviving closed-form term") {
    const auto gens = build_generators(2, GeneratorConvention::MainText);
    const auto bracket = bivector_commutator(gens, 1, 2, 2, 3);
    // only delta_{jr} fires: the bracket is gamma_1 gamma_3 / 2
    const auto expected = WeightedPauliSum::from_terms(
        {{0.5, multiply(gens.gamma(1), gens.gamma(3))}});
    CHECK(bracket == expected);
    CHECK(bracket == oracle::closed_form_commutator(gens, 1, 2, 2, 3));
}

TEST_CASE("bivector commutator equals the four-delta form exhaustively") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto gens = build_generators(n, GeneratorConvention::MainText);
        const std::size_t dim = 2 * n;
        for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t j = 1; j <= dim; ++j) {
                if (i == j) {
                    continue;
                }
                for (std::size_t r = 1; r <= dim; ++r) {
                    for (std::size_t s = 1; s <= dim; ++s) {
                        if (r == s) {
                            continue;
                        }
                        CHECK(bivector_commutator(gens, i, j, r, s) ==
                              oracle::closed_form_commutator(gens, i, j, r,
                                                             s));
                    }
                }
            }
        }
    }
}

TEST_CASE("bivector commutator validates indices") {
    const auto gens = build_generators(2, GeneratorConvention::MainText);
    CHECK_THROWS_AS(bivector_commutator(gens, 0, 2, 1, 2), ParameterError);
    CHECK_THROWS_AS(bivector_commutator(gens, 1, 5, 1, 2), ParameterError);
    CHECK_THROWS_AS(bivector_commutator(gens, 1, 1, 1, 2), ParameterError);
}
