// Copyright 2026 The ccq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "ccq/qmath.hpp"
#include "oracles.hpp"

using namespace ccq;
using Catch::Approx;

TEST_CASE("Test kron places the first factor on qubit 1", "[qmath]")
{
    // sx on qubit 1 maps |00> (index 0) to |10> (index 1).
    const Mat4 x1 = kron(pauli::X(), pauli::I());
    const StateVector s = x1 * StateVector::basis(0, 0);
    CHECK(std::abs(s[1] - cplx{1.0}) < 1e-15);
    CHECK(max_abs_diff(embed(pauli::X(), Qubit::One), x1) == 0.0);
    CHECK(max_abs_diff(embed(pauli::X(), Qubit::Two), kron(pauli::I(), pauli::X())) == 0.0);

    const Mat4 zz = sigma_zz();
    CHECK(zz(0, 0) == cplx{1.0});
    CHECK(zz(1, 1) == cplx{-1.0});
    CHECK(zz(2, 2) == cplx{-1.0});
    CHECK(zz(3, 3) == cplx{1.0});
}

TEST_CASE("Test kron mixed-product property", "[qmath]")
{
    oracle::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2 a = rng.matrix<2>(), b = rng.matrix<2>();
        const Mat2 c = rng.matrix<2>(), d = rng.matrix<2>();
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    }
}

TEST_CASE("Test eigh reconstructs Hermitian matrices", "[qmath]")
{
    oracle::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat4 h = rng.hermitian<4>();
        const auto eig = eigh(h);
        std::array<cplx, 4> d{};
        for (std::size_t i = 0; i < 4; ++i) {
            d[i] = eig.values[i];
        }
        const Mat4 back = eig.vectors * Mat4::diagonal(d) * adjoint(eig.vectors);
        CHECK(max_abs_diff(back, h) < 1e-12);
        CHECK(unitarity_defect(eig.vectors) < 1e-12);
    }
}

TEST_CASE("Test eigh rejects non-Hermitian input", "[qmath]")
{
    Mat2 m = pauli::X();
    m(0, 1) = 2.0;
    REQUIRE_THROWS_AS(eigh(m), std::invalid_argument);
}

TEST_CASE("Test expm of -i(-sx (x) I + 0.25 szsz) against a frozen reference", "[qmath]")
{
    const Mat4 h = cplx{-1.0} * kron(pauli::X(), pauli::I()) + cplx{0.25} * sigma_zz();
    const Mat4 u = expm_hermitian(h, cplx{0.0, -1.0});

    Mat4 ref;
    const cplx a{0.5141530774429538, -0.20802242709351995};
    const cplx b{0.0, 0.83208970837407992};
    ref(0, 0) = a;
    ref(0, 1) = b;
    ref(1, 0) = b;
    ref(1, 1) = std::conj(a);
    ref(2, 2) = std::conj(a);
    ref(2, 3) = b;
    ref(3, 2) = b;
    ref(3, 3) = a;
    CHECK(max_abs_diff(u, ref) < 1e-12);
}

TEST_CASE("Test expm_hermitian against a Taylor series oracle", "[qmath]")
{
    oracle::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat4 h = rng.hermitian<4>();
        const double t = rng.uniform(0.0, 3.0);
        const Mat4 u = expm_hermitian(h, cplx{0.0, -t});
        const Mat4 ref = oracle::expm_taylor(cplx{0.0, -t} * h);
        CHECK(max_abs_diff(u, ref) < 1e-11);
        CHECK(unitarity_defect(u) < 1e-12);
    }
}

TEST_CASE("Test expm semigroup property", "[qmath]")
{
    oracle::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat4 h = rng.hermitian<4>();
        const double s = rng.uniform(0.0, 2.0), t = rng.uniform(0.0, 2.0);
        const Mat4 lhs = expm_hermitian(h, cplx{0.0, -s}) * expm_hermitian(h, cplx{0.0, -t});
        CHECK(max_abs_diff(lhs, expm_hermitian(h, cplx{0.0, -(s + t)})) < 1e-12);
    }
}

TEST_CASE("Test expm of zero and of a degenerate spectrum", "[qmath]")
{
    CHECK(max_abs_diff(expm_hermitian(Mat4{}, cplx{0.0, -1.0}), Mat4::identity()) == 0.0);
    const Mat4 u = expm_hermitian(sigma_zz(), cplx{0.0, -0.3});
    CHECK(max_abs_diff(u, exp_involution(sigma_zz(), -0.3)) < 1e-15);
}

TEST_CASE("Test exp_involution equals the matrix exponential", "[qmath]")
{
    for (double phi : {0.0, 0.4, std::numbers::pi / 2, -1.3}) {
        const Mat2 lhs = exp_involution(pauli::Y(), phi);
        const Mat2 rhs = oracle::expm_taylor(cplx{0.0, phi} * pauli::Y());
        CHECK(max_abs_diff(lhs, rhs) < 1e-14);
    }
}

TEST_CASE("Test fidelity up to global phase", "[qmath]")
{
    oracle::Rng rng(9);
    const Mat2 u = rng.unitary2();
    const Mat2 v = std::exp(cplx{0.0, 0.7}) * u;
    CHECK(fidelity_up_to_global_phase(u, v) == Approx(1.0).margin(1e-14));
    CHECK(fidelity_up_to_global_phase(pauli::X(), pauli::Z()) == Approx(0.0).margin(1e-15));
}

TEST_CASE("Test state vectors", "[qmath]")
{
    REQUIRE_THROWS_AS(StateVector::basis(2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector{}.normalized(), std::invalid_argument);
    const StateVector s = StateVector::basis(1, 1);
    CHECK(s[3] == cplx{1.0});
    CHECK(s.is_normalized());

    oracle::Rng rng(13);
    const StateVector a = rng.state();
    const StateVector b = a;
    StateVector rotated = a;
    for (auto &x : rotated.amp) {
        x *= std::exp(cplx{0.0, 2.1});
    }
    CHECK(distance_up_to_global_phase(rotated, b) < 1e-14);
    CHECK_THROWS_AS(require_normalized(StateVector{}, "t"), std::invalid_argument);
}
