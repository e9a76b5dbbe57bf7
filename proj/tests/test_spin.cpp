// Copyright 2026 The qwalk Authors
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

#include <cmath>
#include <random>

#include "doctest.h"

#include "qwalk/spin.hpp"

using namespace qwalk;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

SpinVector random_spin(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    SpinVector v(dim);
    for (auto& c : v) {
        c = {coef(rng), coef(rng)};
    }
    return v;
}

}  // namespace

TEST_SUITE("spin") {

TEST_CASE("complex ops: i*i = -1, conjugate, modulus") {
    const ComplexScalar i{0.0, 1.0};
    CHECK(i * i == ComplexScalar{-1.0, 0.0});
    CHECK(ComplexScalar{1.0, 0.0} + ComplexScalar{0.0, 0.0} == ComplexScalar{1.0, 0.0});
    CHECK(conjugate({3.0, 4.0}) == ComplexScalar{3.0, -4.0});
    CHECK(modulus_sq({3.0, 4.0}) == 25.0);
}

TEST_CASE("merge: disjoint supports add componentwise") {
    const SpinVector merged = spin_merge({{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}});
    CHECK(merged == SpinVector{{1.0, 0.0}, {1.0, 0.0}});
}

TEST_CASE("merge: exact destructive cancellation") {
    const SpinVector merged =
        spin_merge({{kInvSqrt2, 0.0}, {0.0, 0.0}}, {{-kInvSqrt2, 0.0}, {0.0, 0.0}});
    CHECK(merged == SpinVector{{0.0, 0.0}, {0.0, 0.0}});
}

TEST_CASE("merge: complex components, second step of the Y walk") {
    // Left-moving child [0, i/2] meets right-moving child [-1/2, 0] at the
    // start vertex.
    const SpinVector merged =
        spin_merge({{0.0, 0.0}, {0.0, 0.5}}, {{-0.5, 0.0}, {0.0, 0.0}});
    CHECK(merged == SpinVector{{-0.5, 0.0}, {0.0, 0.5}});
}

TEST_CASE("merge: dimension mismatch is a configuration error") {
    CHECK_THROWS_AS(spin_merge({{1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}), ConfigError);
}

TEST_CASE("merge is commutative and associative within 1e-15 per component") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_spin(rng, 4);
        const auto b = random_spin(rng, 4);
        const auto c = random_spin(rng, 4);
        const auto ab = spin_merge(a, b);
        const auto ba = spin_merge(b, a);
        const auto ab_c = spin_merge(ab, c);
        const auto a_bc = spin_merge(a, spin_merge(b, c));
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(ab[i] - ba[i]) == 0.0);
            CHECK(std::abs(ab_c[i] - a_bc[i]) <= 1e-15);
        }
    }
}

TEST_CASE("project: left mask zeroes the right component") {
    const SpinVector s{{0.3, 0.1}, {0.7, -0.2}};
    CHECK(spin_project(s, {1, 0}) == SpinVector{{0.3, 0.1}, {0.0, 0.0}});
    CHECK(spin_project(s, {1, 1}) == s);
    CHECK(spin_project({{0.5, 0.0}, {0.0, 0.5}}, {0, 1}) ==
          SpinVector{{0.0, 0.0}, {0.0, 0.5}});
}

TEST_CASE("project: complementary masks partition the vector exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_spin(rng, 4);
        const std::vector<int> mask{1, 0, 1, 0};
        const std::vector<int> complement{0, 1, 0, 1};
        const auto merged = spin_merge(spin_project(s, mask), spin_project(s, complement));
        CHECK(merged == s);
    }
}

TEST_CASE("project: mask length mismatch is a configuration error") {
    CHECK_THROWS_AS(spin_project({{1.0, 0.0}, {0.0, 0.0}}, {1, 0, 0}), ConfigError);
}

TEST_CASE("reflect: swaps the designated pair") {
    const SpinVector s{{0.1, 0.2}, {0.3, 0.4}};
    CHECK(spin_reflect(s, {0, 1}) == SpinVector{{0.3, 0.4}, {0.1, 0.2}});

    const SpinVector four{{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}};
    CHECK(spin_reflect(four, kAxisUpDown) ==
          SpinVector{{1.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}, {3.0, 0.0}});
}

TEST_CASE("reflect is an involution and preserves the norm exactly") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_spin(rng, 4);
        const auto reflected = spin_reflect(s, kAxisLeftRight);
        CHECK(spin_reflect(reflected, kAxisLeftRight) == s);
        CHECK(spin_norm_sq(reflected) == spin_norm_sq(s));
    }
}

TEST_CASE("reflect: axis out of range is a configuration error") {
    CHECK_THROWS_AS(spin_reflect({{1.0, 0.0}, {0.0, 0.0}}, {0, 2}), ConfigError);
}

TEST_CASE("norm_sq values") {
    CHECK(spin_norm_sq({{1.0, 0.0}, {0.0, 0.0}}) == 1.0);
    CHECK(spin_norm_sq({{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}}) == doctest::Approx(1.0).epsilon(1e-15));
    // Center value of the fifth Hadamard-walk row: 10/16.
    CHECK(spin_norm_sq({{-0.75, 0.0}, {0.0, -0.25}}) == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("one_hot_mask bounds") {
    CHECK(one_hot_mask(3, 1) == std::vector<int>{0, 1, 0});
    CHECK_THROWS_AS(one_hot_mask(2, 2), ConfigError);
}

}  // TEST_SUITE("spin")
