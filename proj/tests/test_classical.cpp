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
#include <map>
#include <vector>

#include "doctest.h"

#include "qwalk/classical.hpp"

using namespace qwalk;

namespace {

// Independent oracle: binomial coefficients by the Pascal recurrence.
BigInt binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[k];
}

}  // namespace

TEST_SUITE("classical") {

TEST_CASE("bulk walk: first table rows") {
    const PropertyGraph g = build_line(100);
    CHECK(classical_bulk_walk(g, 50, 0) == std::map<VertexId, BigInt>{{50, 1}});
    CHECK(classical_bulk_walk(g, 50, 1) == std::map<VertexId, BigInt>{{49, 1}, {51, 1}});
    CHECK(classical_bulk_walk(g, 50, 2) ==
          std::map<VertexId, BigInt>{{48, 1}, {50, 2}, {52, 1}});
    CHECK(classical_bulk_walk(g, 50, 3) ==
          std::map<VertexId, BigInt>{{47, 1}, {49, 3}, {51, 3}, {53, 1}});
    CHECK(classical_bulk_walk(g, 50, 4) ==
          std::map<VertexId, BigInt>{{46, 1}, {48, 4}, {50, 6}, {52, 4}, {54, 1}});
}

TEST_CASE("bulk walk: the quadrillion-traverser run") {
    const PropertyGraph g = build_line(100);
    const auto counts = classical_bulk_walk(g, 50, 50);
    CHECK(counts.at(50) == BigInt("126410606437752"));
    BigInt total = 0;
    for (const auto& [vertex, count] : counts) {
        total += count;
    }
    CHECK(total == BigInt("1125899906842624"));
}

TEST_CASE("bulk walk counts are binomial coefficients") {
    const PropertyGraph g = build_line(200);
    const VertexId start = 100;
    for (int n : {1, 2, 3, 5, 10, 25, 50}) {
        const auto counts = classical_bulk_walk(g, start, n);
        for (int k = -n; k <= n; ++k) {
            const auto it = counts.find(start + k);
            const BigInt actual = (it == counts.end()) ? BigInt(0) : it->second;
            const BigInt expected =
                ((n + k) % 2 == 0) ? binomial(n, (n + k) / 2) : BigInt(0);
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("bulk walk: boundary clones reflect in place, total is preserved") {
    const PropertyGraph g = build_line(3);
    const auto counts = classical_bulk_walk(g, 2, 2);
    // Step 1 puts one clone on each boundary vertex. At step 2 each boundary
    // clone can only move inward; the outward clone stays put.
    CHECK(counts == std::map<VertexId, BigInt>{{1, 1}, {2, 2}, {3, 1}});
    BigInt total = 0;
    for (const auto& [vertex, count] : counts) {
        total += count;
    }
    CHECK(total == 4);
}

TEST_CASE("bulk walk: argument validation") {
    const PropertyGraph g = build_line(10);
    CHECK_THROWS_AS(classical_bulk_walk(g, 55, 1), ConfigError);
    CHECK_THROWS_AS(classical_bulk_walk(g, 5, -1), ConfigError);
    PropertyGraph unfrozen;
    unfrozen.add_vertex(0);
    CHECK_THROWS_AS(classical_bulk_walk(unfrozen, 0, 1), StateError);
}

TEST_CASE("random walk: zero steps, parity, determinism") {
    const PropertyGraph g = build_line(100);
    CHECK(classical_random_walk(g, 50, 0, 7) == 50);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const VertexId end = classical_random_walk(g, 50, 13, seed);
        CHECK(((end - 50) % 2 + 2) % 2 == 13 % 2);
    }
    CHECK(classical_random_walk(g, 50, 50, 99) == classical_random_walk(g, 50, 50, 99));
}

TEST_CASE("random walk: stuck walker is an error") {
    PropertyGraph g;
    g.add_vertex(0);
    g.freeze();
    CHECK_THROWS_AS(classical_random_walk(g, 0, 1, 0), WalkError);
}

TEST_CASE("random walk: empirical distribution matches the binomial law") {
    const PropertyGraph g = build_line(100);
    constexpr int kSamples = 100000;
    constexpr int kSteps = 50;
    std::map<VertexId, int> hits;
    for (int seed = 0; seed < kSamples; ++seed) {
        hits[classical_random_walk(g, 50, kSteps, seed)] += 1;
    }
    const double total = std::pow(2.0, kSteps);
    for (const VertexId v : {46, 48, 50, 52, 54}) {
        const int k = static_cast<int>(v) - 50;
        const double p = binomial(kSteps, (kSteps + k) / 2).convert_to<double>() / total;
        const double freq = static_cast<double>(hits[v]) / kSamples;
        const double sigma = std::sqrt(p * (1.0 - p) / kSamples);
        INFO("vertex ", v);
        CHECK(std::abs(freq - p) <= 3.0 * sigma);
    }
}

}  // TEST_SUITE("classical")
