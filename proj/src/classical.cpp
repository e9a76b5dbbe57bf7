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

#include "qwalk/classical.hpp"

#include <random>

namespace qwalk {

namespace {

void require_walkable(const PropertyGraph& graph, VertexId start, int steps) {
    if (!graph.frozen()) {
        throw StateError("classical walk: graph must be frozen");
    }
    if (!graph.has_vertex(start)) {
        throw ConfigError("classical walk: start vertex " + std::to_string(start) +
                          " does not exist");
    }
    if (steps < 0) {
        throw ConfigError("classical walk: step count must be >= 0");
    }
}

}  // namespace

std::map<VertexId, BigInt> classical_bulk_walk(const PropertyGraph& graph, VertexId start,
                                               int steps, const std::vector<std::string>& labels) {
    require_walkable(graph, start, steps);
    std::map<VertexId, BigInt> counts;
    counts[start] = 1;
    for (int step = 0; step < steps; ++step) {
        std::map<VertexId, BigInt> next;
        for (const auto& [vertex, bulk] : counts) {
            for (const std::string& label : labels) {
                const auto targets = graph.out_neighbors(vertex, label);
                if (targets.empty()) {
                    // A clone that cannot move reflects in place, mirroring the
                    // quantum boundary rule. The total count stays exactly
                    // (number of labels)^steps.
                    next[vertex] += bulk;
                    continue;
                }
                for (VertexId target : targets) {
                    next[target] += bulk;
                }
            }
        }
        counts = std::move(next);
    }
    return counts;
}

VertexId classical_random_walk(const PropertyGraph& graph, VertexId start, int steps,
                               std::uint64_t seed, const std::vector<std::string>& labels) {
    require_walkable(graph, start, steps);
    std::mt19937_64 rng(seed);
    std::vector<VertexId> targets;
    VertexId current = start;
    for (int step = 0; step < steps; ++step) {
        targets.clear();
        for (const std::string& label : labels) {
            const auto neighbors = graph.out_neighbors(current, label);
            targets.insert(targets.end(), neighbors.begin(), neighbors.end());
        }
        if (targets.empty()) {
            throw WalkError("classical random walk: vertex " + std::to_string(current) +
                            " has no movement edges at step " + std::to_string(step));
        }
        // Multiply-shift keeps the draw deterministic across library
        // implementations; bias is O(size / 2^64).
        const auto index = static_cast<std::size_t>(
            (static_cast<unsigned __int128>(rng()) * targets.size()) >> 64);
        current = targets[index];
    }
    return current;
}

}  // namespace qwalk
