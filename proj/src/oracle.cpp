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

#include "qwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace qwalk {

DenseOracle dense_oracle_step(const PropertyGraph& graph, const WalkConfig& config) {
    validate_config(graph, config);
    const std::size_t dim = config.branches.size();
    const std::size_t n = graph.vertex_count() * dim;
    if (n > kOracleSizeGuard) {
        throw CapabilityError("dense oracle: |V| * dim = " + std::to_string(n) +
                              " exceeds the size guard of " + std::to_string(kOracleSizeGuard));
    }

    DenseOracle oracle;
    oracle.spin_dim = dim;
    oracle.vertex_order = graph.vertices();
    std::sort(oracle.vertex_order.begin(), oracle.vertex_order.end());
    std::unordered_map<VertexId, std::size_t> position;
    position.reserve(oracle.vertex_order.size());
    for (std::size_t i = 0; i < oracle.vertex_order.size(); ++i) {
        position.emplace(oracle.vertex_order[i], i);
    }

    // Basis state (v, p) routed by the shift operator.
    auto shifted_index = [&](VertexId v, const BranchSpec& branch) -> std::size_t {
        const auto targets = (branch.direction == Direction::Out)
                                 ? graph.out_neighbors(v, branch.label)
                                 : graph.in_neighbors(v, branch.label);
        if (targets.size() > 1) {
            throw AmbiguityError("dense oracle: label \"" + branch.label +
                                 "\" has multiple targets at vertex " + std::to_string(v));
        }
        if (targets.size() == 1) {
            return position.at(targets.front()) * dim + branch.projection_index;
        }
        if (branch.boundary.rule != BoundaryRule::Reflect) {
            throw BoundaryError("dense oracle: vertex " + std::to_string(v) +
                                " lacks a \"" + branch.label +
                                "\" edge and the policy is forbid; the shift operator is total "
                                "only with reflection");
        }
        const ReflectAxis axis = branch.boundary.axis;
        const std::size_t p = branch.projection_index;
        const std::size_t reflected =
            (p == axis.first) ? axis.second : (p == axis.second ? axis.first : p);
        return position.at(v) * dim + reflected;
    };

    oracle.matrix = ComplexMatrix(n, n);
    for (const VertexId v : oracle.vertex_order) {
        const std::size_t base = position.at(v) * dim;
        for (const BranchSpec& branch : config.branches) {
            const std::size_t row = shifted_index(v, branch);
            const std::size_t p = branch.projection_index;
            // Column (v, k) of U = sum_p C[p][k] * S|v, p>.
            for (std::size_t k = 0; k < dim; ++k) {
                oracle.matrix.at(row, base + k) += config.coin.at(p, k);
            }
        }
    }
    return oracle;
}

std::vector<ComplexScalar> dense_oracle_run(const DenseOracle& oracle,
                                            std::vector<ComplexScalar> psi, int steps) {
    if (steps < 0) {
        throw ConfigError("dense_oracle_run: step count must be >= 0");
    }
    if (psi.size() != oracle.matrix.cols()) {
        throw ConfigError("dense_oracle_run: state vector length mismatch");
    }
    for (int i = 0; i < steps; ++i) {
        psi = oracle.matrix.apply(psi);
    }
    return psi;
}

std::vector<ComplexScalar> state_to_vector(const DenseOracle& oracle, const WalkState& state) {
    std::vector<ComplexScalar> psi(oracle.vertex_order.size() * oracle.spin_dim,
                                   ComplexScalar{0.0, 0.0});
    std::unordered_map<VertexId, std::size_t> position;
    for (std::size_t i = 0; i < oracle.vertex_order.size(); ++i) {
        position.emplace(oracle.vertex_order[i], i);
    }
    for (const auto& [vertex, spin] : state.amplitudes) {
        const auto it = position.find(vertex);
        if (it == position.end()) {
            throw LookupError("state_to_vector: vertex " + std::to_string(vertex) +
                              " not present in oracle basis");
        }
        for (std::size_t p = 0; p < oracle.spin_dim; ++p) {
            psi[it->second * oracle.spin_dim + p] = spin[p];
        }
    }
    return psi;
}

WalkState vector_to_state(const DenseOracle& oracle, const std::vector<ComplexScalar>& psi,
                          std::int64_t iteration) {
    if (psi.size() != oracle.vertex_order.size() * oracle.spin_dim) {
        throw ConfigError("vector_to_state: state vector length mismatch");
    }
    WalkState state;
    state.iteration = iteration;
    for (std::size_t i = 0; i < oracle.vertex_order.size(); ++i) {
        SpinVector spin(psi.begin() + static_cast<std::ptrdiff_t>(i * oracle.spin_dim),
                        psi.begin() + static_cast<std::ptrdiff_t>((i + 1) * oracle.spin_dim));
        if (spin_norm_sq(spin) > 0.0) {
            state.amplitudes.emplace(oracle.vertex_order[i], std::move(spin));
        }
    }
    return state;
}

double max_amplitude_difference(const DenseOracle& oracle, const WalkState& state,
                                const std::vector<ComplexScalar>& psi) {
    const std::vector<ComplexScalar> engine = state_to_vector(oracle, state);
    if (engine.size() != psi.size()) {
        throw ConfigError("max_amplitude_difference: vector length mismatch");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        dev = std::max(dev, std::abs(engine[i] - psi[i]));
    }
    return dev;
}

}  // namespace qwalk
