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

#pragma once

#include <vector>

#include "qwalk/matrix.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Hard cap on |V| * dim for explicit dense evolution matrices.
inline constexpr std::size_t kOracleSizeGuard = 5000;

/// The whole-system evolution operator built explicitly as U = S * (I (x) C):
/// the coin copied to every vertex, then the shift routing each spin component
/// along its branch edge (with in-place reflection entries at missing edges).
/// An independent second route against which the traverser engine is checked.
struct DenseOracle {
    ComplexMatrix matrix;
    std::vector<VertexId> vertex_order;  // ascending; basis index = position * dim + component
    std::size_t spin_dim = 0;
};

DenseOracle dense_oracle_step(const PropertyGraph& graph, const WalkConfig& config);

/// Applies the oracle matrix `steps` times to the amplitude vector.
std::vector<ComplexScalar> dense_oracle_run(const DenseOracle& oracle,
                                            std::vector<ComplexScalar> psi, int steps);

std::vector<ComplexScalar> state_to_vector(const DenseOracle& oracle, const WalkState& state);

WalkState vector_to_state(const DenseOracle& oracle, const std::vector<ComplexScalar>& psi,
                          std::int64_t iteration);

/// Largest per-amplitude difference between a traverser-engine state and an
/// oracle amplitude vector.
double max_amplitude_difference(const DenseOracle& oracle, const WalkState& state,
                                const std::vector<ComplexScalar>& psi);

}  // namespace qwalk
