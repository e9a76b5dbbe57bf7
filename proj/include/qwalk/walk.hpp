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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/spin.hpp"

namespace qwalk {

// The walk executes bulk-synchronously: every traverser completes the current
// step before any begins the next, because interference requires all
// co-located spins to merge at the step barrier. One step is
//
//   1. apply the coin to each occupied vertex's spin,
//   2. project one child per branch and move it along the branch's edge
//      (or reflect it in place at a missing edge),
//   3. merge co-located children by pairwise complex addition.
//
// Children of distinct vertices are independent, so step 2 may run on any
// number of threads; the merge is always the canonical reduction (ascending
// vertex id, then branch order), which makes results identical across thread
// counts.

enum class Direction { Out, In };

enum class BoundaryRule { Reflect, Forbid };

struct BoundaryPolicy {
    BoundaryRule rule = BoundaryRule::Forbid;
    ReflectAxis axis = {0, 1};
};

/// One traversal branch: which spin component it carries, which edge label it
/// moves along, and what happens at a missing edge.
struct BranchSpec {
    std::string label;
    std::size_t projection_index = 0;
    Direction direction = Direction::Out;
    BoundaryPolicy boundary = {};
};

struct WalkConfig {
    CoinOperator coin;
    std::vector<BranchSpec> branches;  // one per spin dimension
    VertexId start_vertex = 0;
    SpinVector initial_spin;
    /// When set, merged entries with norm_sq below this are dropped after each
    /// step. Off by default: pruning breaks exact reversibility, and the
    /// zero-amplitude entries produced by destructive interference are part of
    /// the state.
    std::optional<double> prune_epsilon;
    int threads = 1;
};

/// The wavefunction, distributed across the graph: one merged traverser
/// (vertex, spin) per occupied vertex, keyed by the location equivalence
/// class. `iteration` counts applied steps (reverse steps decrement it).
struct WalkState {
    std::map<VertexId, SpinVector> amplitudes;
    std::int64_t iteration = 0;
};

struct ProbabilityDistribution {
    std::map<VertexId, double> probs;
};

/// measure() raises IntegrityError when the total probability drifts from 1
/// by more than this; well-conditioned runs stay within 1e-9.
inline constexpr double kMeasureIntegrityTolerance = 1e-6;
inline constexpr double kNormDriftTolerance = 1e-9;

using StepObserver = std::function<void(const WalkState&)>;

/// Validates the configuration against the graph (dimensions, projection
/// permutation, coin unitarity at 1e-12, unit initial spin, start vertex).
void validate_config(const PropertyGraph& graph, const WalkConfig& config);

/// Single classical traverser in a position and spin basis state.
WalkState init_state(const PropertyGraph& graph, const WalkConfig& config);

/// One forward step: coin, then branch/shift/reflect, then barrier merge.
WalkState quantum_step(const WalkState& state, const PropertyGraph& graph,
                       const WalkConfig& config);

/// One inverse step: movement along direction-inverted edges first, adjoint
/// coin second. Exactly undoes quantum_step on the label-symmetric graphs the
/// builders produce.
WalkState reverse_step(const WalkState& state, const PropertyGraph& graph,
                       const WalkConfig& config);

WalkState run_walk(const PropertyGraph& graph, const WalkConfig& config, int steps,
                   const StepObserver& observer = {});

WalkState run_reverse(const PropertyGraph& graph, WalkState state, const WalkConfig& config,
                      int steps, const StepObserver& observer = {});

double total_norm_sq(const WalkState& state);

/// probs[v] = norm_sq of the merged spin at v. No renormalization is applied;
/// a total outside 1 +- 1e-6 raises IntegrityError instead.
ProbabilityDistribution measure(const WalkState& state);

/// Samples one classical traverser: a vertex drawn from measure(), then a spin
/// basis index drawn from the per-component weights at that vertex.
/// Deterministic for a fixed seed.
std::pair<VertexId, std::size_t> collapse(const WalkState& state, std::uint64_t seed);

/// Two-branch left/right walk over a line graph. Both branches reflect (or
/// forbid) on the 0<->1 axis.
WalkConfig make_line_walk_config(CoinOperator coin, SpinVector initial_spin, VertexId start,
                                 BoundaryRule rule = BoundaryRule::Forbid);

/// Four-branch left/right/up/down walk over a lattice. Left/right reflect on
/// the 0<->1 axis, up/down on the 2<->3 axis.
WalkConfig make_lattice_walk_config(CoinOperator coin, SpinVector initial_spin, VertexId start,
                                    BoundaryRule rule = BoundaryRule::Reflect);

}  // namespace qwalk
