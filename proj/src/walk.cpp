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

#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

namespace qwalk {

namespace {

// One routed child traverser: where it lands and with what spin.
struct Child {
    VertexId target;
    SpinVector spin;
};

std::span<const VertexId> neighbors(const PropertyGraph& graph, VertexId v,
                                    const BranchSpec& branch, bool invert_direction) {
    const bool out = (branch.direction == Direction::Out) != invert_direction;
    return out ? graph.out_neighbors(v, branch.label) : graph.in_neighbors(v, branch.label);
}

// Routes one projected child along its branch. A missing edge either reflects
// the child in place or, under `forbid`, is an error unless the child carries
// no amplitude at all.
Child route_child(const PropertyGraph& graph, VertexId v, const BranchSpec& branch,
                  SpinVector child_spin, bool invert_direction) {
    const auto targets = neighbors(graph, v, branch, invert_direction);
    if (targets.size() > 1) {
        throw AmbiguityError("quantum walk: label \"" + branch.label + "\" has " +
                             std::to_string(targets.size()) + " targets at vertex " +
                             std::to_string(v) + "; the shift operator requires at most one");
    }
    if (targets.size() == 1) {
        return Child{targets.front(), std::move(child_spin)};
    }
    if (branch.boundary.rule == BoundaryRule::Reflect) {
        return Child{v, spin_reflect(child_spin, branch.boundary.axis)};
    }
    if (spin_norm_sq(child_spin) > 0.0) {
        throw BoundaryError("quantum walk: traverser at vertex " + std::to_string(v) +
                            " hit a missing \"" + branch.label + "\" edge under policy forbid");
    }
    return Child{v, std::move(child_spin)};
}

using ChildrenOf = std::vector<Child>;

// Computes child traversers for each occupied vertex, optionally on several
// threads, then folds them into a fresh state in canonical order (ascending
// source vertex, then branch order) so results do not depend on thread count.
WalkState scatter_merge(const WalkState& state, const WalkConfig& config,
                        const std::function<ChildrenOf(VertexId, const SpinVector&)>& expand,
                        std::int64_t iteration_delta) {
    std::vector<const std::pair<const VertexId, SpinVector>*> occupied;
    occupied.reserve(state.amplitudes.size());
    for (const auto& entry : state.amplitudes) {
        occupied.push_back(&entry);
    }

    std::vector<ChildrenOf> children(occupied.size());
    const std::size_t n = occupied.size();
    const std::size_t threads =
        std::max<std::size_t>(1, std::min<std::size_t>(config.threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            children[i] = expand(occupied[i]->first, occupied[i]->second);
        }
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> failures(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += threads) {
                        children[i] = expand(occupied[i]->first, occupied[i]->second);
                    }
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) {
            worker.join();
        }
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    WalkState next;
    next.iteration = state.iteration + iteration_delta;
    for (const ChildrenOf& child_list : children) {
        for (const Child& child : child_list) {
            auto [it, inserted] = next.amplitudes.try_emplace(child.target, child.spin);
            if (!inserted) {
                it->second = spin_merge(it->second, child.spin);
            }
        }
    }
    if (config.prune_epsilon) {
        const double eps = *config.prune_epsilon;
        std::erase_if(next.amplitudes,
                      [eps](const auto& entry) { return spin_norm_sq(entry.second) < eps; });
    }
    return next;
}

double canonical_uniform(std::mt19937_64& rng) {
    // 53 uniform bits; identical across standard library implementations.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate_config(const PropertyGraph& graph, const WalkConfig& config) {
    if (!graph.frozen()) {
        throw StateError("walk: graph must be frozen before walking");
    }
    const std::size_t dim = config.branches.size();
    if (dim == 0) {
        throw ConfigError("walk config: at least one branch required");
    }
    if (config.coin.rows() != config.coin.cols() || config.coin.rows() != dim) {
        throw ConfigError("walk config: coin dimension does not match branch count");
    }
    if (config.initial_spin.size() != dim) {
        throw ConfigError("walk config: initial spin dimension does not match branch count");
    }
    std::vector<bool> seen(dim, false);
    for (const BranchSpec& b : config.branches) {
        if (b.projection_index >= dim || seen[b.projection_index]) {
            throw ConfigError("walk config: projection indices must be a permutation of 0.." +
                              std::to_string(dim - 1));
        }
        seen[b.projection_index] = true;
        if (b.boundary.rule == BoundaryRule::Reflect &&
            (b.boundary.axis.first >= dim || b.boundary.axis.second >= dim)) {
            throw ConfigError("walk config: reflect axis out of range");
        }
    }
    if (!is_unitary(config.coin, kUnitarityTolerance)) {
        throw ConfigError("walk config: coin is not unitary at tolerance 1e-12");
    }
    for (const ComplexScalar& c : config.initial_spin) {
        if (!is_finite(c)) {
            throw ConfigError("walk config: initial spin has non-finite components");
        }
    }
    if (std::abs(spin_norm_sq(config.initial_spin) - 1.0) > kUnitarityTolerance) {
        throw ConfigError("walk config: initial spin must have unit norm");
    }
    if (!graph.has_vertex(config.start_vertex)) {
        throw ConfigError("walk config: start vertex " + std::to_string(config.start_vertex) +
                          " does not exist");
    }
    if (config.threads < 1) {
        throw ConfigError("walk config: thread count must be >= 1");
    }
}

WalkState init_state(const PropertyGraph& graph, const WalkConfig& config) {
    validate_config(graph, config);
    WalkState state;
    state.amplitudes.emplace(config.start_vertex, config.initial_spin);
    state.iteration = 0;
    return state;
}

WalkState quantum_step(const WalkState& state, const PropertyGraph& graph,
                       const WalkConfig& config) {
    std::vector<std::vector<int>> masks;
    masks.reserve(config.branches.size());
    for (const BranchSpec& b : config.branches) {
        masks.push_back(one_hot_mask(config.branches.size(), b.projection_index));
    }
    auto expand = [&](VertexId v, const SpinVector& spin) {
        const SpinVector coined = coin_apply(config.coin, spin);
        ChildrenOf children;
        children.reserve(config.branches.size());
        for (std::size_t b = 0; b < config.branches.size(); ++b) {
            children.push_back(route_child(graph, v, config.branches[b],
                                           spin_project(coined, masks[b]),
                                           /*invert_direction=*/false));
        }
        return children;
    };
    return scatter_merge(state, config, expand, +1);
}

WalkState reverse_step(const WalkState& state, const PropertyGraph& graph,
                       const WalkConfig& config) {
    std::vector<std::vector<int>> masks;
    masks.reserve(config.branches.size());
    for (const BranchSpec& b : config.branches) {
        masks.push_back(one_hot_mask(config.branches.size(), b.projection_index));
    }
    auto expand = [&](VertexId v, const SpinVector& spin) {
        ChildrenOf children;
        children.reserve(config.branches.size());
        for (std::size_t b = 0; b < config.branches.size(); ++b) {
            children.push_back(route_child(graph, v, config.branches[b],
                                           spin_project(spin, masks[b]),
                                           /*invert_direction=*/true));
        }
        return children;
    };
    WalkState moved = scatter_merge(state, config, expand, -1);
    const CoinOperator inverse_coin = coin_adjoint(config.coin);
    for (auto& [vertex, spin] : moved.amplitudes) {
        spin = coin_apply(inverse_coin, spin);
    }
    return moved;
}

WalkState run_walk(const PropertyGraph& graph, const WalkConfig& config, int steps,
                   const StepObserver& observer) {
    if (steps < 0) {
        throw ConfigError("run_walk: step count must be >= 0");
    }
    WalkState state = init_state(graph, config);
    for (int i = 0; i < steps; ++i) {
        state = quantum_step(state, graph, config);
        if (observer) {
            observer(state);
        }
    }
    return state;
}

WalkState run_reverse(const PropertyGraph& graph, WalkState state, const WalkConfig& config,
                      int steps, const StepObserver& observer) {
    if (steps < 0) {
        throw ConfigError("run_reverse: step count must be >= 0");
    }
    validate_config(graph, config);
    for (int i = 0; i < steps; ++i) {
        state = reverse_step(state, graph, config);
        if (observer) {
            observer(state);
        }
    }
    return state;
}

double total_norm_sq(const WalkState& state) {
    double total = 0.0;
    for (const auto& [vertex, spin] : state.amplitudes) {
        total += spin_norm_sq(spin);
    }
    return total;
}

ProbabilityDistribution measure(const WalkState& state) {
    ProbabilityDistribution dist;
    double total = 0.0;
    for (const auto& [vertex, spin] : state.amplitudes) {
        const double p = spin_norm_sq(spin);
        dist.probs.emplace(vertex, p);
        total += p;
    }
    if (std::abs(total - 1.0) > kMeasureIntegrityTolerance) {
        throw IntegrityError("measure: total probability " + std::to_string(total) +
                             " deviates from 1 by more than 1e-6");
    }
    return dist;
}

std::pair<VertexId, std::size_t> collapse(const WalkState& state, std::uint64_t seed) {
    const ProbabilityDistribution dist = measure(state);
    std::mt19937_64 rng(seed);

    double total = 0.0;
    for (const auto& [vertex, p] : dist.probs) {
        total += p;
    }
    const double u_vertex = canonical_uniform(rng) * total;
    double acc = 0.0;
    VertexId sampled = 0;
    bool found = false;
    for (const auto& [vertex, p] : dist.probs) {
        if (p <= 0.0) {
            continue;
        }
        sampled = vertex;
        found = true;
        acc += p;
        if (u_vertex < acc) {
            break;
        }
    }
    if (!found) {
        throw IntegrityError("collapse: state carries no probability");
    }

    const SpinVector& spin = state.amplitudes.at(sampled);
    const double u_spin = canonical_uniform(rng) * spin_norm_sq(spin);
    acc = 0.0;
    std::size_t component = 0;
    for (std::size_t i = 0; i < spin.size(); ++i) {
        const double w = modulus_sq(spin[i]);
        if (w <= 0.0) {
            continue;
        }
        component = i;
        acc += w;
        if (u_spin < acc) {
            break;
        }
    }
    return {sampled, component};
}

WalkConfig make_line_walk_config(CoinOperator coin, SpinVector initial_spin, VertexId start,
                                 BoundaryRule rule) {
    WalkConfig config;
    config.coin = std::move(coin);
    config.branches = {
        BranchSpec{kLabelLeft, 0, Direction::Out, {rule, kAxisLeftRight}},
        BranchSpec{kLabelRight, 1, Direction::Out, {rule, kAxisLeftRight}},
    };
    config.start_vertex = start;
    config.initial_spin = std::move(initial_spin);
    return config;
}

WalkConfig make_lattice_walk_config(CoinOperator coin, SpinVector initial_spin, VertexId start,
                                    BoundaryRule rule) {
    WalkConfig config;
    config.coin = std::move(coin);
    config.branches = {
        BranchSpec{kLabelLeft, 0, Direction::Out, {rule, kAxisLeftRight}},
        BranchSpec{kLabelRight, 1, Direction::Out, {rule, kAxisLeftRight}},
        BranchSpec{kLabelUp, 2, Direction::Out, {rule, kAxisUpDown}},
        BranchSpec{kLabelDown, 3, Direction::Out, {rule, kAxisUpDown}},
    };
    config.start_vertex = start;
    config.initial_spin = std::move(initial_spin);
    return config;
}

}  // namespace qwalk
