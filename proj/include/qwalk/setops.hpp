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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/classical.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

// Frequency-spin semantics: the spin components carry integer branch tallies
// instead of complex amplitudes. Unitary evolution is abandoned in favor of
// bookkeeping that records how many traversers each traversal branch
// generated, which makes intersection and symmetric difference expressible as
// pure filters over merged traversers, with no side-effect aggregation.

/// One nonnegative tally per traversal branch.
struct FrequencySpin {
    std::vector<BigInt> tallies;

    bool operator==(const FrequencySpin& other) const = default;
};

/// Non-unitary analogue of the coin: sums the vector and places that sum in
/// every dimension — the traverser is about to take every branch.
FrequencySpin split(const FrequencySpin& s);

/// Pairwise tally addition at the barrier.
FrequencySpin freq_merge(const FrequencySpin& a, const FrequencySpin& b);

/// Measurement of a frequency spin: all tallies fold to the first component,
/// returning the traversal to a linear (non-branching) form.
FrequencySpin norm_collapse(const FrequencySpin& s);

/// One branch of a frequency walk. An empty label means the identity branch:
/// the traverser stalls at its current vertex.
struct FreqBranch {
    std::optional<std::string> label;
    std::size_t projection_index = 0;
};

/// Merged traversers sorted by ascending vertex id.
using BranchResults = std::vector<std::pair<VertexId, FrequencySpin>>;

/// split + one shifted child per branch + barrier merge. Parallel edges each
/// produce a traverser (one tally per edge); unknown labels simply contribute
/// no traversers.
BranchResults branch_walk(const PropertyGraph& graph, VertexId start,
                          const std::vector<FreqBranch>& branches);

/// Keeps traversers reached by every branch (no tally is zero).
BranchResults intersect_filter(const BranchResults& results);

/// Keeps traversers reached by exactly one branch.
BranchResults sym_diff_filter(const BranchResults& results);

/// branch_walk + intersect_filter + norm_collapse.
BranchResults intersect(const PropertyGraph& graph, VertexId start,
                        const std::vector<FreqBranch>& branches);

/// branch_walk + sym_diff_filter + norm_collapse.
BranchResults sym_diff(const PropertyGraph& graph, VertexId start,
                       const std::vector<FreqBranch>& branches);

/// Vertices exactly two label-hops from `start` that are not also one hop
/// away: an identity branch stalls on each one-hop neighbor while a move
/// branch walks on, and the filter keeps merged traversers whose identity
/// tally is zero. Replaces the aggregate-and-exclude side-effect pattern.
std::vector<VertexId> except_pattern(const PropertyGraph& graph, VertexId start,
                                     const std::string& label);

/// Console listing format, one line per merged traverser:
/// ==>[v[K], [t0, t1, ...]]
std::string format_listing(const BranchResults& results);

}  // namespace qwalk
