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

#include "qwalk/setops.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qwalk {

namespace {

void require_walk_inputs(const PropertyGraph& graph, VertexId start) {
    if (!graph.frozen()) {
        throw StateError("branch walk: graph must be frozen");
    }
    if (!graph.has_vertex(start)) {
        throw ConfigError("branch walk: start vertex " + std::to_string(start) +
                          " does not exist");
    }
}

void validate_branches(const std::vector<FreqBranch>& branches) {
    if (branches.empty()) {
        throw ConfigError("branch walk: at least one branch required");
    }
    std::vector<bool> seen(branches.size(), false);
    for (const FreqBranch& b : branches) {
        if (b.projection_index >= branches.size() || seen[b.projection_index]) {
            throw ConfigError("branch walk: projection indices must be distinct and < " +
                              std::to_string(branches.size()));
        }
        seen[b.projection_index] = true;
    }
}

BranchResults sorted_results(std::map<VertexId, FrequencySpin>&& merged) {
    BranchResults out;
    out.reserve(merged.size());
    for (auto& [vertex, spin] : merged) {
        out.emplace_back(vertex, std::move(spin));
    }
    return out;
}

BranchResults collapse_all(BranchResults results) {
    for (auto& [vertex, spin] : results) {
        spin = norm_collapse(spin);
    }
    return results;
}

}  // namespace

FrequencySpin split(const FrequencySpin& s) {
    BigInt sum = 0;
    for (const BigInt& t : s.tallies) {
        sum += t;
    }
    FrequencySpin out;
    out.tallies.assign(s.tallies.size(), sum);
    return out;
}

FrequencySpin freq_merge(const FrequencySpin& a, const FrequencySpin& b) {
    if (a.tallies.size() != b.tallies.size()) {
        throw ConfigError("freq_merge: dimension mismatch");
    }
    FrequencySpin out = a;
    for (std::size_t i = 0; i < b.tallies.size(); ++i) {
        out.tallies[i] += b.tallies[i];
    }
    return out;
}

FrequencySpin norm_collapse(const FrequencySpin& s) {
    BigInt sum = 0;
    for (const BigInt& t : s.tallies) {
        sum += t;
    }
    FrequencySpin out;
    out.tallies.assign(s.tallies.size(), BigInt(0));
    if (!out.tallies.empty()) {
        out.tallies[0] = sum;
    }
    return out;
}

BranchResults branch_walk(const PropertyGraph& graph, VertexId start,
                          const std::vector<FreqBranch>& branches) {
    require_walk_inputs(graph, start);
    validate_branches(branches);
    const std::size_t dim = branches.size();

    // The start traverser's sack is split across all branches, so each branch
    // carries tally 1 before its move.
    std::map<VertexId, FrequencySpin> merged;
    auto deposit = [&](VertexId target, std::size_t component) {
        auto [it, inserted] = merged.try_emplace(target);
        if (inserted) {
            it->second.tallies.assign(dim, BigInt(0));
        }
        it->second.tallies[component] += 1;
    };

    for (const FreqBranch& branch : branches) {
        if (!branch.label) {
            deposit(start, branch.projection_index);
            continue;
        }
        for (VertexId target : graph.out_neighbors(start, *branch.label)) {
            deposit(target, branch.projection_index);
        }
    }
    return sorted_results(std::move(merged));
}

BranchResults intersect_filter(const BranchResults& results) {
    BranchResults out;
    for (const auto& entry : results) {
        const bool all_positive =
            std::all_of(entry.second.tallies.begin(), entry.second.tallies.end(),
                        [](const BigInt& t) { return t > 0; });
        if (all_positive) {
            out.push_back(entry);
        }
    }
    return out;
}

BranchResults sym_diff_filter(const BranchResults& results) {
    BranchResults out;
    for (const auto& entry : results) {
        const auto nonzero =
            std::count_if(entry.second.tallies.begin(), entry.second.tallies.end(),
                          [](const BigInt& t) { return t > 0; });
        if (nonzero == 1) {
            out.push_back(entry);
        }
    }
    return out;
}

BranchResults intersect(const PropertyGraph& graph, VertexId start,
                        const std::vector<FreqBranch>& branches) {
    return collapse_all(intersect_filter(branch_walk(graph, start, branches)));
}

BranchResults sym_diff(const PropertyGraph& graph, VertexId start,
                       const std::vector<FreqBranch>& branches) {
    return collapse_all(sym_diff_filter(branch_walk(graph, start, branches)));
}

std::vector<VertexId> except_pattern(const PropertyGraph& graph, VertexId start,
                                     const std::string& label) {
    require_walk_inputs(graph, start);

    // Identity branch stalls at each one-hop neighbor (component 0); the move
    // branch walks one hop further (component 1). Merging across the whole
    // frontier leaves the one-hop markers on any vertex that is itself a
    // neighbor.
    std::map<VertexId, FrequencySpin> merged;
    auto deposit = [&](VertexId target, std::size_t component) {
        auto [it, inserted] = merged.try_emplace(target);
        if (inserted) {
            it->second.tallies.assign(2, BigInt(0));
        }
        it->second.tallies[component] += 1;
    };
    for (VertexId hop : graph.out_neighbors(start, label)) {
        deposit(hop, 0);
        for (VertexId two_hop : graph.out_neighbors(hop, label)) {
            deposit(two_hop, 1);
        }
    }

    std::vector<VertexId> out;
    for (const auto& [vertex, spin] : merged) {
        if (spin.tallies[0] == 0) {
            out.push_back(vertex);
        }
    }
    return out;
}

std::string format_listing(const BranchResults& results) {
    std::ostringstream os;
    for (const auto& [vertex, spin] : results) {
        os << "==>[v[" << vertex << "], [";
        for (std::size_t i = 0; i < spin.tallies.size(); ++i) {
            if (i > 0) {
                os << ", ";
            }
            os << spin.tallies[i];
        }
        os << "]]\n";
    }
    return os.str();
}

}  // namespace qwalk
