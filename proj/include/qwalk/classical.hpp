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
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/graph.hpp"

namespace qwalk {

/// Classical traverser counts ("bulk") grow as 2^n; the flagship run reaches
/// ~1 quadrillion, and longer walks overflow any fixed-width integer.
using BigInt = boost::multiprecision::cpp_int;

inline const std::vector<std::string> kLineLabels = {kLabelLeft, kLabelRight};

/// Furcating walk with bulking and no sampling: every count splits to all
/// label targets each step and co-located counts sum. A clone whose label has
/// no target reflects in place, so the total count is exactly
/// (number of labels)^steps.
std::map<VertexId, BigInt> classical_bulk_walk(const PropertyGraph& graph, VertexId start,
                                               int steps,
                                               const std::vector<std::string>& labels = kLineLabels);

/// Single random walker: each step moves along one movement edge chosen
/// uniformly. Deterministic per seed; a vertex with no movement edges raises
/// WalkError.
VertexId classical_random_walk(const PropertyGraph& graph, VertexId start, int steps,
                               std::uint64_t seed,
                               const std::vector<std::string>& labels = kLineLabels);

}  // namespace qwalk
