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

#include <string>

#include "qwalk/graph.hpp"

namespace qwalk {

// Graph files are UTF-8 JSON objects:
//   {"vertices": [int...],
//    "edges": [{"out": int, "label": string, "in": int}...],
//    "properties": [{"element": int, "key": string, "value": scalar}...]}
// The edge array order is authoritative: it defines neighbor enumeration
// order, and load(save(g)) reproduces g exactly. Unknown fields are rejected.

/// Parses a graph from JSON text. Malformed input raises ParseError with
/// position/field context. The returned graph is frozen.
PropertyGraph parse_graph_json(const std::string& text);

std::string graph_to_json(const PropertyGraph& g);

PropertyGraph load_graph(const std::string& path);

void save_graph(const PropertyGraph& g, const std::string& path);

}  // namespace qwalk
