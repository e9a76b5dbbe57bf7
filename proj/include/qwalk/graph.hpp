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

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using VertexId = std::int64_t;

/// Scalar property values: the property function maps (element, key) to
/// non-relational objects only, never to vertices or edges.
using PropertyValue = std::variant<bool, std::int64_t, double, std::string>;

struct Edge {
    VertexId out;
    std::string label;
    VertexId in;

    bool operator==(const Edge& other) const = default;
};

/// Labeled directed multigraph: parallel edges are permitted and neighbor
/// enumeration preserves edge insertion order. Graphs are built single-writer,
/// then frozen; every walk operation observes an immutable graph.
class PropertyGraph {
  public:
    void add_vertex(VertexId id);
    void add_edge(VertexId out, const std::string& label, VertexId in);
    void set_property(VertexId element, const std::string& key, PropertyValue value);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    bool has_vertex(VertexId id) const { return vertex_set_.count(id) != 0; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Vertex ids in insertion order (file order for loaded graphs).
    const std::vector<VertexId>& vertices() const { return vertices_; }

    const std::vector<Edge>& edges() const { return edges_; }

    /// Targets of label-matching out-edges, in edge insertion order.
    /// Unknown labels yield an empty list; unknown vertices are an error.
    std::span<const VertexId> out_neighbors(VertexId v, std::string_view label) const;

    /// Sources of label-matching in-edges, in edge insertion order.
    std::span<const VertexId> in_neighbors(VertexId v, std::string_view label) const;

    /// Total incident edge count (out plus in, over all labels).
    std::size_t degree(VertexId v) const;

    const PropertyValue* property(VertexId element, std::string_view key) const;

    /// All properties, sorted by (element, key).
    const std::map<std::pair<VertexId, std::string>, PropertyValue>& properties() const {
        return properties_;
    }

    bool operator==(const PropertyGraph& other) const;

  private:
    using LabelAdjacency = std::map<std::string, std::vector<VertexId>, std::less<>>;

    void require_mutable() const;
    void require_vertex(VertexId id, const char* op) const;

    std::vector<VertexId> vertices_;
    std::unordered_set<VertexId> vertex_set_;
    std::vector<Edge> edges_;
    std::unordered_map<VertexId, LabelAdjacency> out_adjacency_;
    std::unordered_map<VertexId, LabelAdjacency> in_adjacency_;
    std::map<std::pair<VertexId, std::string>, PropertyValue> properties_;
    bool frozen_ = false;
};

inline constexpr const char* kLabelLeft = "left";
inline constexpr const char* kLabelRight = "right";
inline constexpr const char* kLabelUp = "up";
inline constexpr const char* kLabelDown = "down";

/// One-dimensional lattice with vertices 1..n. Every interior adjacency gets
/// a "right" edge and the opposing "left" edge; the two boundary vertices
/// lack their outward edge. Returned frozen.
PropertyGraph build_line(int n);

/// Two-dimensional lattice, vertex id = row * width + col with row 0 at the
/// bottom. Labels "left"/"right"/"up"/"down" between 4-neighbors; boundary
/// vertices lack the outward edges. Returned frozen.
PropertyGraph build_lattice(int width, int height);

/// Geometry of the double-slit screen: a wall spanning `wall_rows` where only
/// the vertices in the slit columns keep their edges. Each slit is one pair
/// of open columns; wall vertices are fully isolated, so their neighbors also
/// lose the edges toward them.
///
/// The default slits sit mirror-symmetric about the source column (10), which
/// makes the film-row distribution exactly symmetric: no path that reaches the
/// film within 26 steps can also touch the asymmetric side boundaries.
struct DoubleSlitSpec {
    int width = 20;
    int height = 20;
    std::pair<int, int> wall_rows = {9, 10};
    std::array<std::pair<int, int>, 2> slit_columns = {{{7, 8}, {12, 13}}};
};

PropertyGraph build_double_slit(const DoubleSlitSpec& spec = {});

/// The 4-vertex/8-edge toy graph used by the frequency-spin set operations:
/// v0 --read--> v1,v2,v3,v3 (parallel), --wrote--> v1, --liked--> v1,v2,v3.
PropertyGraph build_fixture_graph();

}  // namespace qwalk
