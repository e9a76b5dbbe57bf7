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

#include "qwalk/graph.hpp"

#include <algorithm>
#include <set>

namespace qwalk {

void PropertyGraph::require_mutable() const {
    if (frozen_) {
        throw StateError("graph is frozen; mutation is not allowed");
    }
}

void PropertyGraph::require_vertex(VertexId id, const char* op) const {
    if (!has_vertex(id)) {
        throw LookupError(std::string(op) + ": unknown vertex " + std::to_string(id));
    }
}

void PropertyGraph::add_vertex(VertexId id) {
    require_mutable();
    if (id < 0) {
        throw ConfigError("add_vertex: vertex ids must be nonnegative, got " + std::to_string(id));
    }
    if (vertex_set_.insert(id).second) {
        vertices_.push_back(id);
    }
}

void PropertyGraph::add_edge(VertexId out, const std::string& label, VertexId in) {
    require_mutable();
    require_vertex(out, "add_edge");
    require_vertex(in, "add_edge");
    edges_.push_back(Edge{out, label, in});
    out_adjacency_[out][label].push_back(in);
    in_adjacency_[in][label].push_back(out);
}

void PropertyGraph::set_property(VertexId element, const std::string& key, PropertyValue value) {
    require_mutable();
    require_vertex(element, "set_property");
    properties_[{element, key}] = std::move(value);
}

std::span<const VertexId> PropertyGraph::out_neighbors(VertexId v, std::string_view label) const {
    require_vertex(v, "out_neighbors");
    auto it = out_adjacency_.find(v);
    if (it == out_adjacency_.end()) {
        return {};
    }
    auto jt = it->second.find(label);
    if (jt == it->second.end()) {
        return {};
    }
    return jt->second;
}

std::span<const VertexId> PropertyGraph::in_neighbors(VertexId v, std::string_view label) const {
    require_vertex(v, "in_neighbors");
    auto it = in_adjacency_.find(v);
    if (it == in_adjacency_.end()) {
        return {};
    }
    auto jt = it->second.find(label);
    if (jt == it->second.end()) {
        return {};
    }
    return jt->second;
}

std::size_t PropertyGraph::degree(VertexId v) const {
    require_vertex(v, "degree");
    std::size_t total = 0;
    if (auto it = out_adjacency_.find(v); it != out_adjacency_.end()) {
        for (const auto& [label, targets] : it->second) {
            total += targets.size();
        }
    }
    if (auto it = in_adjacency_.find(v); it != in_adjacency_.end()) {
        for (const auto& [label, sources] : it->second) {
            total += sources.size();
        }
    }
    return total;
}

const PropertyValue* PropertyGraph::property(VertexId element, std::string_view key) const {
    require_vertex(element, "property");
    auto it = properties_.find({element, std::string(key)});
    return it == properties_.end() ? nullptr : &it->second;
}

bool PropertyGraph::operator==(const PropertyGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           properties_ == other.properties_;
}

PropertyGraph build_line(int n) {
    if (n < 2) {
        throw ConfigError("build_line: need at least 2 vertices, got " + std::to_string(n));
    }
    PropertyGraph g;
    for (int i = 1; i <= n; ++i) {
        g.add_vertex(i);
    }
    for (int i = 1; i < n; ++i) {
        g.add_edge(i, kLabelRight, i + 1);
        g.add_edge(i + 1, kLabelLeft, i);
    }
    g.freeze();
    return g;
}

PropertyGraph build_lattice(int width, int height) {
    if (width < 2 || height < 2) {
        throw ConfigError("build_lattice: need width >= 2 and height >= 2");
    }
    PropertyGraph g;
    auto id = [width](int row, int col) { return static_cast<VertexId>(row) * width + col; };
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            g.add_vertex(id(row, col));
        }
    }
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            if (col + 1 < width) {
                g.add_edge(id(row, col), kLabelRight, id(row, col + 1));
                g.add_edge(id(row, col + 1), kLabelLeft, id(row, col));
            }
            if (row + 1 < height) {
                g.add_edge(id(row, col), kLabelUp, id(row + 1, col));
                g.add_edge(id(row + 1, col), kLabelDown, id(row, col));
            }
        }
    }
    g.freeze();
    return g;
}

PropertyGraph build_double_slit(const DoubleSlitSpec& spec) {
    const int w = spec.width;
    const int h = spec.height;
    if (w < 2 || h < 2) {
        throw ConfigError("build_double_slit: need width >= 2 and height >= 2");
    }
    const auto [row_a, row_b] = spec.wall_rows;
    for (int r : {row_a, row_b}) {
        if (r <= 0 || r >= h - 1) {
            throw ConfigError("build_double_slit: wall row " + std::to_string(r) +
                              " must be strictly interior");
        }
    }
    std::set<int> open_columns;
    for (const auto& [c0, c1] : spec.slit_columns) {
        for (int c : {c0, c1}) {
            if (c < 0 || c >= w) {
                throw ConfigError("build_double_slit: slit column " + std::to_string(c) +
                                  " outside lattice");
            }
            if (!open_columns.insert(c).second) {
                throw ConfigError("build_double_slit: slit columns must be disjoint");
            }
        }
    }

    auto is_wall = [&](int row, int col) {
        return (row == row_a || row == row_b) && open_columns.count(col) == 0;
    };

    PropertyGraph g;
    auto id = [w](int row, int col) { return static_cast<VertexId>(row) * w + col; };
    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            g.add_vertex(id(row, col));
        }
    }
    auto connect = [&](int r0, int c0, const char* fwd, int r1, int c1, const char* rev) {
        if (is_wall(r0, c0) || is_wall(r1, c1)) {
            return;
        }
        g.add_edge(id(r0, c0), fwd, id(r1, c1));
        g.add_edge(id(r1, c1), rev, id(r0, c0));
    };
    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            if (col + 1 < w) {
                connect(row, col, kLabelRight, row, col + 1, kLabelLeft);
            }
            if (row + 1 < h) {
                connect(row, col, kLabelUp, row + 1, col, kLabelDown);
            }
        }
    }
    g.freeze();
    return g;
}

PropertyGraph build_fixture_graph() {
    PropertyGraph g;
    for (VertexId v = 0; v <= 3; ++v) {
        g.add_vertex(v);
    }
    g.add_edge(0, "read", 1);
    g.add_edge(0, "read", 2);
    g.add_edge(0, "read", 3);
    g.add_edge(0, "read", 3);
    g.add_edge(0, "wrote", 1);
    g.add_edge(0, "liked", 1);
    g.add_edge(0, "liked", 2);
    g.add_edge(0, "liked", 3);
    g.freeze();
    return g;
}

}  // namespace qwalk
