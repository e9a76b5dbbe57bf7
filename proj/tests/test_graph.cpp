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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"

#include "qwalk/graph.hpp"
#include "qwalk/graph_io.hpp"

using namespace qwalk;

namespace {

std::vector<VertexId> to_vector(std::span<const VertexId> span) {
    return {span.begin(), span.end()};
}

// Brute-force adjacency symmetry: in_neighbors(v, L) == { u : v in out(u, L) }.
void check_adjacency_symmetry(const PropertyGraph& g, const std::vector<std::string>& labels) {
    for (const std::string& label : labels) {
        for (VertexId v : g.vertices()) {
            std::multiset<VertexId> expected;
            for (VertexId u : g.vertices()) {
                for (VertexId t : g.out_neighbors(u, label)) {
                    if (t == v) {
                        expected.insert(u);
                    }
                }
            }
            const auto actual_span = g.in_neighbors(v, label);
            const std::multiset<VertexId> actual(actual_span.begin(), actual_span.end());
            CHECK(actual == expected);
        }
    }
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("build_line: edges and boundaries") {
    const PropertyGraph g3 = build_line(3);
    CHECK(g3.edge_count() == 4);
    CHECK(g3.vertex_count() == 3);

    const PropertyGraph g = build_line(100);
    CHECK(g.edge_count() == 2 * 99);
    CHECK(to_vector(g.out_neighbors(50, "left")) == std::vector<VertexId>{49});
    CHECK(to_vector(g.out_neighbors(1, "left")).empty());
    CHECK(to_vector(g.out_neighbors(100, "right")).empty());
    CHECK(g.out_neighbors(1, "wrote").empty());
    for (VertexId v = 2; v <= 99; ++v) {
        CHECK(g.out_neighbors(v, "left").size() == 1);
        CHECK(g.out_neighbors(v, "right").size() == 1);
    }
    CHECK_THROWS_AS(build_line(1), ConfigError);
}

TEST_CASE("build_line: adjacency symmetry") {
    check_adjacency_symmetry(build_line(100), {"left", "right"});
}

TEST_CASE("build_lattice: edge counts and degrees") {
    const PropertyGraph g22 = build_lattice(2, 2);
    CHECK(g22.edge_count() == 8);

    const PropertyGraph g = build_lattice(20, 20);
    CHECK(g.vertex_count() == 400);
    CHECK(g.edge_count() == 2u * (2 * 20 * 20 - 20 - 20));
    // Corner: two out-edges; interior: four.
    std::size_t corner_out = g.out_neighbors(0, "left").size() +
                             g.out_neighbors(0, "right").size() +
                             g.out_neighbors(0, "up").size() + g.out_neighbors(0, "down").size();
    CHECK(corner_out == 2);
    const VertexId interior = 10 * 20 + 10;
    std::size_t interior_out =
        g.out_neighbors(interior, "left").size() + g.out_neighbors(interior, "right").size() +
        g.out_neighbors(interior, "up").size() + g.out_neighbors(interior, "down").size();
    CHECK(interior_out == 4);
    CHECK_THROWS_AS(build_lattice(1, 5), ConfigError);
}

TEST_CASE("build_lattice: adjacency symmetry") {
    check_adjacency_symmetry(build_lattice(20, 20), {"left", "right", "up", "down"});
}

TEST_CASE("double slit: wall isolation") {
    const DoubleSlitSpec spec;
    const PropertyGraph g = build_double_slit(spec);
    CHECK(g.vertex_count() == 400);

    std::set<int> open_columns;
    for (const auto& [c0, c1] : spec.slit_columns) {
        open_columns.insert(c0);
        open_columns.insert(c1);
    }
    // Within each wall row, only the slit columns keep any edges.
    for (int row : {spec.wall_rows.first, spec.wall_rows.second}) {
        std::size_t with_edges = 0;
        for (int col = 0; col < spec.width; ++col) {
            const VertexId v = static_cast<VertexId>(row) * spec.width + col;
            if (g.degree(v) > 0) {
                ++with_edges;
                CHECK(open_columns.count(col) == 1);
            }
        }
        CHECK(with_edges == open_columns.size());
    }
    // A vertex below a wall column has no "up" edge toward the isolated wall.
    const VertexId below_wall = 8 * 20 + 0;
    CHECK(g.out_neighbors(below_wall, "up").empty());
    // Below an open slit column the passage is intact.
    const VertexId below_slit =
        8 * 20 + spec.slit_columns[0].first;
    CHECK_FALSE(g.out_neighbors(below_slit, "up").empty());

    CHECK_THROWS_AS(build_double_slit(DoubleSlitSpec{20, 20, {0, 1}, {{{6, 7}, {12, 13}}}}),
                    ConfigError);
    CHECK_THROWS_AS(build_double_slit(DoubleSlitSpec{20, 20, {9, 10}, {{{6, 6}, {12, 13}}}}),
                    ConfigError);
    CHECK_THROWS_AS(build_double_slit(DoubleSlitSpec{20, 20, {9, 10}, {{{6, 25}, {12, 13}}}}),
                    ConfigError);
}

TEST_CASE("fixture graph: parallel edges") {
    const PropertyGraph g = build_fixture_graph();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 8);
    CHECK(to_vector(g.out_neighbors(0, "read")) == std::vector<VertexId>{1, 2, 3, 3});
    CHECK(to_vector(g.out_neighbors(0, "wrote")) == std::vector<VertexId>{1});
    CHECK(to_vector(g.out_neighbors(0, "liked")) == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("mutation and lookup rules") {
    PropertyGraph g;
    g.add_vertex(0);
    g.add_vertex(1);
    g.add_edge(0, "knows", 1);
    CHECK_THROWS_AS(g.add_edge(0, "knows", 7), LookupError);
    CHECK_THROWS_AS(g.out_neighbors(9, "knows"), LookupError);
    CHECK_THROWS_AS(g.add_vertex(-3), ConfigError);
    g.freeze();
    CHECK_THROWS_AS(g.add_vertex(2), StateError);
    CHECK_THROWS_AS(g.add_edge(0, "knows", 1), StateError);
    CHECK(g.out_neighbors(0, "nope").empty());
}

TEST_CASE("json round trip preserves structure and edge order") {
    PropertyGraph g;
    for (VertexId v : {4, 2, 7}) {
        g.add_vertex(v);
    }
    g.add_edge(4, "b", 2);
    g.add_edge(4, "a", 7);
    g.add_edge(4, "b", 2);  // parallel edge
    g.set_property(7, "name", std::string("marko"));
    g.set_property(2, "weight", 0.5);
    g.freeze();

    const std::string text = graph_to_json(g);
    const PropertyGraph loaded = parse_graph_json(text);
    CHECK(loaded == g);
    CHECK(loaded.frozen());
    CHECK(to_vector(loaded.out_neighbors(4, "b")) == std::vector<VertexId>{2, 2});

    const PropertyGraph line = build_line(3);
    CHECK(parse_graph_json(graph_to_json(line)) == line);
}

TEST_CASE("json parse errors carry context") {
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": []}"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{\"edges\": []}"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": [1, 1]}"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": [1], \"bogus\": 3}"), ParseError);
    CHECK_THROWS_AS(
        parse_graph_json("{\"vertices\": [1], \"edges\": [{\"out\": 1, \"label\": \"x\", "
                         "\"in\": 2}]}"),
        ParseError);
    CHECK_THROWS_AS(
        parse_graph_json("{\"vertices\": [1], \"edges\": [{\"out\": 1, \"in\": 1}]}"),
        ParseError);
}

TEST_CASE("save/load files") {
    const auto dir = std::filesystem::temp_directory_path() / "qwalk_graph_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "line.json").string();
    const PropertyGraph g = build_line(5);
    save_graph(g, path);
    CHECK(load_graph(path) == g);
    CHECK_THROWS_AS(load_graph((dir / "missing.json").string()), IoError);
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE("graph")
