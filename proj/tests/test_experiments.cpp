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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "qwalk/experiments.hpp"

using namespace qwalk;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(QWALK_DATA_DIR) + "/golden/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "qwalk_experiments_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("unknown experiment is a configuration error") {
    CHECK_THROWS_AS(run_experiment("line-dance"), ConfigError);
    CHECK(is_known_experiment("double-slit"));
    CHECK_FALSE(is_known_experiment("line-dance"));
}

TEST_CASE("line-classical matches the frequency and probability tables") {
    const ExperimentReport report = run_experiment("line-classical");
    CHECK(report.final_counts.at(50) == BigInt("126410606437752"));
    const CompareResult vs_counts = compare_tables(report, golden_path("table1.json"));
    INFO(vs_counts.message);
    CHECK(vs_counts.pass);
    const CompareResult vs_probs = compare_tables(report, golden_path("table2.json"));
    INFO(vs_probs.message);
    CHECK(vs_probs.pass);
}

TEST_CASE("line-hadamard reproduces the fourth table row at step 3") {
    const ExperimentReport report = run_experiment("line-hadamard");
    REQUIRE(report.iterations.size() == 51);
    const auto& row4 = report.iterations[3];
    CHECK(row4.step == 3);
    CHECK(row4.probabilities.at(47) == doctest::Approx(1.0 / 8).epsilon(1e-12));
    CHECK(row4.probabilities.at(49) == doctest::Approx(5.0 / 8).epsilon(1e-12));
    CHECK(row4.probabilities.at(51) == doctest::Approx(1.0 / 8).epsilon(1e-12));
    CHECK(row4.probabilities.at(53) == doctest::Approx(1.0 / 8).epsilon(1e-12));

    const CompareResult result = compare_tables(report, golden_path("table3.json"));
    INFO(result.message);
    CHECK(result.pass);
    CHECK(report.max_norm_drift <= 1e-9);
}

TEST_CASE("line-balanced matches the symmetric table") {
    const ExperimentReport report = run_experiment("line-balanced");
    const CompareResult result = compare_tables(report, golden_path("table4.json"));
    INFO(result.message);
    CHECK(result.pass);
}

TEST_CASE("line-bounded runs 100 iterations and conserves the norm") {
    const ExperimentReport report = run_experiment("line-bounded");
    CHECK(report.iterations.size() == 101);
    CHECK(report.max_norm_drift <= 1e-9);
}

TEST_CASE("reverse-check recovers the start vertex") {
    const ExperimentReport report = run_experiment("reverse-check");
    CHECK(report.final_distribution.at(50) >= 1.0 - 1e-6);
}

TEST_CASE("setops-demo output is byte-exact") {
    const ExperimentReport report = run_experiment("setops-demo");
    CHECK(report.text_output ==
          "==>[v[1], [1, 1]]\n"
          "==>[v[2], [1, 0]]\n"
          "==>[v[3], [2, 0]]\n"
          "\n"
          "==>[v[1], [1, 1]]\n"
          "\n"
          "==>[v[2], [1, 0]]\n"
          "==>[v[3], [2, 0]]\n"
          "\n"
          "==>[v[1], [2, 0]]\n"
          "\n"
          "==>[v[1], [1, 1, 1]]\n"
          "==>[v[2], [1, 0, 1]]\n"
          "==>[v[3], [2, 0, 1]]\n");
}

TEST_CASE("csv of a basis state pins the byte format") {
    ExperimentReport report;
    report.name = "basis";
    report.final_distribution[50] = 1.0;
    const auto path = (temp_dir() / "basis.csv").string();
    emit_distribution(report, OutputFormat::Csv, path);
    CHECK(read_file(path) == "vertex,probability\n50,1.000000000000\n");
}

TEST_CASE("emission is deterministic and thread count does not change bytes") {
    const auto dir = temp_dir();
    ExperimentParams single;
    single.threads = 1;
    ExperimentParams quad;
    quad.threads = 4;
    const ExperimentReport a = run_experiment("line-hadamard", single);
    const ExperimentReport b = run_experiment("line-hadamard", quad);

    const auto path_a = (dir / "a.csv").string();
    const auto path_b = (dir / "b.csv").string();
    const auto path_c = (dir / "c.csv").string();
    emit_distribution(a, OutputFormat::Csv, path_a);
    emit_distribution(b, OutputFormat::Csv, path_b);
    emit_distribution(a, OutputFormat::Csv, path_c);
    CHECK(read_file(path_a) == read_file(path_b));
    CHECK(read_file(path_a) == read_file(path_c));
}

TEST_CASE("double-slit svg renders one cell per lattice vertex") {
    const ExperimentReport report = run_experiment("double-slit");
    const auto path = (temp_dir() / "slit.svg").string();
    emit_distribution(report, OutputFormat::Svg, path);
    const std::string svg = read_file(path);
    std::size_t cells = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1)) {
        ++cells;
    }
    CHECK(cells == 400);
}

TEST_CASE("json and svg outputs are written for line experiments") {
    const ExperimentReport report = run_experiment("line-hadamard");
    const auto dir = temp_dir();
    emit_distribution(report, OutputFormat::Json, (dir / "h.json").string());
    emit_distribution(report, OutputFormat::Svg, (dir / "h.svg").string());
    CHECK(read_file((dir / "h.json").string()).find("\"experiment\"") != std::string::npos);
    CHECK(read_file((dir / "h.svg").string()).find("<polyline") != std::string::npos);
    CHECK_THROWS_AS(
        emit_distribution(report, OutputFormat::Csv, "/nonexistent-dir/x.csv"), IoError);
    CHECK_THROWS_AS(parse_output_format("yaml"), ConfigError);
}

TEST_CASE("state dumps follow the wire schema") {
    ExperimentParams params;
    params.steps = 2;
    params.record_states = true;
    const ExperimentReport report = run_experiment("line-hadamard", params);
    REQUIRE(report.states.size() == 3);
    const std::string dump = state_to_json(report.states[1]);
    CHECK(dump.find("\"iteration\": 1") != std::string::npos);
    CHECK(dump.find("\"vertex\": 49") != std::string::npos);
    CHECK(dump.find("\"spin\"") != std::string::npos);
}

TEST_CASE("sampling is driven by the seed alone") {
    auto find_param = [](const ExperimentReport& report, const std::string& key) {
        for (const auto& [k, v] : report.parameters) {
            if (k == key) {
                return v;
            }
        }
        return std::string{};
    };
    ExperimentParams a;
    a.seed = 41;
    ExperimentParams b;
    b.seed = 41;
    b.threads = 4;
    const ExperimentReport ra = run_experiment("double-slit", a);
    const ExperimentReport rb = run_experiment("double-slit", b);
    const std::string va = find_param(ra, "collapsed_vertex");
    CHECK_FALSE(va.empty());
    CHECK(va == find_param(rb, "collapsed_vertex"));
    CHECK(find_param(ra, "collapsed_spin_index") == find_param(rb, "collapsed_spin_index"));

    const ExperimentReport ca = run_experiment("line-classical", a);
    const ExperimentReport cb = run_experiment("line-classical", a);
    CHECK(find_param(ca, "random_walk_endpoint") == find_param(cb, "random_walk_endpoint"));
}

TEST_CASE("perturbed golden values fail with a located diff") {
    const ExperimentReport report = run_experiment("line-hadamard");
    const auto path = (temp_dir() / "bad_golden.json").string();
    std::ofstream out(path);
    out << R"({"table": "perturbed", "kind": "quantum",
               "exact_rows": [{"step": 3, "values":
                 {"47": "1/8", "49": "5/8", "51": "1/4", "53": "1/8"}}]})";
    out.close();
    const CompareResult result = compare_tables(report, path);
    CHECK_FALSE(result.pass);
    CHECK(result.message.find("vertex 51") != std::string::npos);

    const auto malformed = (temp_dir() / "malformed_golden.json").string();
    std::ofstream bad(malformed);
    bad << "{not json";
    bad.close();
    CHECK_THROWS_AS(compare_tables(report, malformed), ParseError);
    CHECK_THROWS_AS(compare_tables(report, "/no/such/file.json"), IoError);
}

}  // TEST_SUITE("experiments")
