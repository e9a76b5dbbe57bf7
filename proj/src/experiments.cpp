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

#include "qwalk/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qwalk/setops.hpp"

namespace qwalk {

namespace {

using nlohmann::json;
using Rational = boost::multiprecision::cpp_rational;

constexpr double kQuantumFractionTolerance = 1e-12;

std::string format_probability(double p) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12f", p);
    return buffer;
}

std::string format_spin(const SpinVector& spin) {
    std::ostringstream os;
    for (std::size_t i = 0; i < spin.size(); ++i) {
        if (i > 0) {
            os << ";";
        }
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g", spin[i].real(), spin[i].imag());
        os << buffer;
    }
    return os.str();
}

CoinOperator parse_coin(const std::string& name) {
    if (name == "hadamard") {
        return make_hadamard();
    }
    if (name == "balanced-y") {
        return make_balanced_y();
    }
    if (name == "grover") {
        return make_grover4();
    }
    throw ConfigError("unknown coin \"" + name + "\" (expected hadamard|balanced-y|grover)");
}

std::map<VertexId, double> state_probabilities(const WalkState& state) {
    std::map<VertexId, double> probs;
    for (const auto& [vertex, spin] : state.amplitudes) {
        probs.emplace(vertex, spin_norm_sq(spin));
    }
    return probs;
}

struct QuantumRunner {
    ExperimentReport& report;
    const ExperimentParams& params;

    void record(const WalkState& state) {
        IterationRecord record{state.iteration, state_probabilities(state)};
        double total = 0.0;
        for (const auto& [vertex, p] : record.probabilities) {
            total += p;
        }
        const double drift = std::abs(total - 1.0);
        report.max_norm_drift = std::max(report.max_norm_drift, drift);
        if (drift > kMeasureIntegrityTolerance) {
            report.integrity_ok = false;
            throw IntegrityError(report.name + ": total probability " + std::to_string(total) +
                                 " at iteration " + std::to_string(state.iteration));
        }
        report.iterations.push_back(std::move(record));
        if (params.record_states) {
            report.states.push_back(state);
        }
    }

    WalkState run(const PropertyGraph& graph, const WalkConfig& config, int steps) {
        WalkState state = init_state(graph, config);
        record(state);
        for (int i = 0; i < steps; ++i) {
            state = quantum_step(state, graph, config);
            record(state);
        }
        return state;
    }

    WalkState reverse(const PropertyGraph& graph, WalkState state, const WalkConfig& config,
                      int steps) {
        for (int i = 0; i < steps; ++i) {
            state = reverse_step(state, graph, config);
            record(state);
        }
        return state;
    }
};

void add_walk_parameters(ExperimentReport& report, const WalkConfig& config, int steps) {
    report.parameters.emplace_back("start", std::to_string(config.start_vertex));
    report.parameters.emplace_back("steps", std::to_string(steps));
    report.parameters.emplace_back("initial_spin", format_spin(config.initial_spin));
    report.parameters.emplace_back("threads", std::to_string(config.threads));
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3e", config.coin.max_deviation_from_unitary());
    report.parameters.emplace_back("coin_unitarity_deviation", buffer);
}

// Step 7 of the walk pipeline: sample the final wavefunction down to one
// classical traverser in a position and spin basis.
void record_collapse(ExperimentReport& report, const WalkState& state, std::uint64_t seed) {
    const auto [vertex, spin_index] = collapse(state, seed);
    report.parameters.emplace_back("collapsed_vertex", std::to_string(vertex));
    report.parameters.emplace_back("collapsed_spin_index", std::to_string(spin_index));
}

ExperimentReport run_line_classical(const ExperimentParams& params) {
    ExperimentReport report;
    report.name = "line-classical";
    const int n = params.vertices;
    const int steps = params.steps.value_or(50);
    const VertexId start = params.start.value_or(n / 2);
    const PropertyGraph graph = build_line(n);
    report.parameters.emplace_back("vertices", std::to_string(n));
    report.parameters.emplace_back("start", std::to_string(start));
    report.parameters.emplace_back("steps", std::to_string(steps));

    for (int k = 0; k <= steps; ++k) {
        CountRecord record{k, classical_bulk_walk(graph, start, k)};
        BigInt total = 0;
        for (const auto& [vertex, count] : record.counts) {
            total += count;
        }
        IterationRecord probs{k, {}};
        for (const auto& [vertex, count] : record.counts) {
            probs.probabilities.emplace(vertex,
                                        Rational(count, total).convert_to<double>());
        }
        report.iterations.push_back(std::move(probs));
        report.count_iterations.push_back(std::move(record));
    }
    report.final_counts = report.count_iterations.back().counts;
    report.final_distribution = report.iterations.back().probabilities;
    report.parameters.emplace_back(
        "random_walk_endpoint",
        std::to_string(classical_random_walk(graph, start, steps, params.seed)));
    return report;
}

ExperimentReport run_line_quantum(const std::string& name, const ExperimentParams& params,
                                  const std::string& default_coin,
                                  const SpinVector& default_spin, int default_steps,
                                  BoundaryRule rule) {
    ExperimentReport report;
    report.name = name;
    const int n = params.vertices;
    const int steps = params.steps.value_or(default_steps);
    const std::string coin_name = params.coin.value_or(default_coin);
    WalkConfig config = make_line_walk_config(parse_coin(coin_name),
                                              params.initial_spin.value_or(default_spin),
                                              params.start.value_or(n / 2), rule);
    config.threads = params.threads;
    report.parameters.emplace_back("vertices", std::to_string(n));
    report.parameters.emplace_back("coin", coin_name);
    add_walk_parameters(report, config, steps);

    const PropertyGraph graph = build_line(n);
    QuantumRunner runner{report, params};
    const WalkState final_state = runner.run(graph, config, steps);
    report.final_distribution = state_probabilities(final_state);
    record_collapse(report, final_state, params.seed);
    return report;
}

ExperimentReport run_double_slit(const ExperimentParams& params) {
    ExperimentReport report;
    report.name = "double-slit";
    const int steps = params.steps.value_or(26);
    const std::string coin_name = params.coin.value_or("grover");
    WalkConfig config = make_lattice_walk_config(
        parse_coin(coin_name),
        params.initial_spin.value_or(SpinVector{0.0, 0.0, 1.0, 0.0}),
        params.start.value_or(10), BoundaryRule::Reflect);
    config.threads = params.threads;
    report.lattice_width = params.slit.width;
    report.lattice_height = params.slit.height;
    report.parameters.emplace_back("width", std::to_string(params.slit.width));
    report.parameters.emplace_back("height", std::to_string(params.slit.height));
    report.parameters.emplace_back("coin", coin_name);
    add_walk_parameters(report, config, steps);

    const PropertyGraph graph = build_double_slit(params.slit);
    QuantumRunner runner{report, params};
    const WalkState final_state = runner.run(graph, config, steps);
    report.final_distribution = state_probabilities(final_state);
    record_collapse(report, final_state, params.seed);
    return report;
}

ExperimentReport run_reverse_check(const ExperimentParams& params) {
    ExperimentReport report;
    report.name = "reverse-check";
    const int n = params.vertices;
    const int steps = params.steps.value_or(50);
    const std::string coin_name = params.coin.value_or("hadamard");
    WalkConfig config = make_line_walk_config(parse_coin(coin_name),
                                              params.initial_spin.value_or(SpinVector{1.0, 0.0}),
                                              params.start.value_or(n / 2), BoundaryRule::Reflect);
    config.threads = params.threads;
    report.parameters.emplace_back("vertices", std::to_string(n));
    report.parameters.emplace_back("coin", coin_name);
    add_walk_parameters(report, config, steps);

    const PropertyGraph graph = build_line(n);
    QuantumRunner runner{report, params};
    WalkState state = runner.run(graph, config, steps);
    state = runner.reverse(graph, std::move(state), config, steps);
    report.final_distribution = state_probabilities(state);

    const auto it = report.final_distribution.find(config.start_vertex);
    const double recovered = (it == report.final_distribution.end()) ? 0.0 : it->second;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12f", recovered);
    report.parameters.emplace_back("recovered_probability", buffer);
    if (recovered < 1.0 - 1e-6) {
        report.integrity_ok = false;
        throw IntegrityError("reverse-check: recovered probability " + std::string(buffer) +
                             " below 1 - 1e-6");
    }
    return report;
}

ExperimentReport run_setops_demo() {
    ExperimentReport report;
    report.name = "setops-demo";
    const PropertyGraph graph = build_fixture_graph();
    const std::vector<FreqBranch> two = {{"read", 0}, {"wrote", 1}};
    const std::vector<FreqBranch> three = {{"read", 0}, {"wrote", 1}, {"liked", 2}};

    const BranchResults merged = branch_walk(graph, 0, two);
    std::ostringstream os;
    os << format_listing(merged);
    os << "\n" << format_listing(intersect_filter(merged));
    os << "\n" << format_listing(sym_diff_filter(merged));
    os << "\n" << format_listing(intersect(graph, 0, two));
    os << "\n" << format_listing(branch_walk(graph, 0, three));
    report.text_output = os.str();
    return report;
}

// --- golden table comparison ------------------------------------------------

Rational parse_fraction(const std::string& text, const std::string& where) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        const BigInt numerator(text.substr(0, slash));
        const BigInt denominator(text.substr(slash + 1));
        if (denominator == 0) {
            throw ParseError("golden table: zero denominator in " + where);
        }
        return Rational(numerator, denominator);
    } catch (const std::runtime_error&) {
        throw ParseError("golden table: bad fraction \"" + text + "\" in " + where);
    }
}

VertexId parse_vertex_key(const std::string& key, const std::string& where) {
    try {
        std::size_t consumed = 0;
        const long long id = std::stoll(key, &consumed);
        if (consumed != key.size()) {
            throw std::invalid_argument(key);
        }
        return id;
    } catch (const std::exception&) {
        throw ParseError("golden table: bad vertex key \"" + key + "\" in " + where);
    }
}

const IterationRecord* find_iteration(const ExperimentReport& report, std::int64_t step) {
    for (const IterationRecord& record : report.iterations) {
        if (record.step == step) {
            return &record;
        }
    }
    return nullptr;
}

const CountRecord* find_counts(const ExperimentReport& report, std::int64_t step) {
    for (const CountRecord& record : report.count_iterations) {
        if (record.step == step) {
            return &record;
        }
    }
    return nullptr;
}

CompareResult fail(std::string message) {
    return CompareResult{false, std::move(message)};
}

CompareResult compare_exact_row(const ExperimentReport& report, const std::string& kind,
                                std::int64_t step, const json& values) {
    const std::string where = "step " + std::to_string(step);
    if (kind == "counts" || kind == "probability") {
        const CountRecord* record = find_counts(report, step);
        if (record == nullptr) {
            return fail(where + ": report has no count record");
        }
        BigInt total = 0;
        for (const auto& [vertex, count] : record->counts) {
            total += count;
        }
        for (const auto& [key, value] : values.items()) {
            const VertexId vertex = parse_vertex_key(key, where);
            const auto it = record->counts.find(vertex);
            const BigInt actual = (it == record->counts.end()) ? BigInt(0) : it->second;
            if (kind == "counts") {
                const BigInt expected(value.get<std::string>());
                if (actual != expected) {
                    return fail(where + ", vertex " + key + ": expected count " +
                                expected.str() + ", got " + actual.str());
                }
            } else {
                const Rational expected = parse_fraction(value.get<std::string>(), where);
                // actual/total == expected, compared exactly by cross-multiplication
                if (actual * denominator(expected) != numerator(expected) * total) {
                    return fail(where + ", vertex " + key + ": expected fraction " +
                                value.get<std::string>() + ", got " + actual.str() + "/" +
                                total.str());
                }
            }
        }
        for (const auto& [vertex, count] : record->counts) {
            if (count != 0 && !values.contains(std::to_string(vertex))) {
                return fail(where + ": unexpected nonzero count at vertex " +
                            std::to_string(vertex));
            }
        }
        return {};
    }
    if (kind == "quantum") {
        const IterationRecord* record = find_iteration(report, step);
        if (record == nullptr) {
            return fail(where + ": report has no iteration record");
        }
        for (const auto& [key, value] : values.items()) {
            const VertexId vertex = parse_vertex_key(key, where);
            const double expected =
                parse_fraction(value.get<std::string>(), where).convert_to<double>();
            const auto it = record->probabilities.find(vertex);
            const double actual = (it == record->probabilities.end()) ? 0.0 : it->second;
            if (std::abs(actual - expected) > kQuantumFractionTolerance) {
                return fail(where + ", vertex " + key + ": expected " +
                            value.get<std::string>() + ", got " + format_probability(actual));
            }
        }
        for (const auto& [vertex, p] : record->probabilities) {
            if (p > kQuantumFractionTolerance && !values.contains(std::to_string(vertex))) {
                return fail(where + ": unexpected probability " + format_probability(p) +
                            " at vertex " + std::to_string(vertex));
            }
        }
        return {};
    }
    throw ParseError("golden table: unknown kind \"" + kind + "\"");
}

}  // namespace

ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params) {
    const auto start_time = std::chrono::steady_clock::now();
    ExperimentReport report;
    if (name == "line-classical") {
        report = run_line_classical(params);
    } else if (name == "line-hadamard") {
        report = run_line_quantum(name, params, "hadamard", SpinVector{1.0, 0.0}, 50,
                                  BoundaryRule::Reflect);
    } else if (name == "line-balanced") {
        const double h = 1.0 / std::sqrt(2.0);
        report = run_line_quantum(name, params, "hadamard",
                                  SpinVector{ComplexScalar{h, 0.0}, ComplexScalar{0.0, h}}, 50,
                                  BoundaryRule::Reflect);
    } else if (name == "line-bounded") {
        report = run_line_quantum(name, params, "hadamard", SpinVector{1.0, 0.0}, 100,
                                  BoundaryRule::Reflect);
    } else if (name == "double-slit") {
        report = run_double_slit(params);
    } else if (name == "reverse-check") {
        report = run_reverse_check(params);
    } else if (name == "setops-demo") {
        report = run_setops_demo();
    } else {
        throw ConfigError("unknown experiment \"" + name + "\"");
    }
    report.parameters.emplace_back("seed", std::to_string(params.seed));
    const auto end_time = std::chrono::steady_clock::now();
    report.duration_ms =
        std::chrono::duration<double, std::milli>(end_time - start_time).count();
    return report;
}

bool is_known_experiment(const std::string& name) {
    const auto names = experiment_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> experiment_names() {
    return {"line-classical", "line-hadamard", "line-balanced", "line-bounded",
            "double-slit",    "setops-demo",   "reverse-check"};
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "svg") {
        return OutputFormat::Svg;
    }
    throw ConfigError("unknown output format \"" + name + "\" (expected csv|json|svg)");
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << content;
    if (!out) {
        throw IoError("write to " + path + " failed");
    }
}

std::string render_csv(const ExperimentReport& report) {
    std::ostringstream os;
    os << "vertex,probability\n";
    for (const auto& [vertex, p] : report.final_distribution) {
        os << vertex << "," << format_probability(p) << "\n";
    }
    return os.str();
}

std::string render_json(const ExperimentReport& report) {
    json doc;
    doc["experiment"] = report.name;
    json parameters = json::object();
    for (const auto& [key, value] : report.parameters) {
        parameters[key] = value;
    }
    doc["parameters"] = parameters;
    doc["max_norm_drift"] = report.max_norm_drift;
    json probabilities = json::array();
    for (const auto& [vertex, p] : report.final_distribution) {
        probabilities.push_back({{"vertex", vertex}, {"p", p}});
    }
    doc["probabilities"] = probabilities;
    if (!report.final_counts.empty()) {
        json counts = json::array();
        for (const auto& [vertex, count] : report.final_counts) {
            counts.push_back({{"vertex", vertex}, {"count", count.str()}});
        }
        doc["counts"] = counts;
    }
    return doc.dump(2) + "\n";
}

std::string render_line_svg(const ExperimentReport& report) {
    constexpr double width = 800.0, height = 400.0, margin = 50.0;
    const double inner_w = width - 2 * margin;
    const double inner_h = height - 2 * margin;
    if (report.final_distribution.empty()) {
        throw ConfigError("svg: empty distribution");
    }
    const VertexId vmin = report.final_distribution.begin()->first;
    const VertexId vmax = report.final_distribution.rbegin()->first;
    double pmax = 0.0;
    for (const auto& [vertex, p] : report.final_distribution) {
        pmax = std::max(pmax, p);
    }
    if (pmax <= 0.0) {
        pmax = 1.0;
    }
    const double span = std::max<double>(1, vmax - vmin);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\">\n";
    os << "  <rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  margin, height - margin, width - margin, height - margin);
    os << buffer;
    std::snprintf(buffer, sizeof(buffer),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  margin, margin, margin, height - margin);
    os << buffer;
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [vertex, p] : report.final_distribution) {
        const double x = margin + (static_cast<double>(vertex - vmin) / span) * inner_w;
        const double y = margin + inner_h - (p / pmax) * inner_h;
        std::snprintf(buffer, sizeof(buffer), "%s%.2f,%.2f", first ? "" : " ", x, y);
        os << buffer;
        first = false;
    }
    os << "\"/>\n";
    std::snprintf(buffer, sizeof(buffer),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%lld</text>\n", margin,
                  height - margin + 16, static_cast<long long>(vmin));
    os << buffer;
    std::snprintf(buffer, sizeof(buffer),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"end\">%lld</text>\n",
                  width - margin, height - margin + 16, static_cast<long long>(vmax));
    os << buffer;
    std::snprintf(buffer, sizeof(buffer),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%.6f</text>\n", margin + 4,
                  margin - 6, pmax);
    os << buffer;
    os << "</svg>\n";
    return os.str();
}

std::string render_heatmap_svg(const ExperimentReport& report) {
    const int w = report.lattice_width;
    const int h = report.lattice_height;
    constexpr int cell = 24;
    double pmax = 0.0;
    for (const auto& [vertex, p] : report.final_distribution) {
        pmax = std::max(pmax, p);
    }
    if (pmax <= 0.0) {
        pmax = 1.0;
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w * cell << " "
       << h * cell << "\">\n";
    char buffer[200];
    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            const VertexId vertex = static_cast<VertexId>(row) * w + col;
            const auto it = report.final_distribution.find(vertex);
            const double p = (it == report.final_distribution.end()) ? 0.0 : it->second;
            // Lighter cells carry higher probability; zero-probability cells
            // stay white to mark the wave front boundary.
            int gray = 255;
            if (p > 0.0) {
                gray = 32 + static_cast<int>(std::lround(208.0 * (p / pmax)));
            }
            std::snprintf(buffer, sizeof(buffer),
                          "  <rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                          "fill=\"rgb(%d,%d,%d)\" stroke=\"rgb(200,200,200)\"/>\n",
                          col * cell, (h - 1 - row) * cell, cell, cell, gray, gray, gray);
            os << buffer;
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

void emit_distribution(const ExperimentReport& report, OutputFormat format,
                       const std::string& path) {
    switch (format) {
        case OutputFormat::Csv:
            write_file(path, render_csv(report));
            break;
        case OutputFormat::Json:
            write_file(path, render_json(report));
            break;
        case OutputFormat::Svg:
            write_file(path, report.lattice_width > 0 ? render_heatmap_svg(report)
                                                      : render_line_svg(report));
            break;
    }
}

void emit_counts_csv(const ExperimentReport& report, const std::string& path) {
    std::ostringstream os;
    os << "vertex,count\n";
    for (const auto& [vertex, count] : report.final_counts) {
        os << vertex << "," << count.str() << "\n";
    }
    write_file(path, os.str());
}

std::string state_to_json(const WalkState& state) {
    json doc;
    doc["iteration"] = state.iteration;
    json entries = json::array();
    for (const auto& [vertex, spin] : state.amplitudes) {
        json components = json::array();
        for (const ComplexScalar& c : spin) {
            components.push_back({c.real(), c.imag()});
        }
        entries.push_back({{"vertex", vertex}, {"spin", components}});
    }
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

void write_state_dumps(const ExperimentReport& report, const std::string& directory) {
    for (std::size_t i = 0; i < report.states.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "%s-state-%04zu.json", report.name.c_str(), i);
        write_file(directory + "/" + name, state_to_json(report.states[i]));
    }
}

CompareResult compare_tables(const ExperimentReport& report, const std::string& golden_path) {
    std::ifstream in(golden_path, std::ios::binary);
    if (!in) {
        throw IoError("compare_tables: cannot open " + golden_path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("golden table: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind")) {
        throw ParseError("golden table: missing \"kind\"");
    }
    const std::string kind = doc["kind"].get<std::string>();
    const std::string table = doc.value("table", golden_path);

    if (doc.contains("exact_rows")) {
        for (const json& row : doc["exact_rows"]) {
            const CompareResult result =
                compare_exact_row(report, kind, row.at("step").get<std::int64_t>(),
                                  row.at("values"));
            if (!result.pass) {
                return fail(table + ": " + result.message);
            }
        }
    }
    if (doc.contains("approx_rows")) {
        for (const json& row : doc["approx_rows"]) {
            const std::int64_t step = row.at("step").get<std::int64_t>();
            const double tolerance = row.at("tolerance").get<double>();
            const IterationRecord* record = find_iteration(report, step);
            if (record == nullptr) {
                return fail(table + ": step " + std::to_string(step) +
                            ": report has no iteration record");
            }
            for (const auto& [key, value] : row.at("values").items()) {
                const VertexId vertex = parse_vertex_key(key, "approx step " +
                                                                  std::to_string(step));
                const auto it = record->probabilities.find(vertex);
                const double actual = (it == record->probabilities.end()) ? 0.0 : it->second;
                const double expected = value.get<double>();
                if (std::abs(actual - expected) > tolerance) {
                    return fail(table + ": step " + std::to_string(step) + ", vertex " + key +
                                ": expected " + std::to_string(expected) + " +- " +
                                std::to_string(tolerance) + ", got " +
                                format_probability(actual));
                }
            }
        }
    }
    return {};
}

}  // namespace qwalk
