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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qwalk/experiments.hpp"
#include "qwalk/graph_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitIo = 4;

qwalk::SpinVector parse_spin(const std::string& text) {
    qwalk::SpinVector spin;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(';', pos), text.size());
        const std::string component = text.substr(pos, end - pos);
        const std::size_t comma = component.find(',');
        if (comma == std::string::npos) {
            throw qwalk::ConfigError("--initial-spin: component \"" + component +
                                     "\" is not of the form re,im");
        }
        try {
            spin.emplace_back(std::stod(component.substr(0, comma)),
                              std::stod(component.substr(comma + 1)));
        } catch (const std::exception&) {
            throw qwalk::ConfigError("--initial-spin: cannot parse component \"" + component +
                                     "\"");
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    if (spin.empty()) {
        throw qwalk::ConfigError("--initial-spin: empty spin");
    }
    return spin;
}

std::pair<int, int> parse_int_pair(const std::string& text, const std::string& flag) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw qwalk::ConfigError(flag + ": expected \"a,b\", got \"" + text + "\"");
    }
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw qwalk::ConfigError(flag + ": cannot parse \"" + text + "\"");
    }
}

std::array<std::pair<int, int>, 2> parse_slit_cols(const std::string& text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos) {
        throw qwalk::ConfigError("--slit-cols: expected \"a,b;c,d\", got \"" + text + "\"");
    }
    return {parse_int_pair(text.substr(0, semi), "--slit-cols"),
            parse_int_pair(text.substr(semi + 1), "--slit-cols")};
}

struct ExperimentFlags {
    qwalk::ExperimentParams params;
    std::string initial_spin_text;
    std::string wall_rows_text;
    std::string slit_cols_text;
    std::string out_dir = ".";
    std::string format = "csv";
    std::string golden_path;
    bool dump_iterations = false;
    long long start = -1;
    long long steps = -1;
    std::string coin;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& flags) {
    cmd->add_option("--vertices", flags.params.vertices, "Line graph length");
    cmd->add_option("--steps", flags.steps, "Number of walk steps");
    cmd->add_option("--coin", flags.coin, "Coin operator: hadamard|balanced-y|grover");
    cmd->add_option("--initial-spin", flags.initial_spin_text,
                    "Initial spin as \"re,im;re,im;...\"");
    cmd->add_option("--start", flags.start, "Start vertex");
    cmd->add_option("--seed", flags.params.seed, "Random seed (drives all sampling)");
    cmd->add_option("--threads", flags.params.threads, "Worker threads for the step");
    cmd->add_option("--out", flags.out_dir, "Output directory");
    cmd->add_option("--format", flags.format, "Distribution format: csv|json|svg");
    cmd->add_flag("--dump-iterations", flags.dump_iterations,
                  "Write per-iteration wavefunction dumps");
    cmd->add_option("--golden", flags.golden_path, "Compare against a golden table file");
    cmd->add_option("--width", flags.params.slit.width, "Lattice width (double-slit)");
    cmd->add_option("--height", flags.params.slit.height, "Lattice height (double-slit)");
    cmd->add_option("--wall-rows", flags.wall_rows_text, "Wall rows as \"a,b\" (double-slit)");
    cmd->add_option("--slit-cols", flags.slit_cols_text,
                    "Open slit columns as \"a,b;c,d\" (double-slit)");
}

void finalize_flags(ExperimentFlags& flags) {
    if (!flags.initial_spin_text.empty()) {
        flags.params.initial_spin = parse_spin(flags.initial_spin_text);
    }
    if (!flags.wall_rows_text.empty()) {
        flags.params.slit.wall_rows = parse_int_pair(flags.wall_rows_text, "--wall-rows");
    }
    if (!flags.slit_cols_text.empty()) {
        flags.params.slit.slit_columns = parse_slit_cols(flags.slit_cols_text);
    }
    if (flags.start >= 0) {
        flags.params.start = flags.start;
    }
    if (flags.steps >= 0) {
        flags.params.steps = static_cast<int>(flags.steps);
    }
    if (!flags.coin.empty()) {
        flags.params.coin = flags.coin;
    }
    flags.params.record_states = flags.dump_iterations;
}

int run_named_experiment(const std::string& name, ExperimentFlags& flags) {
    finalize_flags(flags);
    const qwalk::ExperimentReport report = qwalk::run_experiment(name, flags.params);

    if (name == "setops-demo") {
        // stdout carries exactly the listings; everything else goes to stderr.
        std::fputs(report.text_output.c_str(), stdout);
        std::fflush(stdout);
        return kExitOk;
    }

    std::error_code dir_error;
    std::filesystem::create_directories(flags.out_dir, dir_error);
    if (dir_error) {
        throw qwalk::IoError("cannot create output directory " + flags.out_dir + ": " +
                             dir_error.message());
    }
    const qwalk::OutputFormat format = qwalk::parse_output_format(flags.format);
    const char* extension = flags.format.c_str();
    const std::string path = flags.out_dir + "/" + name + "." + extension;
    qwalk::emit_distribution(report, format, path);
    std::cout << "experiment: " << report.name << "\n";
    for (const auto& [key, value] : report.parameters) {
        std::cout << "  " << key << ": " << value << "\n";
    }
    std::cout << "max norm drift: " << report.max_norm_drift << "\n";
    std::cout << "wrote: " << path << "\n";
    if (!report.final_counts.empty()) {
        const std::string counts_path = flags.out_dir + "/" + name + "-counts.csv";
        qwalk::emit_counts_csv(report, counts_path);
        std::cout << "wrote: " << counts_path << "\n";
    }
    if (flags.dump_iterations && !report.states.empty()) {
        qwalk::write_state_dumps(report, flags.out_dir);
        std::cout << "wrote: " << report.states.size() << " state dumps\n";
    }
    std::cout << "duration: " << report.duration_ms << " ms\n";

    if (!flags.golden_path.empty()) {
        const qwalk::CompareResult result = qwalk::compare_tables(report, flags.golden_path);
        if (!result.pass) {
            std::cout << "golden: FAIL " << result.message << "\n";
            return kExitIntegrity;
        }
        std::cout << "golden: PASS\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time quantum walks over labeled property graphs"};
    app.require_subcommand(1);

    std::vector<std::pair<std::string, ExperimentFlags>> experiments;
    experiments.reserve(8);
    for (const std::string& name : qwalk::experiment_names()) {
        experiments.emplace_back(name, ExperimentFlags{});
    }
    for (auto& [name, flags] : experiments) {
        CLI::App* cmd = app.add_subcommand(name, "Run the " + name + " experiment");
        add_experiment_flags(cmd, flags);
    }

    // qwalk graph build line|lattice|double-slit / qwalk graph load FILE
    CLI::App* graph_cmd = app.add_subcommand("graph", "Build or load graph files");
    graph_cmd->require_subcommand(1);
    CLI::App* build_cmd = graph_cmd->add_subcommand("build", "Build a graph and write JSON");
    build_cmd->require_subcommand(1);

    int line_n = 100;
    std::string build_out;
    CLI::App* build_line_cmd = build_cmd->add_subcommand("line", "One-dimensional lattice");
    build_line_cmd->add_option("--n", line_n, "Vertex count");
    build_line_cmd->add_option("--out", build_out, "Output path (default: stdout)");

    int lattice_w = 20, lattice_h = 20;
    CLI::App* build_lattice_cmd = build_cmd->add_subcommand("lattice", "Two-dimensional lattice");
    build_lattice_cmd->add_option("--width", lattice_w, "Columns");
    build_lattice_cmd->add_option("--height", lattice_h, "Rows");
    build_lattice_cmd->add_option("--out", build_out, "Output path (default: stdout)");

    qwalk::DoubleSlitSpec slit_spec;
    std::string wall_rows_text, slit_cols_text;
    CLI::App* build_slit_cmd =
        build_cmd->add_subcommand("double-slit", "Lattice with a two-slit screen");
    build_slit_cmd->add_option("--width", slit_spec.width, "Columns");
    build_slit_cmd->add_option("--height", slit_spec.height, "Rows");
    build_slit_cmd->add_option("--wall-rows", wall_rows_text, "Wall rows as \"a,b\"");
    build_slit_cmd->add_option("--slit-cols", slit_cols_text, "Open columns as \"a,b;c,d\"");
    build_slit_cmd->add_option("--out", build_out, "Output path (default: stdout)");

    std::string load_path;
    CLI::App* load_cmd = graph_cmd->add_subcommand("load", "Load and validate a graph file");
    load_cmd->add_option("file", load_path, "Graph JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (auto& [name, flags] : experiments) {
            if (app.get_subcommand(name)->parsed()) {
                return run_named_experiment(name, flags);
            }
        }
        if (graph_cmd->parsed()) {
            if (load_cmd->parsed()) {
                const qwalk::PropertyGraph g = qwalk::load_graph(load_path);
                std::cout << "loaded: " << load_path << "\n"
                          << "vertices: " << g.vertex_count() << "\n"
                          << "edges: " << g.edge_count() << "\n";
                return kExitOk;
            }
            qwalk::PropertyGraph g;
            if (build_line_cmd->parsed()) {
                g = qwalk::build_line(line_n);
            } else if (build_lattice_cmd->parsed()) {
                g = qwalk::build_lattice(lattice_w, lattice_h);
            } else {
                if (!wall_rows_text.empty()) {
                    slit_spec.wall_rows = parse_int_pair(wall_rows_text, "--wall-rows");
                }
                if (!slit_cols_text.empty()) {
                    slit_spec.slit_columns = parse_slit_cols(slit_cols_text);
                }
                g = qwalk::build_double_slit(slit_spec);
            }
            if (build_out.empty()) {
                std::cout << qwalk::graph_to_json(g);
            } else {
                qwalk::save_graph(g, build_out);
                std::cout << "wrote: " << build_out << "\n";
            }
            return kExitOk;
        }
    } catch (const qwalk::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qwalk::IntegrityError& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const qwalk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qwalk::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qwalk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
