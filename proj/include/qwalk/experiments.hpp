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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/classical.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Experiment names:
//   line-classical  bulk walk on the 100-vertex line (counts + normalized)
//   line-hadamard   Hadamard coin, initial spin [1,0]
//   line-balanced   symmetric walk: Hadamard coin, initial (1/sqrt2)[1,i]
//   line-bounded    Hadamard walk with boundary reflection, 100 steps
//   double-slit     Grover coin on the 20x20 slit lattice, 26 steps
//   setops-demo     frequency-spin listings on the fixture graph
//   reverse-check   50 forward + 50 reverse steps, recovery probability

struct IterationRecord {
    std::int64_t step = 0;
    std::map<VertexId, double> probabilities;
};

struct CountRecord {
    std::int64_t step = 0;
    std::map<VertexId, BigInt> counts;
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<IterationRecord> iterations;     // step 0 through the final step
    std::vector<CountRecord> count_iterations;   // classical experiments only
    std::map<VertexId, double> final_distribution;
    std::map<VertexId, BigInt> final_counts;     // classical experiments only
    std::vector<WalkState> states;               // recorded when requested
    std::string text_output;                     // setops-demo listings
    double duration_ms = 0.0;
    double max_norm_drift = 0.0;                 // max |sum p - 1| over all iterations
    bool integrity_ok = true;
    int lattice_width = 0;                       // nonzero for lattice experiments
    int lattice_height = 0;
};

struct ExperimentParams {
    int vertices = 100;                      // line length
    std::optional<int> steps;                // default: per experiment
    std::optional<std::string> coin;         // "hadamard" | "balanced-y" | "grover"
    std::optional<SpinVector> initial_spin;
    std::optional<VertexId> start;
    std::uint64_t seed = 0;
    int threads = 1;
    bool record_states = false;              // keep full per-step WalkStates
    DoubleSlitSpec slit = {};
};

ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params = {});

bool is_known_experiment(const std::string& name);
std::vector<std::string> experiment_names();

enum class OutputFormat { Csv, Json, Svg };

OutputFormat parse_output_format(const std::string& name);

/// Writes the report's final distribution: CSV "vertex,probability" with 12
/// decimal digits, a JSON document, or an SVG chart (line plot for line
/// graphs, grid heatmap for lattices — lighter cells carry higher
/// probability). Byte-deterministic for a fixed report.
void emit_distribution(const ExperimentReport& report, OutputFormat format,
                       const std::string& path);

/// Classical counts as exact decimal strings, CSV "vertex,count".
void emit_counts_csv(const ExperimentReport& report, const std::string& path);

/// Per-iteration wavefunction dumps, one JSON file per recorded state
/// (requires ExperimentParams::record_states).
void write_state_dumps(const ExperimentReport& report, const std::string& directory);

/// JSON for one wavefunction:
/// {"iteration": n, "entries": [{"vertex": v, "spin": [[re, im], ...]}...]},
/// entries sorted by vertex id.
std::string state_to_json(const WalkState& state);

struct CompareResult {
    bool pass = true;
    std::string message;  // first mismatch when pass is false
};

/// Checks a report against a golden table file (JSON). Exact rows compare
/// counts/fractions exactly (quantum probabilities at 1e-12); approx rows
/// compare within the tolerance stored in the file.
CompareResult compare_tables(const ExperimentReport& report, const std::string& golden_path);

}  // namespace qwalk
