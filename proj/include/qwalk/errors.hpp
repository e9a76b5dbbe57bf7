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

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base class for all qwalk errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid dimensions, invalid builder arguments, or an ill-formed walk configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Reference to a vertex that does not exist in the graph.
struct LookupError : Error {
    using Error::Error;
};

/// Operation applied in the wrong lifecycle phase (e.g. mutating a frozen graph).
struct StateError : Error {
    using Error::Error;
};

/// A quantum-mode movement label resolved to more than one target vertex.
struct AmbiguityError : Error {
    using Error::Error;
};

/// A traverser hit a missing edge under the `forbid` boundary policy.
struct BoundaryError : Error {
    using Error::Error;
};

/// A conserved quantity drifted outside its allowed bound.
struct IntegrityError : Error {
    using Error::Error;
};

/// Requested problem size exceeds what an operation supports.
struct CapabilityError : Error {
    using Error::Error;
};

/// Malformed input file (graph JSON, golden table).
struct ParseError : Error {
    using Error::Error;
};

/// A classical walker reached a vertex with no movement edges.
struct WalkError : Error {
    using Error::Error;
};

/// Filesystem write/read failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace qwalk
