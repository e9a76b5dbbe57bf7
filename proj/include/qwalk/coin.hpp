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

#include "qwalk/matrix.hpp"
#include "qwalk/spin.hpp"

namespace qwalk {

/// A coin is the small unitary applied to every traverser's spin before the
/// shift. Quantum-mode configurations require is_unitary at 1e-12.
using CoinOperator = ComplexMatrix;

/// Tolerance at which built-in coins and walk configurations must satisfy
/// max|C^dagger C - I| <= tol.
inline constexpr double kUnitarityTolerance = 1e-12;

/// 2x2 unbalanced coin (1/sqrt2) [[1, 1], [1, -1]].
CoinOperator make_hadamard();

/// 2x2 balanced coin (1/sqrt2) [[1, i], [i, 1]].
CoinOperator make_balanced_y();

/// 4x4 balanced coin (1/2) [[-1,1,1,1],[1,-1,1,1],[1,1,-1,1],[1,1,1,-1]];
/// flips the current trajectory and half-scales the others.
CoinOperator make_grover4();

CoinOperator make_identity_coin(std::size_t dim);

/// Matrix-vector product C * a; dimension mismatch is a configuration error.
SpinVector coin_apply(const CoinOperator& coin, const SpinVector& a);

/// Conjugate transpose; the inverse of a unitary coin.
CoinOperator coin_adjoint(const CoinOperator& coin);

/// True iff max|C^dagger C - I| <= tol.
bool is_unitary(const CoinOperator& coin, double tol);

}  // namespace qwalk
