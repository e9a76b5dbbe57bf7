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

#include <complex>
#include <cstddef>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

// One complex amplitude a + bi, stored as a pair of IEEE doubles.
using ComplexScalar = std::complex<double>;

// A traverser's spin sack: one complex amplitude per traversal branch.
// The branch count (dim) is fixed per walk configuration.
using SpinVector = std::vector<ComplexScalar>;

inline ComplexScalar conjugate(ComplexScalar c) {
    return {c.real(), -c.imag()};
}

/// |c|^2 = a^2 + b^2, computed without the sqrt/square round trip of abs().
inline double modulus_sq(ComplexScalar c) {
    return c.real() * c.real() + c.imag() * c.imag();
}

inline bool is_finite(ComplexScalar c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

/// A pairwise component swap, the unitary applied when a traverser reflects
/// off a missing edge ("lr" swaps 0<->1, "ud" swaps 2<->3).
struct ReflectAxis {
    std::size_t first = 0;
    std::size_t second = 1;
};

inline constexpr ReflectAxis kAxisLeftRight{0, 1};
inline constexpr ReflectAxis kAxisUpDown{2, 3};

/// Pairwise complex vector addition: the interference rule applied when two
/// traversers merge at the same vertex.
SpinVector spin_merge(const SpinVector& a, const SpinVector& b);

/// Componentwise product with a 0/1 mask; forces a child traverser's spin
/// toward a basis state before it moves along its branch.
SpinVector spin_project(const SpinVector& a, const std::vector<int>& mask);

/// Swaps the two designated components; self-inverse.
SpinVector spin_reflect(const SpinVector& a, ReflectAxis axis);

/// Sum of component modulus-squares. The probability weight of a traverser.
double spin_norm_sq(const SpinVector& a);

/// Mask selecting exactly one component.
std::vector<int> one_hot_mask(std::size_t dim, std::size_t index);

}  // namespace qwalk
