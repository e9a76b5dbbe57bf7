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

#include "qwalk/spin.hpp"

#include <string>

namespace qwalk {

SpinVector spin_merge(const SpinVector& a, const SpinVector& b) {
    if (a.size() != b.size()) {
        throw ConfigError("spin_merge: dimension mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
    }
    SpinVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

SpinVector spin_project(const SpinVector& a, const std::vector<int>& mask) {
    if (a.size() != mask.size()) {
        throw ConfigError("spin_project: mask length " + std::to_string(mask.size()) +
                          " does not match spin dimension " + std::to_string(a.size()));
    }
    SpinVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] * static_cast<double>(mask[i]);
    }
    return out;
}

SpinVector spin_reflect(const SpinVector& a, ReflectAxis axis) {
    if (axis.first >= a.size() || axis.second >= a.size()) {
        throw ConfigError("spin_reflect: axis index out of range for dimension " +
                          std::to_string(a.size()));
    }
    SpinVector out = a;
    std::swap(out[axis.first], out[axis.second]);
    return out;
}

double spin_norm_sq(const SpinVector& a) {
    double total = 0.0;
    for (const auto& c : a) {
        total += modulus_sq(c);
    }
    return total;
}

std::vector<int> one_hot_mask(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw ConfigError("one_hot_mask: index " + std::to_string(index) +
                          " out of range for dimension " + std::to_string(dim));
    }
    std::vector<int> mask(dim, 0);
    mask[index] = 1;
    return mask;
}

}  // namespace qwalk
