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

#include "qwalk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

namespace qwalk {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, ComplexScalar{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<ComplexScalar> entries)
    : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols) {
        throw ConfigError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                          " does not fill a " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

SpinVector ComplexMatrix::apply(const SpinVector& x) const {
    if (x.size() != cols_) {
        throw ConfigError("ComplexMatrix::apply: vector length " + std::to_string(x.size()) +
                          " does not match " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " matrix");
    }
    SpinVector y(rows_, ComplexScalar{0.0, 0.0});
    for (std::size_t r = 0; r < rows_; ++r) {
        ComplexScalar acc{0.0, 0.0};
        const ComplexScalar* row = data_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += row[c] * x[c];
        }
        y[r] = acc;
    }
    return y;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.at(c, r) = conjugate(at(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw ConfigError("ComplexMatrix::operator*: inner dimensions disagree");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const ComplexScalar v = at(r, k);
            if (v == ComplexScalar{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

double ComplexMatrix::max_deviation_from_unitary() const {
    // Accumulate G = A^dagger A sparsely: row k contributes
    // conj(A[k][i]) * A[k][j] for every pair of nonzero columns (i, j).
    std::unordered_map<std::uint64_t, ComplexScalar> gram;
    std::vector<std::pair<std::size_t, ComplexScalar>> row_nonzeros;
    for (std::size_t k = 0; k < rows_; ++k) {
        row_nonzeros.clear();
        const ComplexScalar* row = data_.data() + k * cols_;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c] != ComplexScalar{0.0, 0.0}) {
                row_nonzeros.emplace_back(c, row[c]);
            }
        }
        for (const auto& [i, vi] : row_nonzeros) {
            const ComplexScalar ci = conjugate(vi);
            for (const auto& [j, vj] : row_nonzeros) {
                gram[static_cast<std::uint64_t>(i) * cols_ + j] += ci * vj;
            }
        }
    }

    double dev = 0.0;
    for (const auto& [key, value] : gram) {
        const std::size_t i = static_cast<std::size_t>(key / cols_);
        const std::size_t j = static_cast<std::size_t>(key % cols_);
        const ComplexScalar expected = (i == j) ? ComplexScalar{1.0, 0.0} : ComplexScalar{0.0, 0.0};
        dev = std::max(dev, std::abs(value - expected));
    }
    // Diagonal entries with no accumulated product are 0 where I has 1.
    for (std::size_t i = 0; i < cols_; ++i) {
        if (gram.find(static_cast<std::uint64_t>(i) * cols_ + i) == gram.end()) {
            dev = std::max(dev, 1.0);
        }
    }
    return dev;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ConfigError("max_abs_difference: shape mismatch");
    }
    double dev = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            dev = std::max(dev, std::abs(a.at(r, c) - b.at(r, c)));
        }
    }
    return dev;
}

}  // namespace qwalk
