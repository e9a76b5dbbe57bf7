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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qwalk/spin.hpp"

namespace qwalk {

/// Row-major dense complex matrix. Coins are 2x2/4x4; the dense evolution
/// operator of a whole walk reaches |V| * dim per side.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<ComplexScalar> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ComplexScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const ComplexScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Standard matrix-vector product.
    SpinVector apply(const SpinVector& x) const;

    /// Conjugate transpose.
    ComplexMatrix adjoint() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

    /// Largest |entry| of (A^dagger A - I). Exploits sparsity row by row, so
    /// the check stays cheap for the shift-style operators that have only a
    /// handful of nonzeros per row; the result covers every entry exactly.
    double max_deviation_from_unitary() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ComplexScalar> data_;
};

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qwalk
