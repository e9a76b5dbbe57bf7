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

#include "qwalk/coin.hpp"

#include <cmath>
#include <string>

namespace qwalk {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

CoinOperator make_hadamard() {
    const double h = kInvSqrt2;
    return ComplexMatrix(2, 2, {h, h, h, -h});
}

CoinOperator make_balanced_y() {
    const double h = kInvSqrt2;
    const ComplexScalar hi{0.0, h};
    return ComplexMatrix(2, 2, {ComplexScalar{h, 0.0}, hi, hi, ComplexScalar{h, 0.0}});
}

CoinOperator make_grover4() {
    ComplexMatrix r(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            r.at(i, j) = (i == j) ? -0.5 : 0.5;
        }
    }
    return r;
}

CoinOperator make_identity_coin(std::size_t dim) {
    return ComplexMatrix::identity(dim);
}

SpinVector coin_apply(const CoinOperator& coin, const SpinVector& a) {
    if (coin.rows() != coin.cols() || coin.cols() != a.size()) {
        throw ConfigError("coin_apply: coin is " + std::to_string(coin.rows()) + "x" +
                          std::to_string(coin.cols()) + " but spin dimension is " +
                          std::to_string(a.size()));
    }
    return coin.apply(a);
}

CoinOperator coin_adjoint(const CoinOperator& coin) {
    return coin.adjoint();
}

bool is_unitary(const CoinOperator& coin, double tol) {
    if (tol <= 0.0) {
        throw ConfigError("is_unitary: tolerance must be positive");
    }
    if (coin.rows() != coin.cols()) {
        return false;
    }
    return coin.max_deviation_from_unitary() <= tol;
}

}  // namespace qwalk
