// Copyright 2026 The posthoc Authors
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

#ifndef POSTHOC_DENSEKIT_DENSE_H
#define POSTHOC_DENSEKIT_DENSE_H

#include <Eigen/Dense>
#include <vector>

#include "posthoc/densekit/product_observable.h"

namespace posthoc {

using DenseMatrix = Eigen::MatrixXcd;

/// Largest dimension accepted by the dense helpers (12 qubits).
inline constexpr size_t kMaxDenseDim = size_t{1} << 12;

DenseMatrix to_dense(const Matrix2 &m);
DenseMatrix to_dense(const PauliString &p);
DenseMatrix to_dense(const PauliSum &sum, int num_qubits);
DenseMatrix to_dense(const ProductObservable &obs);

/// Ascending spectrum of a Hermitian matrix. Throws GuardError above kMaxDenseDim.
std::vector<double> eigs_dense(const DenseMatrix &h);

}  // namespace posthoc

#endif
