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

#include "posthoc/densekit/dense.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>

namespace posthoc {

DenseMatrix to_dense(const Matrix2 &m) {
    DenseMatrix out(2, 2);
    out << m[0], m[1], m[2], m[3];
    return out;
}

namespace {

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void check_dim(size_t dim) {
    if (dim > kMaxDenseDim) {
        throw GuardError("dense matrix dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxDenseDim));
    }
}

}  // namespace

// P = i^{nY} X^x Z^z, so row b ^ x of column b holds i^{nY} (-1)^{|b & z|}.
DenseMatrix to_dense(const PauliString &p) {
    const size_t dim = size_t{1} << p.num_qubits();
    check_dim(dim);
    DenseMatrix out = DenseMatrix::Zero(dim, dim);
    const uint64_t x = p.x_mask();
    const uint64_t z = p.z_mask();
    Complex phase{1};
    for (int k = 0; k < p.y_weight(); k++) {
        phase *= Complex{0, 1};
    }
    for (size_t b = 0; b < dim; b++) {
        double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
        out(b ^ x, b) = p.coefficient() * sign * phase;
    }
    return out;
}

DenseMatrix to_dense(const PauliSum &sum, int num_qubits) {
    const size_t dim = size_t{1} << num_qubits;
    check_dim(dim);
    DenseMatrix out = DenseMatrix::Zero(dim, dim);
    for (const auto &term : sum) {
        if (term.num_qubits() != num_qubits) {
            throw std::invalid_argument("Pauli sum terms must share the register size");
        }
        out += to_dense(term);
    }
    return out;
}

DenseMatrix to_dense(const ProductObservable &obs) {
    check_dim(size_t{1} << obs.num_qubits());
    DenseMatrix out = DenseMatrix::Identity(1, 1);
    for (const auto &f : obs.factors()) {
        const size_t dim = size_t{1} << f.num_qubits();
        // Rotate the diagonal sign matrix back from the measurement frame: U^dagger D U.
        DenseMatrix u = DenseMatrix::Identity(dim, dim);
        for (size_t col = 0; col < dim; col++) {
            std::vector<Complex> v(dim, Complex{0});
            v[col] = 1;
            for (int q = 0; q < f.num_qubits(); q++) {
                kernels::rotate_to_basis(v, f.num_qubits(), q, f.basis());
            }
            for (size_t row = 0; row < dim; row++) {
                u(row, col) = v[row];
            }
        }
        DenseMatrix d = DenseMatrix::Zero(dim, dim);
        for (size_t w = 0; w < dim; w++) {
            d(w, w) = f.sign(static_cast<uint32_t>(w));
        }
        out = kron(out, u.adjoint() * d * u);
    }
    return out;
}

std::vector<double> eigs_dense(const DenseMatrix &h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("eigs_dense needs a square matrix");
    }
    check_dim(static_cast<size_t>(h.rows()));
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw GuardError("Hermitian eigensolve did not converge");
    }
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace posthoc
