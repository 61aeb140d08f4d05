// Copyright 2026 The tempcert Authors
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
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tempcert {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Orthonormal basis of a subspace, stored as the columns of `vectors`.
struct SubspaceBasis {
    Eigen::MatrixXcd vectors;
    double rank_tolerance = 1e-7;
    /// Residual norm of each input vector after projecting out the basis built
    /// from its predecessors, in input order. Kept vectors are those above the cut.
    std::vector<double> residual_norms;

    Eigen::Index ambient_dim() const {
        return vectors.rows();
    }
    Eigen::Index rank() const {
        return vectors.cols();
    }
    /// Orthogonal projector onto the subspace, in the ambient space.
    Operator projector() const {
        return vectors * vectors.adjoint();
    }
};

Operator commutator(const Operator &a, const Operator &b);
Operator anticommutator(const Operator &a, const Operator &b);

/// Right-nested anticommutator {M1,{M2,...,{M_{k-1},M_k}}}; a single operator is
/// returned unchanged.
Operator nested_anticommutator(std::span<const Operator> ops);

/// The same nested anticommutator applied to `v` without forming the matrix:
/// 2^(k-1)-ish matrix-vector products of size d^2 each.
StateVector apply_nested_anticommutator(std::span<const Operator *const> ops, const StateVector &v);

/// Two-pass Gram-Schmidt in input order. A vector is dropped when its residual
/// norm is at most rank_tolerance times the largest input norm.
SubspaceBasis orthonormal_basis(std::span<const StateVector> vectors, double rank_tolerance = 1e-7);

/// Compression <b_i|M|b_j> of an operator onto the basis (k x k).
Operator project_operator(const Operator &op, const SubspaceBasis &basis);

/// |<v|w>|^2.
double fidelity(const StateVector &v, const StateVector &w);

/// ||M - M^dagger||_F
double hermiticity_residual(const Operator &op);
/// ||M^2 - 1||_F
double involution_residual(const Operator &op);

/// Block-diagonal a (+) b.
Operator direct_sum(const Operator &a, const Operator &b);

/// exp(i * t * H) for Hermitian H.
Operator exp_i_hermitian(const Operator &hermitian, double t);

}  // namespace tempcert
