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

#include "tempcert/numerics.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "tempcert/error.hpp"

namespace tempcert {
namespace {

void require_same_dims(const Operator &a, const Operator &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        fail(ErrorKind::dimension_mismatch, std::string(op) + ": operator dimensions differ (" +
                                                std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
    }
}

StateVector apply_nested_from(std::span<const Operator *const> ops, std::size_t first, const StateVector &v) {
    const Operator &head = *ops[first];
    if (first + 1 == ops.size()) {
        return head * v;
    }
    // {M, R} v = M (R v) + R (M v)
    StateVector tail = apply_nested_from(ops, first + 1, v);
    StateVector head_v = head * v;
    StateVector out = head * tail;
    out += apply_nested_from(ops, first + 1, head_v);
    return out;
}

}  // namespace

Operator commutator(const Operator &a, const Operator &b) {
    require_same_dims(a, b, "commutator");
    return a * b - b * a;
}

Operator anticommutator(const Operator &a, const Operator &b) {
    require_same_dims(a, b, "anticommutator");
    return a * b + b * a;
}

Operator nested_anticommutator(std::span<const Operator> ops) {
    if (ops.empty()) {
        fail(ErrorKind::invalid_argument, "nested_anticommutator: empty operator list");
    }
    Operator acc = ops.back();
    for (std::size_t k = ops.size() - 1; k-- > 0;) {
        acc = anticommutator(ops[k], acc);
    }
    return acc;
}

StateVector apply_nested_anticommutator(std::span<const Operator *const> ops, const StateVector &v) {
    if (ops.empty()) {
        fail(ErrorKind::invalid_argument, "apply_nested_anticommutator: empty operator list");
    }
    for (const Operator *op : ops) {
        if (op->rows() != v.size() || op->cols() != v.size()) {
            fail(ErrorKind::dimension_mismatch, "apply_nested_anticommutator: operator and vector dimensions differ");
        }
    }
    return apply_nested_from(ops, 0, v);
}

SubspaceBasis orthonormal_basis(std::span<const StateVector> vectors, double rank_tolerance) {
    if (vectors.empty()) {
        fail(ErrorKind::invalid_argument, "orthonormal_basis: no input vectors");
    }
    const Eigen::Index dim = vectors.front().size();
    double max_norm = 0.0;
    for (const StateVector &v : vectors) {
        if (v.size() != dim) {
            fail(ErrorKind::dimension_mismatch, "orthonormal_basis: vectors have different dimensions");
        }
        max_norm = std::max(max_norm, v.norm());
    }
    const double cut = rank_tolerance * max_norm;

    SubspaceBasis basis;
    basis.rank_tolerance = rank_tolerance;
    basis.residual_norms.reserve(vectors.size());
    std::vector<StateVector> kept;
    for (const StateVector &v : vectors) {
        StateVector r = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const StateVector &q : kept) {
                r -= q * q.dot(r);
            }
        }
        double norm = r.norm();
        basis.residual_norms.push_back(norm);
        if (norm > cut && norm > 0.0 && static_cast<Eigen::Index>(kept.size()) < dim) {
            kept.push_back(r / norm);
        }
    }
    basis.vectors.resize(dim, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t k = 0; k < kept.size(); ++k) {
        basis.vectors.col(static_cast<Eigen::Index>(k)) = kept[k];
    }
    return basis;
}

Operator project_operator(const Operator &op, const SubspaceBasis &basis) {
    if (op.rows() != basis.ambient_dim() || op.cols() != basis.ambient_dim()) {
        fail(ErrorKind::dimension_mismatch, "project_operator: operator does not act on the basis' ambient space");
    }
    return basis.vectors.adjoint() * op * basis.vectors;
}

double fidelity(const StateVector &v, const StateVector &w) {
    if (v.size() != w.size()) {
        fail(ErrorKind::dimension_mismatch, "fidelity: vector dimensions differ");
    }
    return std::norm(v.dot(w));
}

double hermiticity_residual(const Operator &op) {
    return (op - op.adjoint()).norm();
}

double involution_residual(const Operator &op) {
    if (op.rows() != op.cols()) {
        fail(ErrorKind::dimension_mismatch, "involution_residual: operator is not square");
    }
    return (op * op - Operator::Identity(op.rows(), op.cols())).norm();
}

Operator direct_sum(const Operator &a, const Operator &b) {
    Operator out = Operator::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

Operator exp_i_hermitian(const Operator &hermitian, double t) {
    Eigen::SelfAdjointEigenSolver<Operator> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::numeric, "exp_i_hermitian: eigendecomposition failed");
    }
    Eigen::VectorXcd phases(solver.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::polar(1.0, t * solver.eigenvalues()(k));
    }
    const Operator &vecs = solver.eigenvectors();
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

}  // namespace tempcert
