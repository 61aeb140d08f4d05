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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tempcert/inequalities.hpp"
#include "tempcert/model.hpp"

namespace tempcert {

struct Tolerances {
    /// Relation, algebra, and hatted-operator residuals; also 1 - fidelity.
    double relation = 1e-8;
    /// Relative rank cut for the invariant subspace.
    double rank = 1e-7;
    /// U A U^dagger = X, U B U^dagger = Z, U N U^dagger = +-XX..Z, U U^dagger = 1.
    double unitary = 1e-7;

    /// Defaults for inputs whose entries were produced by floating-point
    /// pipelines rather than exact construction.
    static Tolerances floating();
};

/// Residual ||(M_1 M_2 ... M_k - target)|psi>|| for each term of T_n, with the
/// product applied rightmost-first in written (label) order. Keys are the term
/// strings, e.g. "A1A2B3N12". `pairwise` carries the derived identities
/// A_iB_i = -B_iA_i = N_jk, A_i N_jk = -N_jk A_i = B_i, B_j N_jk = -N_jk B_j = -A_j
/// (all on |psi>).
struct RelationResiduals {
    std::map<std::string, double> relations;
    std::map<std::string, double> pairwise;
    double max() const;
};

/// ||[M,M']|psi>|| and ||{M,M'}|psi>|| for every pair of the commutation structure.
struct AlgebraResiduals {
    std::map<std::string, double> commutators;
    std::map<std::string, double> anticommutators;
    double max() const;
};

enum class PairRelation { commute, anticommute };

struct StructurePair {
    ObservableLabel first;
    ObservableLabel second;
    PairRelation relation;
    /// "[A1,A2]" or "{A1,B1}".
    std::string key() const;
};

/// The commutation/anticommutation structure the canonical observables obey:
/// [A_i,A_j], [A_i,B_j] (i != j), [B_i,B_j], [B_k,N_ij], [A_i,N_ij], [A_j,N_ij],
/// [N_ij,N_jk]; {A_i,B_i}, {A_k,N_ij}, {B_i,N_ij}, {B_j,N_ij}.
std::vector<StructurePair> commutation_structure(int n);

RelationResiduals relation_residuals(const Realization &realization);
AlgebraResiduals algebra_residuals(const Realization &realization);

/// Orthonormalized span of prod_{j in S} B_j |psi> over all subsets S, subsets
/// enumerated by binary counting (bit j-1 selects B_j) and products written in
/// ascending index order.
SubspaceBasis invariant_subspace(const Realization &realization, double rank_tolerance = 1e-7);

/// Span of {psi, A_1 psi, ..., A_n psi, B_1 psi, ..., B_n psi, A_1 B_1 psi}; for
/// n = 3 this is an alternative presentation of the same subspace.
SubspaceBasis a_product_subspace(const Realization &realization, double rank_tolerance = 1e-7);

/// Largest principal-angle sine between two subspaces (1 when ranks differ).
double subspace_distance(const SubspaceBasis &lhs, const SubspaceBasis &rhs);

struct HattedOperators {
    std::map<ObservableLabel, Operator> operators;
    /// ||(1 - P) M b|| maximized over basis vectors b, per label.
    std::map<std::string, double> invariance;
    std::map<std::string, double> hermiticity;
    std::map<std::string, double> involution;
    /// |tr M_hat|
    std::map<std::string, double> trace;
    std::map<std::string, double> commutators;
    std::map<std::string, double> anticommutators;
    double max() const;
};

HattedOperators hatted_operators(const Realization &realization, const SubspaceBasis &basis);

struct UnitaryExtraction {
    /// Unitary on subspace coordinates: row b is the joint eigenvector with
    /// Z-sign pattern b (big-endian, qubit 1 on the top bit).
    Operator unitary;
    /// U composed with the basis: maps the ambient space onto C^(2^n).
    Eigen::MatrixXcd isometry;
    std::map<std::string, int> nij_signs;
    std::map<std::string, double> a_residuals;
    std::map<std::string, double> b_residuals;
    std::map<std::string, double> n_residuals;
    double unitarity_residual = 0.0;
    /// ||A_i u_b - u_(b^i)|| maximized; nonzero when the phase propagation
    /// along different paths disagrees.
    double phase_loop_residual = 0.0;
    /// Largest | |lambda| - 1 | seen while splitting eigenspaces.
    double eigenvalue_residual = 0.0;
    double fidelity = 0.0;
};

/// Jointly diagonalizes the hatted B's, labels joint eigenvectors by sign
/// pattern, fixes phases (the all-plus vector has real positive overlap with
/// P psi; the rest follow A_1..A_n bit flips) and reports the resulting frame.
/// Throws ErrorKind::numeric ("subspace not of product form") when a joint
/// eigenspace is not one-dimensional.
UnitaryExtraction extract_unitary(int n, const std::map<ObservableLabel, Operator> &hatted,
                                  const SubspaceBasis &basis, const StateVector &psi);

struct CertificationReport {
    int n = 0;
    EvaluationReport evaluation;
    Tolerances tolerances;
    RelationResiduals relations;
    std::optional<AlgebraResiduals> algebra;
    std::optional<Eigen::Index> subspace_dim;
    std::vector<double> generator_singular_values;
    std::optional<double> a_span_distance;
    std::optional<HattedOperators> hatted;
    std::optional<UnitaryExtraction> unitary;
    bool passed = false;
    /// Stages run, in order.
    std::vector<std::string> stages;
    std::vector<std::string> failed_checks;
};

struct CertifyOptions {
    Tolerances tolerances;
    /// Stop at the first failing stage.
    bool short_circuit = true;
    unsigned workers = 1;
};

/// relations -> algebra -> subspace -> hatted -> unitary. Structural problems
/// (missing labels, dimension mismatch) throw; everything else is reported.
CertificationReport certify(const Realization &realization, const CertifyOptions &options = {});

}  // namespace tempcert
