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

#include "tempcert/certify.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "tempcert/error.hpp"
#include "tempcert/fixtures.hpp"

using namespace tempcert;
using L = ObservableLabel;

namespace {

double max_of(const std::map<std::string, double> &m) {
    double out = 0;
    for (const auto &[k, v] : m) {
        out = std::max(out, v);
    }
    return out;
}

std::vector<double> spectrum(const Operator &op) {
    Eigen::SelfAdjointEigenSolver<Operator> s(op);
    std::vector<double> out(s.eigenvalues().data(), s.eigenvalues().data() + s.eigenvalues().size());
    return out;
}

}  // namespace

TEST(certify, structure_matches_canonical_paulis) {
    for (int n = 3; n <= 5; ++n) {
        std::vector<StructurePair> pairs = commutation_structure(n);
        EXPECT_FALSE(pairs.empty());
        for (const StructurePair &p : pairs) {
            bool c = commutes(canonical_pauli(p.first, n), canonical_pauli(p.second, n));
            EXPECT_EQ(c, p.relation == PairRelation::commute) << p.key();
        }
    }
    EXPECT_EQ(commutation_structure(3).front().key(), "[A1,A2]");
}

TEST(certify, relation_counts_and_canonical_zeros) {
    RelationResiduals r3 = relation_residuals(canonical_observables(3));
    EXPECT_EQ(r3.relations.size(), 10U);
    EXPECT_LT(r3.max(), 1e-12);
    EXPECT_TRUE(r3.relations.count("A1A2A3"));
    EXPECT_TRUE(r3.pairwise.count("A1B1=N23"));
    EXPECT_TRUE(r3.pairwise.count("B2N23=-A2"));
    RelationResiduals r4 = relation_residuals(canonical_observables(4));
    EXPECT_EQ(r4.relations.size(), 26U);
    EXPECT_LT(r4.max(), 1e-12);
}

TEST(certify, algebra_is_exact_at_the_canonical_point) {
    AlgebraResiduals a = algebra_residuals(canonical_observables(3));
    EXPECT_EQ(a.max(), 0.0);
    AlgebraResiduals rotated = algebra_residuals(rotate_realization(canonical_observables(3), 17));
    EXPECT_LT(rotated.max(), 1e-10);
}

TEST(certify, perturbed_residuals) {
    Realization p = perturb_realization(canonical_observables(3), 0.1, perturb_seed(kDefaultSeed, 3));
    RelationResiduals r = relation_residuals(p);
    // Frozen from an independent dense evaluation of the same realization.
    EXPECT_NEAR(max_of(r.relations), 0.11352998175707539, 1e-12);
    EXPECT_GT(algebra_residuals(p).max(), 0.0);
}

TEST(certify, invariant_subspace_dimensions) {
    Realization c = canonical_observables(3);
    SubspaceBasis b = invariant_subspace(c);
    EXPECT_EQ(b.rank(), 8);
    Realization e = embed_realization(c, 8, 5);
    SubspaceBasis be = invariant_subspace(e);
    EXPECT_EQ(be.rank(), 8);
    EXPECT_EQ(be.ambient_dim(), 16);
    EXPECT_LT(subspace_distance(b, a_product_subspace(c)), 1e-7);
    EXPECT_LT(subspace_distance(be, a_product_subspace(e)), 1e-7);

    Realization product = c;
    product.state = StateVector::Unit(8, 0);
    EXPECT_EQ(invariant_subspace(product).rank(), 1);
    EXPECT_EQ(subspace_distance(invariant_subspace(product), b), 1.0);
}

TEST(certify, hatted_operators_at_the_canonical_point) {
    Realization c = canonical_observables(3);
    HattedOperators h = hatted_operators(c, invariant_subspace(c));
    EXPECT_LT(h.max(), 1e-10);
    for (const auto &[label, op] : h.operators) {
        std::vector<double> s = spectrum(op);
        auto minus = std::count_if(s.begin(), s.end(), [](double x) { return x < 0; });
        EXPECT_EQ(minus, 4) << label.str();
    }
    Realization e = embed_realization(c, 8, 5);
    HattedOperators he = hatted_operators(e, invariant_subspace(e));
    EXPECT_LT(he.max(), 1e-10);
    for (const auto &[label, op] : h.operators) {
        std::vector<double> a = spectrum(op);
        std::vector<double> b = spectrum(he.operators.at(label));
        for (std::size_t k = 0; k < a.size(); ++k) {
            EXPECT_NEAR(a[k], b[k], 1e-10);
        }
    }
}

TEST(certify, unitary_is_diagonal_at_the_canonical_point) {
    Realization c = canonical_observables(3);
    SubspaceBasis b = invariant_subspace(c);
    HattedOperators h = hatted_operators(c, b);
    UnitaryExtraction u = extract_unitary(3, h.operators, b, c.state);
    Operator iso = u.isometry;
    for (Eigen::Index r = 0; r < 8; ++r) {
        for (Eigen::Index k = 0; k < 8; ++k) {
            EXPECT_NEAR(std::abs(iso(r, k)), r == k ? 1.0 : 0.0, 1e-10);
        }
    }
    EXPECT_LT(u.unitarity_residual, 1e-9);
    EXPECT_LT(u.phase_loop_residual, 1e-9);
    EXPECT_NEAR(u.fidelity, 1.0, 1e-12);
    for (const auto &[k, s] : u.nij_signs) {
        EXPECT_EQ(s, 1) << k;
    }
}

TEST(certify, degenerate_joint_eigenspace_is_rejected) {
    Realization c = canonical_observables(3);
    SubspaceBasis b = invariant_subspace(c);
    std::map<L, Operator> ops = hatted_operators(c, b).operators;
    ops[L::b(2)] = Operator::Identity(8, 8);
    try {
        extract_unitary(3, ops, b, c.state);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::numeric);
        EXPECT_NE(std::string(e.what()).find("subspace not of product form"), std::string::npos);
    }
}

TEST(certify, canonical_passes) {
    for (int n = 3; n <= 5; ++n) {
        CertificationReport r = certify(canonical_observables(n));
        EXPECT_TRUE(r.passed) << n;
        EXPECT_EQ(r.subspace_dim.value_or(0), Eigen::Index{1} << n);
        ASSERT_TRUE(r.unitary.has_value());
        EXPECT_GE(r.unitary->fidelity, 1 - 1e-9);
        EXPECT_EQ(r.stages.size(), 5U);
        EXPECT_TRUE(r.failed_checks.empty());
        EXPECT_NEAR(r.evaluation.total, static_cast<double>(bound_formulas(n).eta_q), 1e-9);
    }
}

TEST(certify, invariant_under_rotation_embedding_and_relabeling) {
    Realization c = canonical_observables(4);
    double base = certify(c).unitary->fidelity;
    for (const Realization &r : {rotate_realization(c, 31), embed_realization(c, 8, 32),
                                 rotate_realization(embed_realization(c, 8, 33), 34), relabel_qubits(c, {3, 1, 4, 2})}) {
        CertificationReport rep = certify(r);
        EXPECT_TRUE(rep.passed);
        ASSERT_TRUE(rep.unitary.has_value());
        EXPECT_NEAR(rep.unitary->fidelity, base, 1e-8);
    }
}

TEST(certify, negated_pair_observable_fails) {
    Realization c = canonical_observables(3);
    c.observables[L::n(1, 2)] *= -1.0;
    CertificationReport short_run = certify(c);
    EXPECT_FALSE(short_run.passed);
    EXPECT_EQ(short_run.stages.back(), "relations");

    CertifyOptions all;
    all.short_circuit = false;
    CertificationReport full = certify(c, all);
    EXPECT_FALSE(full.passed);
    ASSERT_TRUE(full.unitary.has_value());
    EXPECT_EQ(full.unitary->nij_signs.at("N12"), -1);
    EXPECT_EQ(full.unitary->nij_signs.at("N13"), 1);
    EXPECT_EQ(full.unitary->nij_signs.at("N23"), 1);
}

TEST(certify, negative_controls) {
    Realization p = perturb_realization(canonical_observables(3), 0.1, perturb_seed(kDefaultSeed, 3));
    CertificationReport rp = certify(p);
    EXPECT_FALSE(rp.passed);
    EXPECT_GT(max_of(rp.relations.relations), 1e-3);
    EXPECT_FALSE(rp.failed_checks.empty());

    Realization product = canonical_observables(3);
    product.state = StateVector::Unit(8, 0);
    CertifyOptions all;
    all.short_circuit = false;
    CertificationReport rs = certify(product, all);
    EXPECT_FALSE(rs.passed);
    EXPECT_GT(max_of(rs.relations.relations), 0.1);
    EXPECT_LT(rs.subspace_dim.value_or(8), 8);

    std::map<L, int> ones;
    for (const L &l : labels_for(3)) {
        ones[l] = 1;
    }
    EXPECT_FALSE(certify(classical_realization(3, ones, 4), all).passed);
}

TEST(certify, structural_errors_throw) {
    Realization c = canonical_observables(3);
    c.observables.erase(L::b(3));
    EXPECT_THROW(certify(c), Error);
    EXPECT_THROW(relation_residuals(c), Error);
}

TEST(certify, floating_tolerances) {
    Tolerances f = Tolerances::floating();
    EXPECT_EQ(f.relation, 1e-6);
    EXPECT_EQ(f.rank, 1e-7);
    // A perturbation far below the floating tolerance still certifies.
    Realization p = perturb_realization(canonical_observables(3), 1e-9, 4);
    CertifyOptions o;
    o.tolerances = f;
    EXPECT_TRUE(certify(p, o).passed);
}
