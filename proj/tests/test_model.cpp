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

#include "tempcert/model.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tempcert/error.hpp"

using namespace tempcert;
using L = ObservableLabel;

TEST(model, label_strings) {
    EXPECT_EQ(L::a(1).str(), "A1");
    EXPECT_EQ(L::b(3).str(), "B3");
    EXPECT_EQ(L::n(2, 1).str(), "N12");
    EXPECT_EQ(L::n(3, 11).str(), "N3_11");
    EXPECT_EQ(L::parse("M31"), L::n(1, 3));
    EXPECT_EQ(L::parse("N3_11"), L::n(3, 11));
    EXPECT_EQ(L::parse("N11,3"), L::n(3, 11));
    EXPECT_EQ(L::parse("B12"), L::b(12));
    for (const char *bad : {"", "A", "Q1", "N1", "N123", "N22", "A0", "Bx"}) {
        EXPECT_THROW(L::parse(bad), Error) << bad;
    }
}

TEST(model, label_order) {
    std::vector<L> got = labels_for(3);
    std::vector<L> want{L::a(1), L::b(1), L::a(2), L::b(2), L::a(3), L::b(3), L::n(1, 2), L::n(1, 3), L::n(2, 3)};
    EXPECT_EQ(got, want);
    EXPECT_EQ(labels_for(6).size(), 27U);
}

TEST(model, graph_state_three_qubits) {
    StateVector g = graph_state(3);
    const double s = 1 / std::sqrt(8.0);
    const double signs[] = {1, 1, 1, -1, 1, -1, -1, -1};
    for (int b = 0; b < 8; ++b) {
        EXPECT_EQ(g(b).imag(), 0.0);
        EXPECT_EQ(g(b).real() > 0, signs[b] > 0) << b;
        EXPECT_NEAR(std::abs(g(b).real()), s, 1e-15) << b;
    }
}

TEST(model, graph_state_matches_pairwise_oracle) {
    for (int n = 3; n <= 6; ++n) {
        EXPECT_TRUE(graph_state(n).isApprox(oracle::graph_state(n), 1e-14)) << n;
    }
}

TEST(model, stabilizers_fix_the_graph_state) {
    for (int n = 3; n <= 5; ++n) {
        StabilizerSet s = stabilizer_generators(n);
        ASSERT_EQ(s.generators.size(), static_cast<std::size_t>(n));
        StateVector g = graph_state(n);
        for (const PauliString &gen : s.generators) {
            EXPECT_TRUE((to_dense(gen) * g).isApprox(g, 1e-13)) << gen.str();
        }
    }
    EXPECT_EQ(stabilizer_generators(3).generators[0].str(), "+XZZ");
    EXPECT_THROW(stabilizer_generators(2), Error);
}

TEST(model, canonical_paulis) {
    EXPECT_EQ(canonical_pauli(L::a(2), 4).str(), "+IXII");
    EXPECT_EQ(canonical_pauli(L::b(4), 4).str(), "+IIIZ");
    EXPECT_EQ(canonical_pauli(L::n(1, 3), 4).str(), "+XZXZ");
    Realization r = canonical_observables(3);
    EXPECT_EQ(r.observables.size(), 9U);
    EXPECT_NO_THROW(validate_realization(r));
}

TEST(model, validation_names_the_label) {
    Realization r = canonical_observables(3);
    r.observables[L::b(2)](0, 1) = 0.5;
    try {
        validate_realization(r);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::validation);
        EXPECT_NE(std::string(e.what()).find("B2"), std::string::npos) << e.what();
    }
    Realization s = canonical_observables(3);
    s.observables[L::a(1)] = Operator::Identity(4, 4);
    try {
        validate_realization(s);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
    }
    Realization t = canonical_observables(3);
    t.state *= 2.0;
    EXPECT_THROW(validate_realization(t), Error);
    EXPECT_THROW(Realization{}.at(L::a(1)), Error);
}

TEST(model, embedding_keeps_the_base_block) {
    Realization base = canonical_observables(3);
    Realization e = embed_realization(base, 8, 9);
    ASSERT_EQ(e.dim(), 16);
    EXPECT_NO_THROW(validate_realization(e));
    for (const auto &[label, op] : base.observables) {
        EXPECT_EQ(e.at(label).topLeftCorner(8, 8), op);
        EXPECT_TRUE(e.at(label).topRightCorner(8, 8).isZero());
    }
    EXPECT_TRUE(e.state.tail(8).isZero());
    Realization same = embed_realization(base, 0, 9);
    EXPECT_EQ(same.state, base.state);
    EXPECT_EQ(same.at(L::n(1, 2)), base.at(L::n(1, 2)));
}

TEST(model, perturbation_is_seeded_and_zero_is_exact) {
    Realization base = canonical_observables(3);
    Realization zero = perturb_realization(base, 0.0, 1);
    for (const auto &[label, op] : base.observables) {
        EXPECT_EQ(zero.at(label), op);
    }
    Realization p1 = perturb_realization(base, 0.1, 1);
    Realization p2 = perturb_realization(base, 0.1, 1);
    EXPECT_EQ(p1.at(L::a(1)), p2.at(L::a(1)));
    EXPECT_GT((p1.at(L::a(1)) - base.at(L::a(1))).norm(), 1e-3);
    EXPECT_NO_THROW(validate_realization(p1));
}

TEST(model, rotation_and_relabeling) {
    Realization base = canonical_observables(3);
    Realization r = rotate_realization(base, 4);
    EXPECT_NO_THROW(validate_realization(r));
    EXPECT_NEAR(r.state.dot(r.at(L::a(1)) * r.state).real(), base.state.dot(base.at(L::a(1)) * base.state).real(),
                1e-12);
    Realization q = relabel_qubits(base, {2, 3, 1});
    EXPECT_EQ(q.at(L::a(2)), base.at(L::a(1)));
    EXPECT_EQ(q.at(L::n(1, 2)), base.at(L::n(1, 3)));
    EXPECT_THROW(relabel_qubits(base, {1, 1, 2}), Error);
}

TEST(model, classical_realization_uses_scalars) {
    std::map<L, int> assignment;
    for (const L &l : labels_for(3)) {
        assignment[l] = l.kind == ObservableKind::B ? -1 : 1;
    }
    Realization c = classical_realization(3, assignment, 2);
    EXPECT_EQ(c.dim(), 2);
    EXPECT_EQ(c.at(L::b(1)), -Operator::Identity(2, 2));
    EXPECT_EQ(c.state(0), Complex(1, 0));
}
