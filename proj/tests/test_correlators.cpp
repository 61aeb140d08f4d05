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

#include "tempcert/correlators.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tempcert/error.hpp"
#include "tempcert/random.hpp"

using namespace tempcert;
using L = ObservableLabel;

namespace {

std::size_t factorial(int k) {
    std::size_t out = 1;
    for (int m = 2; m <= k; ++m) {
        out *= static_cast<std::size_t>(m);
    }
    return out;
}

}  // namespace

TEST(correlators, induced_orderings_of_three) {
    std::vector<Ordering> a = induced_orderings({1, 2, 3});
    std::vector<Ordering> want_a{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}, {3, 2, 1}};
    EXPECT_EQ(a, want_a);
    std::vector<Ordering> b = induced_orderings({2, 1, 3});
    std::vector<Ordering> want_b{{2, 1, 3}, {2, 3, 1}, {1, 3, 2}, {3, 1, 2}};
    EXPECT_EQ(b, want_b);
    EXPECT_EQ(induced_orderings({0, 1, 2, 3, 4}).size(), 16U);
}

TEST(correlators, cover_for_three_is_the_known_pair) {
    std::vector<Ordering> want{{0, 1, 2}, {1, 0, 2}};
    EXPECT_EQ(permutation_cover(3), want);
}

TEST(correlators, covers_are_complete_and_not_below_the_minimum) {
    for (int k = 1; k <= kMaxCoverLength; ++k) {
        const std::vector<Ordering> &cover = permutation_cover(k);
        EXPECT_TRUE(covers_all_permutations(cover, k)) << k;
        if (k <= 6) {
            EXPECT_TRUE(oracle::covers(cover, k)) << k;
        }
        std::size_t lower = (factorial(k) + (std::size_t{1} << (k - 1)) - 1) >> (k - 1);
        EXPECT_GE(cover.size(), lower) << k;
        Ordering identity(static_cast<std::size_t>(k));
        for (int p = 0; p < k; ++p) {
            identity[static_cast<std::size_t>(p)] = p;
        }
        EXPECT_EQ(cover.front(), identity);
    }
    EXPECT_EQ(permutation_cover(4).size(), 3U);
    EXPECT_THROW(permutation_cover(0), Error);
    EXPECT_THROW(permutation_cover(kMaxCoverLength + 1), Error);
}

TEST(correlators, incomplete_cover_is_detected) {
    EXPECT_FALSE(covers_all_permutations({{0, 1, 2}}, 3));
    EXPECT_FALSE(covers_all_permutations({{0, 1, 1}, {1, 0, 2}}, 3));
}

TEST(correlators, seq_correlation_matches_ordering_sum) {
    Rng rng(2024);
    const std::vector<L> pool{L::a(1), L::b(1), L::a(2), L::n(1, 2)};
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.next_word() % 7);
        Realization r;
        r.n = 2;
        r.state = StateVector::Zero(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            r.state(k) = rng.complex_normal();
        }
        r.state.normalize();
        for (const L &l : pool) {
            r.observables[l] = random_involution(dim, rng);
        }
        int k = 1 + static_cast<int>(rng.next_word() % 4);
        SequenceCorrelator seq;
        std::vector<oracle::Mat> mats;
        for (int m = 0; m < k; ++m) {
            const L &l = pool[rng.next_word() % pool.size()];
            seq.push_back(l);
            mats.push_back(r.at(l));
        }
        ASSERT_NEAR(seq_correlation(r, seq), oracle::ordering_sum(mats, r.state), 1e-10) << trial;
    }
}

TEST(correlators, non_hermitian_input_is_a_numeric_error) {
    Realization r;
    r.n = 1;
    r.state = StateVector::Unit(2, 0);
    Operator m = Operator::Zero(2, 2);
    m(0, 0) = Complex(0, 1);
    r.observables[L::a(1)] = m;
    try {
        seq_correlation(r, {L::a(1)});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::numeric);
    }
    EXPECT_THROW(seq_correlation(r, {L::b(1)}), Error);
    EXPECT_THROW(seq_correlation(r, {}), Error);
}

TEST(correlators, pi_correlator_sorts_labels) {
    PiCorrelator pc = make_pi_correlator({L::n(1, 2), L::b(3), L::a(1), L::a(2)});
    EXPECT_EQ(pc.str(), "A1A2B3N12");
    EXPECT_EQ(pc.cover.size(), permutation_cover(4).size());
    EXPECT_EQ(pc.sequence(0), (SequenceCorrelator{L::a(1), L::a(2), L::b(3), L::n(1, 2)}));
    EXPECT_EQ(make_plain_correlator({L::b(1), L::a(1)}).cover.size(), 1U);
}

TEST(correlators, commuting_labels_have_no_ordering_spread) {
    Realization r = canonical_observables(3);
    std::vector<L> commuting{L::a(1), L::a(2), L::b(3), L::n(1, 2)};
    EXPECT_LT(ordering_spread(r, commuting), 1e-12);
    EXPECT_NEAR(pi_correlation(r, make_pi_correlator(commuting)), 1.0, 1e-12);
    EXPECT_NEAR(pi_correlation(r, make_plain_correlator(commuting)), 1.0, 1e-12);
    // A1 B1 N23 |G> = |G>, and swapping the anticommuting A1, B1 flips the sign.
    EXPECT_NEAR(ordering_spread(r, {L::a(1), L::b(1), L::n(2, 3)}), 2.0, 1e-12);
}
