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

#include <cstddef>
#include <vector>

#include "tempcert/model.hpp"

namespace tempcert {

/// A permutation of positions 0..k-1.
using Ordering = std::vector<int>;

/// Measurement sequence M_1 -> M_2 -> ... -> M_k.
using SequenceCorrelator = std::vector<ObservableLabel>;

/// Largest multiset size accepted by permutation_cover (k! grows quickly).
inline constexpr int kMaxCoverLength = 8;

/// The operator orderings produced by expanding {M_1,{M_2,...,{M_{k-1},M_k}}},
/// expressed over the positions of `sequence`:
///   orderings(s_1, T) = {s_1 . t : t in orderings(T)} u {t . s_1 : t in orderings(T)}.
/// Exactly 2^(k-1) orderings, listed in expansion order.
std::vector<Ordering> induced_orderings(const Ordering &sequence);

/// Deterministic set of sequences over positions 0..k-1 whose induced
/// orderings cover all k! permutations. Greedy set cover over candidate
/// sequences in lexicographic order, ties broken towards the earlier
/// candidate; the first sequence is the identity. Results are cached.
const std::vector<Ordering> &permutation_cover(int k);

/// A multiset of labels, kept sorted, with the sequences (orderings of its
/// positions) whose sequential correlations are averaged.
struct PiCorrelator {
    std::vector<ObservableLabel> labels;
    std::vector<Ordering> cover;

    /// Label sequence for cover entry `index`.
    SequenceCorrelator sequence(std::size_t index) const;
    std::string str() const;
};

/// Sorts the labels and attaches permutation_cover(k).
PiCorrelator make_pi_correlator(std::vector<ObservableLabel> labels);
/// Sorts the labels and uses the single identity sequence (a plain expectation
/// for commuting measurements).
PiCorrelator make_plain_correlator(std::vector<ObservableLabel> labels);

/// True when the union of induced orderings over `cover` is every permutation
/// of k positions.
bool covers_all_permutations(const std::vector<Ordering> &cover, int k);

/// (1/2^(k-1)) <psi| {M_1,{M_2,...}} |psi>. Throws missing_label, or numeric
/// when the imaginary part exceeds 1e-9.
double seq_correlation(const Realization &realization, const SequenceCorrelator &sequence);

/// Mean of seq_correlation over the cover.
double pi_correlation(const Realization &realization, const PiCorrelator &correlator);

/// max - min of Re <psi| M_s(1) ... M_s(k) |psi> over all k! orderings s of
/// the labels. Zero when the labels commute on the state.
double ordering_spread(const Realization &realization, const std::vector<ObservableLabel> &labels);

}  // namespace tempcert
