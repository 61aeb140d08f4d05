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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tempcert/numerics.hpp"
#include "tempcert/pauli.hpp"

namespace tempcert {

enum class ObservableKind : std::uint8_t { A = 0, B = 1, N = 2 };

/// Names one measurement: A_i, B_i, or N_{ij} (unordered; stored with i < j).
/// Qubit indices are 1-based. The three-qubit M_{ij} of the literature is N_{ij}.
///
/// Labels order by qubit position first (A_i/B_i sorted by i, A before B on the
/// same qubit) and N labels after all single-qubit labels, lexicographic in
/// (i, j). This is the order in which terms are written, e.g. A1 B2 A3 N13.
struct ObservableLabel {
    ObservableKind kind = ObservableKind::A;
    int i = 1;
    int j = 0;

    static ObservableLabel a(int qubit);
    static ObservableLabel b(int qubit);
    static ObservableLabel n(int first, int second);

    /// "A1", "B3", "N12"; pairs with an index >= 10 render as "N3_11".
    std::string str() const;
    /// Accepts the forms produced by str(), "M<i><j>" as an alias of N, and
    /// unsorted pairs ("N31" == "N13").
    static ObservableLabel parse(std::string_view text);

    bool operator==(const ObservableLabel &) const = default;
    std::strong_ordering operator<=>(const ObservableLabel &other) const;
};

/// The state and measurements under test.
struct Realization {
    int n = 0;
    StateVector state;
    std::map<ObservableLabel, Operator> observables;

    Eigen::Index dim() const {
        return state.size();
    }
    /// Throws ErrorKind::missing_label when absent.
    const Operator &at(const ObservableLabel &label) const;
    bool has(const ObservableLabel &label) const {
        return observables.count(label) != 0;
    }
};

struct ValidationTolerance {
    double operator_tol = 1e-8;
    double state_tol = 1e-10;
};

/// Checks dimensions, state normalization, and that every observable is a
/// Hermitian involution. Throws ErrorKind::validation naming the offending
/// label, or ErrorKind::dimension_mismatch.
void validate_realization(const Realization &realization, const ValidationTolerance &tol = {});

/// All 2n + C(n,2) labels for parameter n, in label order.
std::vector<ObservableLabel> labels_for(int n);

struct StabilizerSet {
    int n = 0;
    std::vector<PauliString> generators;
};

/// G_i = Z ... Z X_i Z ... Z for the complete graph on n >= 3 vertices.
StabilizerSet stabilizer_generators(int n);

/// Complete-graph state: CZ on every pair applied to |+>^n. The |0...0>
/// amplitude is real positive; big-endian basis (qubit 1 is the top bit).
StateVector graph_state(int n);

/// The Pauli string assigned to a label by the canonical realization:
/// A_i = X_i, B_i = Z_i, N_ij = X_i X_j (x) Z on every other qubit.
PauliString canonical_pauli(const ObservableLabel &label, int n);

/// graph_state(n) with the canonical observables.
Realization canonical_observables(int n);

/// state (+) 0 and M (+) J with J a seeded random Hermitian involution on the
/// extra block (a fresh J per observable, drawn in label order).
Realization embed_realization(const Realization &base, Eigen::Index extra_dim, std::uint64_t junk_seed);

/// Each observable conjugated by exp(i eps H) with its own seeded random
/// Hermitian H of unit Frobenius norm; the state is untouched. eps == 0 returns
/// an exact copy.
Realization perturb_realization(const Realization &base, double epsilon, std::uint64_t seed);

/// state -> U state and M -> U M U^dagger for one seeded Haar unitary U.
Realization rotate_realization(const Realization &base, std::uint64_t seed);

/// Consistent relabeling of qubit indices: label index q becomes perm[q-1].
Realization relabel_qubits(const Realization &base, const std::vector<int> &permutation);

/// Deterministic realization: every observable is value * identity on a
/// `dim`-dimensional space, the state is |0>.
Realization classical_realization(int n, const std::map<ObservableLabel, int> &assignment, Eigen::Index dim = 1);

}  // namespace tempcert
