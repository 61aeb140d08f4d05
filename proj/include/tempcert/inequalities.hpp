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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tempcert/correlators.hpp"

namespace tempcert {

enum class Flavor { noncontextual, temporal };

struct Term {
    std::int64_t coefficient = 0;
    PiCorrelator correlator;
};

/// sum_t c_t <labels_t>_pi <= eta_C <= eta_Q.
struct Inequality {
    int n = 0;
    Flavor flavor = Flavor::temporal;
    std::vector<Term> terms;
    std::int64_t classical_bound = 0;
    std::int64_t quantum_bound = 0;

    /// Distinct labels used by the terms, in label order.
    std::vector<ObservableLabel> labels() const;
};

struct BoundFormulas {
    std::int64_t eta_c = 0;
    std::int64_t eta_q = 0;
    std::int64_t alpha = 0;
};

/// eta_C = 2 alpha n + 2 C(n,3), eta_Q = 2 alpha n + 4 C(n,3), alpha = C(n-1,2).
BoundFormulas bound_formulas(int n);

/// The ten-term three-qubit temporal inequality, written term by term.
Inequality build_T3();
/// Its plain-expectation (non-contextuality) counterpart.
Inequality build_I3();

/// n-qubit temporal inequality. Terms are laid out as: the C(n,2) pair terms
/// (weight n-2, pairs in lexicographic order), the n single-A terms (weight
/// alpha_n), the C(n,3) triple-A terms (weight -1), then for each triple
/// i<j<k the pairs (N_ij,N_jk), (N_jk,N_ik), (N_ik,N_ij) (weight +1).
Inequality build_Tn(int n);
Inequality build_In(int n);

/// Largest number of labels classical_bound_bruteforce accepts.
inline constexpr std::size_t kMaxBruteForceLabels = 24;

struct BruteForceResult {
    std::int64_t value = 0;
    /// The first maximizing assignment in enumeration order (bit b of the
    /// enumeration index is the sign of label b; set bit = -1).
    std::map<ObservableLabel, int> argmax;
    std::size_t label_count = 0;
};

/// Exact max over all +-1 assignments, in integer arithmetic, split across
/// `workers` threads. Throws invalid_argument beyond kMaxBruteForceLabels.
BruteForceResult classical_bound_bruteforce(const Inequality &inequality, unsigned workers = 1);

struct EvaluationReport {
    double total = 0.0;
    std::vector<double> term_values;
    std::int64_t classical_bound = 0;
    std::int64_t quantum_bound = 0;
    double deficit = 0.0;
    bool violated = false;
    /// Non-contextuality flavor only: largest over-orderings spread of any term.
    std::optional<double> max_ordering_spread;
};

/// Evaluates every term on the realization; terms may run on `workers`
/// threads, the total is summed in term order.
EvaluationReport evaluate(const Inequality &inequality, const Realization &realization, unsigned workers = 1);

/// Structural equality: same multiset of (coefficient, sorted labels).
bool same_terms(const Inequality &lhs, const Inequality &rhs);

std::string flavor_name(Flavor flavor);

}  // namespace tempcert
