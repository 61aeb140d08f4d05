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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <tuple>

#include "tempcert/error.hpp"

namespace tempcert {
namespace {

constexpr double kImaginaryTolerance = 1e-9;

std::size_t factorial(int k) {
    std::size_t out = 1;
    for (int m = 2; m <= k; ++m) {
        out *= static_cast<std::size_t>(m);
    }
    return out;
}

// Rank of a permutation of 0..k-1 in lexicographic order.
std::size_t lehmer_rank(const Ordering &perm) {
    const int k = static_cast<int>(perm.size());
    std::size_t rank = 0;
    for (int i = 0; i < k; ++i) {
        std::size_t smaller = 0;
        for (int j = i + 1; j < k; ++j) {
            if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) {
                ++smaller;
            }
        }
        rank = rank * static_cast<std::size_t>(k - i) + smaller;
    }
    return rank;
}

std::vector<Ordering> compute_cover(int k) {
    Ordering identity(static_cast<std::size_t>(k));
    std::iota(identity.begin(), identity.end(), 0);
    const std::vector<Ordering> patterns = induced_orderings(identity);

    std::vector<Ordering> candidates;
    Ordering perm = identity;
    do {
        candidates.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::size_t total = candidates.size();
    std::vector<char> covered(total, 0);
    std::size_t remaining = total;

    auto orderings_of = [&](const Ordering &candidate) {
        std::vector<std::size_t> ranks;
        ranks.reserve(patterns.size());
        Ordering mapped(candidate.size());
        for (const Ordering &pattern : patterns) {
            for (std::size_t p = 0; p < pattern.size(); ++p) {
                mapped[p] = candidate[static_cast<std::size_t>(pattern[p])];
            }
            ranks.push_back(lehmer_rank(mapped));
        }
        return ranks;
    };
    auto gain_of = [&](std::size_t index) {
        std::size_t gain = 0;
        for (std::size_t r : orderings_of(candidates[index])) {
            gain += covered[r] ? 0 : 1;
        }
        return gain;
    };

    // Lazy greedy. Gains only shrink, so a popped entry whose refreshed key still
    // beats the heap top is the true argmax; keys (gain, -index) make the
    // earliest candidate win ties.
    using Key = std::tuple<std::size_t, std::ptrdiff_t>;
    std::priority_queue<Key> heap;
    for (std::size_t c = 0; c < total; ++c) {
        heap.emplace(patterns.size(), -static_cast<std::ptrdiff_t>(c));
    }
    std::vector<Ordering> cover;
    while (remaining > 0 && !heap.empty()) {
        auto [stale, neg_index] = heap.top();
        heap.pop();
        auto index = static_cast<std::size_t>(-neg_index);
        Key fresh{gain_of(index), neg_index};
        if (std::get<0>(fresh) == 0) {
            continue;
        }
        if (!heap.empty() && fresh < heap.top()) {
            heap.push(fresh);
            continue;
        }
        for (std::size_t r : orderings_of(candidates[index])) {
            if (!covered[r]) {
                covered[r] = 1;
                --remaining;
            }
        }
        cover.push_back(candidates[index]);
    }
    return cover;
}

void collect_operators(const Realization &realization, const SequenceCorrelator &sequence,
                       std::vector<const Operator *> &out) {
    out.clear();
    for (const ObservableLabel &label : sequence) {
        const Operator &op = realization.at(label);
        if (op.rows() != realization.dim()) {
            fail(ErrorKind::dimension_mismatch, "observable " + label.str() + " does not match the state dimension");
        }
        out.push_back(&op);
    }
}

}  // namespace

std::vector<Ordering> induced_orderings(const Ordering &sequence) {
    if (sequence.empty()) {
        return {};
    }
    if (sequence.size() == 1) {
        return {sequence};
    }
    Ordering tail(sequence.begin() + 1, sequence.end());
    std::vector<Ordering> inner = induced_orderings(tail);
    std::vector<Ordering> out;
    out.reserve(inner.size() * 2);
    for (const Ordering &t : inner) {
        Ordering o;
        o.reserve(sequence.size());
        o.push_back(sequence.front());
        o.insert(o.end(), t.begin(), t.end());
        out.push_back(std::move(o));
    }
    for (const Ordering &t : inner) {
        Ordering o = t;
        o.push_back(sequence.front());
        out.push_back(std::move(o));
    }
    return out;
}

const std::vector<Ordering> &permutation_cover(int k) {
    if (k < 1 || k > kMaxCoverLength) {
        fail(ErrorKind::invalid_argument, "permutation_cover: k must be in 1.." + std::to_string(kMaxCoverLength) +
                                              ", got " + std::to_string(k));
    }
    static std::mutex mutex;
    static std::map<int, std::vector<Ordering>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache.emplace(k, compute_cover(k)).first;
    }
    return it->second;
}

bool covers_all_permutations(const std::vector<Ordering> &cover, int k) {
    if (k < 1) {
        return false;
    }
    std::vector<char> seen(factorial(k), 0);
    for (const Ordering &seq : cover) {
        if (static_cast<int>(seq.size()) != k) {
            return false;
        }
        Ordering check = seq;
        std::sort(check.begin(), check.end());
        for (int p = 0; p < k; ++p) {
            if (check[static_cast<std::size_t>(p)] != p) {
                return false;
            }
        }
        for (const Ordering &o : induced_orderings(seq)) {
            seen[lehmer_rank(o)] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

SequenceCorrelator PiCorrelator::sequence(std::size_t index) const {
    const Ordering &order = cover.at(index);
    SequenceCorrelator seq;
    seq.reserve(order.size());
    for (int p : order) {
        seq.push_back(labels.at(static_cast<std::size_t>(p)));
    }
    return seq;
}

std::string PiCorrelator::str() const {
    std::string out;
    for (const ObservableLabel &label : labels) {
        out += label.str();
    }
    return out;
}

PiCorrelator make_pi_correlator(std::vector<ObservableLabel> labels) {
    if (labels.empty()) {
        fail(ErrorKind::invalid_argument, "a correlator needs at least one label");
    }
    std::sort(labels.begin(), labels.end());
    PiCorrelator pc;
    pc.cover = permutation_cover(static_cast<int>(labels.size()));
    pc.labels = std::move(labels);
    return pc;
}

PiCorrelator make_plain_correlator(std::vector<ObservableLabel> labels) {
    if (labels.empty()) {
        fail(ErrorKind::invalid_argument, "a correlator needs at least one label");
    }
    std::sort(labels.begin(), labels.end());
    Ordering identity(labels.size());
    std::iota(identity.begin(), identity.end(), 0);
    PiCorrelator pc;
    pc.labels = std::move(labels);
    pc.cover.push_back(std::move(identity));
    return pc;
}

double seq_correlation(const Realization &realization, const SequenceCorrelator &sequence) {
    if (sequence.empty()) {
        fail(ErrorKind::invalid_argument, "seq_correlation: empty sequence");
    }
    std::vector<const Operator *> ops;
    collect_operators(realization, sequence, ops);
    StateVector w = apply_nested_anticommutator(ops, realization.state);
    Complex value = realization.state.dot(w) / std::ldexp(1.0, static_cast<int>(sequence.size()) - 1);
    if (std::abs(value.imag()) > kImaginaryTolerance) {
        fail(ErrorKind::numeric, "sequential correlation has imaginary part " + std::to_string(value.imag()) +
                                     " (non-Hermitian input?)");
    }
    return value.real();
}

double pi_correlation(const Realization &realization, const PiCorrelator &correlator) {
    if (correlator.cover.empty()) {
        fail(ErrorKind::invalid_argument, "pi_correlation: empty cover");
    }
    double sum = 0.0;
    for (std::size_t s = 0; s < correlator.cover.size(); ++s) {
        sum += seq_correlation(realization, correlator.sequence(s));
    }
    return sum / static_cast<double>(correlator.cover.size());
}

double ordering_spread(const Realization &realization, const std::vector<ObservableLabel> &labels) {
    if (labels.empty()) {
        return 0.0;
    }
    if (labels.size() > static_cast<std::size_t>(kMaxCoverLength)) {
        fail(ErrorKind::invalid_argument, "ordering_spread: too many labels");
    }
    std::vector<const Operator *> ops;
    collect_operators(realization, labels, ops);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const StateVector &psi = realization.state;
    // Builds M_s(1)...M_s(k)|psi> by choosing the rightmost factor first.
    auto visit = [&](auto &&self, unsigned remaining, const StateVector &v) -> void {
        if (remaining == 0) {
            double value = psi.dot(v).real();
            lo = std::min(lo, value);
            hi = std::max(hi, value);
            return;
        }
        for (std::size_t p = 0; p < ops.size(); ++p) {
            if (remaining & (1U << p)) {
                StateVector next = (*ops[p]) * v;
                self(self, remaining & ~(1U << p), next);
            }
        }
    };
    visit(visit, (1U << ops.size()) - 1, psi);
    return hi - lo;
}

}  // namespace tempcert
