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

#include "tempcert/inequalities.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <thread>

#include "tempcert/config.hpp"
#include "tempcert/error.hpp"

namespace tempcert {
namespace {

using L = ObservableLabel;

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t out = 1;
    for (int m = 1; m <= k; ++m) {
        out = out * (n - k + m) / m;
    }
    return out;
}

void require_range(int n, const char *op) {
    if (n < 3) {
        fail(ErrorKind::invalid_argument, std::string(op) + ": n must be at least 3, got " + std::to_string(n));
    }
    if (static_cast<std::size_t>(n) > dense_limit()) {
        fail(ErrorKind::invalid_argument, std::string(op) + ": n = " + std::to_string(n) +
                                              " exceeds the dense limit of " + std::to_string(dense_limit()));
    }
}

// A on the qubits in `a_set`, B on every other qubit, plus `extra`.
std::vector<L> a_b_string(int n, std::initializer_list<int> a_set, std::vector<L> extra = {}) {
    std::vector<L> out;
    for (int q = 1; q <= n; ++q) {
        bool is_a = std::find(a_set.begin(), a_set.end(), q) != a_set.end();
        out.push_back(is_a ? L::a(q) : L::b(q));
    }
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

Inequality build_family(int n, Flavor flavor) {
    require_range(n, flavor == Flavor::temporal ? "build_Tn" : "build_In");
    auto make = flavor == Flavor::temporal ? make_pi_correlator : make_plain_correlator;
    const BoundFormulas bounds = bound_formulas(n);
    Inequality ineq;
    ineq.n = n;
    ineq.flavor = flavor;
    ineq.classical_bound = bounds.eta_c;
    ineq.quantum_bound = bounds.eta_q;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            ineq.terms.push_back({n - 2, make(a_b_string(n, {i, j}, {L::n(i, j)}))});
        }
    }
    for (int i = 1; i <= n; ++i) {
        ineq.terms.push_back({bounds.alpha, make(a_b_string(n, {i}))});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                ineq.terms.push_back({-1, make(a_b_string(n, {i, j, k}))});
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                ineq.terms.push_back({1, make({L::n(i, j), L::n(j, k)})});
                ineq.terms.push_back({1, make({L::n(j, k), L::n(i, k)})});
                ineq.terms.push_back({1, make({L::n(i, k), L::n(i, j)})});
            }
        }
    }
    return ineq;
}

Inequality build_three(Flavor flavor) {
    auto make = flavor == Flavor::temporal ? make_pi_correlator : make_plain_correlator;
    Inequality ineq;
    ineq.n = 3;
    ineq.flavor = flavor;
    ineq.classical_bound = 8;
    ineq.quantum_bound = 10;
    auto add = [&](std::int64_t c, std::vector<L> labels) { ineq.terms.push_back({c, make(std::move(labels))}); };
    add(1, {L::a(1), L::a(2), L::b(3), L::n(1, 2)});
    add(1, {L::a(3), L::a(1), L::b(2), L::n(3, 1)});
    add(1, {L::a(2), L::a(3), L::b(1), L::n(2, 3)});
    add(1, {L::a(1), L::b(2), L::b(3)});
    add(1, {L::b(1), L::a(2), L::b(3)});
    add(1, {L::b(1), L::b(2), L::a(3)});
    add(-1, {L::a(1), L::a(2), L::a(3)});
    add(1, {L::n(2, 3), L::n(3, 1)});
    add(1, {L::n(3, 1), L::n(1, 2)});
    add(1, {L::n(2, 3), L::n(1, 2)});
    return ineq;
}

}  // namespace

std::vector<ObservableLabel> Inequality::labels() const {
    std::set<ObservableLabel> unique;
    for (const Term &t : terms) {
        unique.insert(t.correlator.labels.begin(), t.correlator.labels.end());
    }
    return {unique.begin(), unique.end()};
}

BoundFormulas bound_formulas(int n) {
    if (n < 3) {
        fail(ErrorKind::invalid_argument, "bound_formulas: n must be at least 3, got " + std::to_string(n));
    }
    BoundFormulas out;
    out.alpha = binomial(n - 1, 2);
    out.eta_c = 2 * out.alpha * n + 2 * binomial(n, 3);
    out.eta_q = 2 * out.alpha * n + 4 * binomial(n, 3);
    return out;
}

Inequality build_T3() {
    return build_three(Flavor::temporal);
}

Inequality build_I3() {
    return build_three(Flavor::noncontextual);
}

Inequality build_Tn(int n) {
    return build_family(n, Flavor::temporal);
}

Inequality build_In(int n) {
    return build_family(n, Flavor::noncontextual);
}

BruteForceResult classical_bound_bruteforce(const Inequality &inequality, unsigned workers) {
    const std::vector<ObservableLabel> labels = inequality.labels();
    if (labels.size() > kMaxBruteForceLabels) {
        fail(ErrorKind::invalid_argument, "classical_bound_bruteforce: " + std::to_string(labels.size()) +
                                              " labels exceeds the limit of " +
                                              std::to_string(kMaxBruteForceLabels));
    }
    // Each term's value under assignment bits s is c * (-1)^popcount(s & mask);
    // repeated labels cancel in the mask.
    struct Packed {
        std::int64_t coefficient;
        std::uint32_t mask;
    };
    std::vector<Packed> packed;
    for (const Term &t : inequality.terms) {
        std::uint32_t mask = 0;
        for (const ObservableLabel &l : t.correlator.labels) {
            auto pos = std::lower_bound(labels.begin(), labels.end(), l) - labels.begin();
            mask ^= std::uint32_t{1} << pos;
        }
        packed.push_back({t.coefficient, mask});
    }

    const std::uint64_t total = std::uint64_t{1} << labels.size();
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    struct Best {
        std::int64_t value = std::numeric_limits<std::int64_t>::min();
        std::uint64_t index = 0;
    };
    std::vector<Best> best(workers);
    auto scan = [&](unsigned w) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        Best local;
        for (std::uint64_t s = begin; s < end; ++s) {
            std::int64_t value = 0;
            auto bits = static_cast<std::uint32_t>(s);
            for (const Packed &p : packed) {
                value += (std::popcount(bits & p.mask) & 1) ? -p.coefficient : p.coefficient;
            }
            if (value > local.value) {
                local = {value, s};
            }
        }
        best[w] = local;
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(scan, w);
        }
        for (std::thread &t : threads) {
            t.join();
        }
    }
    // Chunks are in index order, so the first strict maximum is the earliest.
    Best winner = best.front();
    for (const Best &b : best) {
        if (b.value > winner.value) {
            winner = b;
        }
    }
    BruteForceResult result;
    result.value = winner.value;
    result.label_count = labels.size();
    for (std::size_t b = 0; b < labels.size(); ++b) {
        result.argmax[labels[b]] = ((winner.index >> b) & 1U) ? -1 : 1;
    }
    return result;
}

EvaluationReport evaluate(const Inequality &inequality, const Realization &realization, unsigned workers) {
    for (const ObservableLabel &label : inequality.labels()) {
        const Operator &op = realization.at(label);
        if (op.rows() != realization.dim() || op.cols() != realization.dim()) {
            fail(ErrorKind::dimension_mismatch, "observable " + label.str() + " does not match the state dimension");
        }
    }
    const std::size_t count = inequality.terms.size();
    const bool plain = inequality.flavor == Flavor::noncontextual;
    std::vector<double> values(count, 0.0);
    std::vector<double> spreads(count, 0.0);
    auto run = [&](std::size_t t) {
        values[t] = pi_correlation(realization, inequality.terms[t].correlator);
        if (plain) {
            spreads[t] = ordering_spread(realization, inequality.terms[t].correlator.labels);
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t t = 0; t < count; ++t) {
            run(t);
        }
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    for (std::size_t t = w; t < count; t += workers) {
                        run(t);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread &t : threads) {
            t.join();
        }
        for (const std::exception_ptr &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    EvaluationReport report;
    report.classical_bound = inequality.classical_bound;
    report.quantum_bound = inequality.quantum_bound;
    report.term_values.resize(count);
    for (std::size_t t = 0; t < count; ++t) {
        report.term_values[t] = values[t];
        report.total += static_cast<double>(inequality.terms[t].coefficient) * values[t];
    }
    report.deficit = static_cast<double>(inequality.quantum_bound) - report.total;
    report.violated = report.total > static_cast<double>(inequality.classical_bound) + 1e-9;
    if (plain) {
        report.max_ordering_spread = count == 0 ? 0.0 : *std::max_element(spreads.begin(), spreads.end());
    }
    return report;
}

bool same_terms(const Inequality &lhs, const Inequality &rhs) {
    auto key = [](const Inequality &ineq) {
        std::multiset<std::pair<std::int64_t, std::vector<ObservableLabel>>> out;
        for (const Term &t : ineq.terms) {
            out.emplace(t.coefficient, t.correlator.labels);
        }
        return out;
    };
    return lhs.n == rhs.n && key(lhs) == key(rhs);
}

std::string flavor_name(Flavor flavor) {
    return flavor == Flavor::temporal ? "temporal" : "noncontextual";
}

}  // namespace tempcert
