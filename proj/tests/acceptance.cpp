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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tempcert/certify.hpp"
#include "tempcert/fixtures.hpp"
#include "tempcert/random.hpp"

using namespace tempcert;
using L = ObservableLabel;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int failures = 0;

void criterion(const char *id, const char *title, const std::function<void(Outcome &)> &body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.ok = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s %s  %s:%s (%.2f s)\n", id, out.ok ? "PASS" : "FAIL", title, out.detail.str().c_str(),
                seconds_since(start));
    std::fflush(stdout);
    if (!out.ok) {
        ++failures;
    }
}

double max_of(const std::map<std::string, double> &m) {
    double out = 0;
    for (const auto &[k, v] : m) {
        out = std::max(out, v);
    }
    return out;
}

std::size_t factorial(int k) {
    std::size_t out = 1;
    for (int m = 2; m <= k; ++m) {
        out *= static_cast<std::size_t>(m);
    }
    return out;
}

Realization random_realization(Eigen::Index dim, const std::vector<L> &labels, Rng &rng) {
    Realization r;
    r.n = 2;
    r.state = StateVector::Zero(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        r.state(k) = rng.complex_normal();
    }
    r.state.normalize();
    for (const L &l : labels) {
        r.observables[l] = random_involution(dim, rng);
    }
    return r;
}

}  // namespace

int main() {
    std::map<int, EvaluationReport> canonical_reports;

    criterion("AC1", "canonical maximal violation of T3", [](Outcome &o) {
        auto start = std::chrono::steady_clock::now();
        double total = evaluate(build_T3(), canonical_observables(3)).total;
        double t = seconds_since(start);
        o.detail << " T3 = " << std::setprecision(15) << total << ", " << std::setprecision(3) << t << " s";
        o.require(std::abs(total - 10.0) <= 1e-9, "total != 10");
        o.require(t < 1.0, "slower than 1 s");
    });

    criterion("AC2", "classical bounds by brute force", [](Outcome &o) {
        for (int n = 3; n <= 5; ++n) {
            auto start = std::chrono::steady_clock::now();
            BruteForceResult r = classical_bound_bruteforce(build_Tn(n), 1);
            double t = seconds_since(start);
            BoundFormulas b = bound_formulas(n);
            o.detail << " n=" << n << ":" << r.value << "/2^" << r.label_count;
            o.require(r.value == b.eta_c && r.value == 2 * b.alpha * n + 2 * (n * (n - 1) * (n - 2) / 6),
                      "n=" + std::to_string(n) + " bound mismatch");
            if (n == 5) {
                o.detail << " (" << std::setprecision(3) << t << " s)";
                o.require(t < 60.0, "n=5 slower than 60 s");
            }
        }
        o.require(classical_bound_bruteforce(build_T3(), 1).value == 8, "literal T3 bound");
    });

    criterion("AC3", "quantum bound formula on canonical realizations", [&](Outcome &o) {
        for (int n = 3; n <= 6; ++n) {
            auto start = std::chrono::steady_clock::now();
            EvaluationReport e = evaluate(build_Tn(n), canonical_observables(n));
            double t = seconds_since(start);
            canonical_reports[n] = e;
            BoundFormulas b = bound_formulas(n);
            o.detail << " n=" << n << ":" << std::setprecision(12) << e.total;
            o.require(std::abs(e.total - static_cast<double>(b.eta_q)) <= 1e-9, "n=" + std::to_string(n));
            o.require(b.eta_q == 2 * b.alpha * n + 4 * (n * (n - 1) * (n - 2) / 6), "formula");
            if (n == 6) {
                o.detail << " (" << std::setprecision(3) << t << " s, " << build_Tn(6).terms.size() << " terms)";
                o.require(t < 30.0, "n=6 slower than 30 s");
            }
        }
    });

    criterion("AC4", "sign pattern of canonical terms", [&](Outcome &o) {
        for (int n = 3; n <= 6; ++n) {
            Inequality ineq = build_Tn(n);
            if (!canonical_reports.count(n)) {
                canonical_reports[n] = evaluate(ineq, canonical_observables(n));
            }
            const EvaluationReport &e = canonical_reports[n];
            std::size_t negatives = 0;
            for (std::size_t t = 0; t < ineq.terms.size(); ++t) {
                bool triple = ineq.terms[t].coefficient < 0;
                negatives += triple ? 1 : 0;
                o.require(std::abs(e.term_values[t] - (triple ? -1.0 : 1.0)) <= 1e-10,
                          ineq.terms[t].correlator.str());
            }
            o.require(negatives == static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6), "triple count");
            o.detail << " n=" << n << ":" << negatives << " negative of " << ineq.terms.size();
        }
    });

    criterion("AC5", "dimension witness and certification", [](Outcome &o) {
        for (int n = 3; n <= 5; ++n) {
            Realization c = canonical_observables(n);
            CertificationReport base = certify(c);
            bool ok = base.passed && base.subspace_dim == (Eigen::Index{1} << n) && base.unitary &&
                      base.unitary->fidelity >= 1 - 1e-9;
            if (base.unitary) {
                for (const auto &[k, s] : base.unitary->nij_signs) {
                    ok = ok && s == 1;
                }
            }
            o.require(ok, "canonical n=" + std::to_string(n));
            double fid = base.unitary ? base.unitary->fidelity : 0.0;
            CertificationReport rotated = certify(rotate_realization(c, rotate_seed(kDefaultSeed, n)));
            o.require(rotated.passed && rotated.unitary && std::abs(rotated.unitary->fidelity - fid) <= 1e-8,
                      "rotated n=" + std::to_string(n));
            CertificationReport embedded = certify(embed_realization(c, 8, junk_seed(kDefaultSeed, n)));
            o.require(embedded.passed && embedded.unitary && std::abs(embedded.unitary->fidelity - fid) <= 1e-8 &&
                          embedded.subspace_dim == (Eigen::Index{1} << n),
                      "embedded n=" + std::to_string(n));
            o.detail << " n=" << n << ":dim " << base.subspace_dim.value_or(0) << " F=" << std::setprecision(15)
                     << fid;
        }
    });

    criterion("AC6", "negative controls fail", [](Outcome &o) {
        Realization flipped = canonical_observables(3);
        flipped.observables[L::n(1, 2)] *= -1.0;
        CertifyOptions all;
        all.short_circuit = false;
        CertificationReport a = certify(flipped, all);
        o.require(!a.passed && !certify(flipped).passed, "N12 negated passed");
        o.require(a.unitary && a.unitary->nij_signs.at("N12") == -1, "N12 sign not -1");
        o.detail << " (a) N12 sign " << (a.unitary ? a.unitary->nij_signs.at("N12") : 0);

        Realization p = perturb_realization(canonical_observables(3), 0.1, perturb_seed(kDefaultSeed, 3));
        CertificationReport b = certify(p);
        double rb = max_of(b.relations.relations);
        o.require(!b.passed && rb > 1e-3, "perturbed");
        o.detail << "; (b) max relation residual " << std::setprecision(6) << rb << " (seed "
                 << perturb_seed(kDefaultSeed, 3) << ")";

        Realization product = canonical_observables(3);
        product.state = StateVector::Unit(8, 0);
        CertificationReport c = certify(product, all);
        double rc = max_of(c.relations.relations);
        o.require(!c.passed && (c.subspace_dim.value_or(8) < 8 || rc > 0.1), "product state");
        o.detail << "; (c) dim " << c.subspace_dim.value_or(-1) << ", max relation residual " << rc;
    });

    criterion("AC7", "permutation covers", [](Outcome &o) {
        for (int k = 2; k <= 5; ++k) {
            const std::vector<Ordering> &cover = permutation_cover(k);
            std::size_t lower = (factorial(k) + (std::size_t{1} << (k - 1)) - 1) >> (k - 1);
            o.require(oracle::covers(cover, k), "k=" + std::to_string(k) + " incomplete");
            o.require(cover.size() >= lower, "k=" + std::to_string(k) + " below minimum");
            o.detail << " k=" << k << ":" << cover.size() << " (min " << lower << ")";
        }
        const std::vector<Ordering> want{{0, 1, 2}, {1, 0, 2}};
        o.require(permutation_cover(3) == want, "k=3 pair");
    });

    criterion("AC8", "oracle equivalence", [](Outcome &o) {
        Rng rng(8);
        const std::vector<L> pool{L::a(1), L::b(1), L::a(2), L::b(2), L::n(1, 2)};
        double worst = 0;
        for (int trial = 0; trial < 200; ++trial) {
            Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng.next_word() % 8);
            Realization r = random_realization(dim, pool, rng);
            int k = 1 + static_cast<int>(rng.next_word() % 4);
            SequenceCorrelator seq;
            std::vector<oracle::Mat> mats;
            for (int m = 0; m < k; ++m) {
                seq.push_back(pool[rng.next_word() % pool.size()]);
                mats.push_back(r.at(seq.back()));
            }
            worst = std::max(worst, std::abs(seq_correlation(r, seq) - oracle::ordering_sum(mats, r.state)));
        }
        o.require(worst <= 1e-10, "sequential correlations");
        o.detail << " 200 sequences, max deviation " << std::setprecision(3) << worst;

        int mismatches = 0;
        const char alphabet[] = "IXYZ";
        for (int trial = 0; trial < 1000; ++trial) {
            std::size_t width = 1 + static_cast<std::size_t>(trial % 3);
            PauliString a(width);
            PauliString b(width);
            std::string la;
            std::string lb;
            for (std::size_t q = 0; q < width; ++q) {
                la += alphabet[rng.next_word() % 4];
                lb += alphabet[rng.next_word() % 4];
                a.set_letter(q, la.back());
                b.set_letter(q, lb.back());
            }
            auto pa = static_cast<std::uint8_t>(rng.next_word() % 4);
            auto pb = static_cast<std::uint8_t>(rng.next_word() % 4);
            a.mul_phase(pa);
            b.mul_phase(pb);
            oracle::Mat da = oracle::pauli(la, pa);
            oracle::Mat db = oracle::pauli(lb, pb);
            PauliString ab = pauli_mul(a, b);
            std::string lab;
            for (std::size_t q = 0; q < width; ++q) {
                lab += ab.letter(q);
            }
            bool same = oracle::pauli(lab, ab.log_i()) == da * db;
            bool comm = commutes(a, b) == (da * db == db * da);
            mismatches += (same && comm) ? 0 : 1;
        }
        o.require(mismatches == 0, "pauli products");
        o.detail << "; 1000 Pauli pairs, " << mismatches << " mismatches";
    });

    criterion("AC9", "three-qubit graph state amplitudes", [](Outcome &o) {
        StateVector g = graph_state(3);
        const int signs[] = {1, 1, 1, -1, 1, -1, -1, -1};
        const double mag = 1 / std::sqrt(8.0);
        double worst = 0;
        for (int b = 0; b < 8; ++b) {
            o.require(g(b).imag() == 0.0 && (g(b).real() > 0) == (signs[b] > 0), "sign at " + std::to_string(b));
            worst = std::max(worst, std::abs(std::abs(g(b).real()) - mag));
        }
        o.require(worst <= 1e-15, "magnitude");
        o.detail << " (+,+,+,-,+,-,-,-)/sqrt(8), max magnitude error " << std::setprecision(3) << worst;
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
