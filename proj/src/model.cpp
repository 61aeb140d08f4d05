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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <tuple>

#include "tempcert/config.hpp"
#include "tempcert/error.hpp"
#include "tempcert/random.hpp"

namespace tempcert {
namespace {

void require_n(int n, const char *op) {
    if (n < 3) {
        fail(ErrorKind::invalid_argument, std::string(op) + ": n must be at least 3, got " + std::to_string(n));
    }
    if (static_cast<std::size_t>(n) > dense_limit()) {
        fail(ErrorKind::invalid_argument, std::string(op) + ": n = " + std::to_string(n) +
                                              " exceeds the dense limit of " + std::to_string(dense_limit()));
    }
}

int parse_index(std::string_view digits, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
        fail(ErrorKind::schema, "invalid observable label '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

ObservableLabel ObservableLabel::a(int qubit) {
    return {ObservableKind::A, qubit, 0};
}

ObservableLabel ObservableLabel::b(int qubit) {
    return {ObservableKind::B, qubit, 0};
}

ObservableLabel ObservableLabel::n(int first, int second) {
    if (first == second) {
        fail(ErrorKind::invalid_argument, "N label needs two distinct qubits");
    }
    return {ObservableKind::N, std::min(first, second), std::max(first, second)};
}

std::string ObservableLabel::str() const {
    switch (kind) {
        case ObservableKind::A:
            return "A" + std::to_string(i);
        case ObservableKind::B:
            return "B" + std::to_string(i);
        case ObservableKind::N:
            if (i < 10 && j < 10) {
                return "N" + std::to_string(i) + std::to_string(j);
            }
            return "N" + std::to_string(i) + "_" + std::to_string(j);
    }
    return {};
}

ObservableLabel ObservableLabel::parse(std::string_view text) {
    if (text.size() < 2) {
        fail(ErrorKind::schema, "invalid observable label '" + std::string(text) + "'");
    }
    char head = text.front();
    std::string_view rest = text.substr(1);
    if (head == 'A' || head == 'B') {
        int q = parse_index(rest, text);
        return head == 'A' ? a(q) : b(q);
    }
    if (head != 'N' && head != 'M') {
        fail(ErrorKind::schema, "invalid observable label '" + std::string(text) + "'");
    }
    int first = 0;
    int second = 0;
    if (auto sep = rest.find_first_of("_,"); sep != std::string_view::npos) {
        first = parse_index(rest.substr(0, sep), text);
        second = parse_index(rest.substr(sep + 1), text);
    } else if (rest.size() == 2) {
        first = parse_index(rest.substr(0, 1), text);
        second = parse_index(rest.substr(1, 1), text);
    } else {
        fail(ErrorKind::schema, "ambiguous pair label '" + std::string(text) + "' (use N<i>_<j>)");
    }
    if (first == second) {
        fail(ErrorKind::schema, "pair label '" + std::string(text) + "' repeats a qubit");
    }
    return n(first, second);
}

std::strong_ordering ObservableLabel::operator<=>(const ObservableLabel &other) const {
    auto key = [](const ObservableLabel &l) {
        bool pair = l.kind == ObservableKind::N;
        return std::make_tuple(pair ? 1 : 0, l.i, static_cast<int>(l.kind), l.j);
    };
    return key(*this) <=> key(other);
}

const Operator &Realization::at(const ObservableLabel &label) const {
    auto it = observables.find(label);
    if (it == observables.end()) {
        fail(ErrorKind::missing_label, "realization has no observable " + label.str());
    }
    return it->second;
}

void validate_realization(const Realization &realization, const ValidationTolerance &tol) {
    const Eigen::Index d = realization.dim();
    if (d == 0) {
        fail(ErrorKind::validation, "state vector is empty");
    }
    if (std::abs(realization.state.norm() - 1.0) > tol.state_tol) {
        fail(ErrorKind::validation, "state is not normalized (norm " + std::to_string(realization.state.norm()) + ")");
    }
    for (const auto &[label, op] : realization.observables) {
        if (op.rows() != d || op.cols() != d) {
            fail(ErrorKind::dimension_mismatch, "observable " + label.str() + " is " + std::to_string(op.rows()) +
                                                    "x" + std::to_string(op.cols()) + ", state has dimension " +
                                                    std::to_string(d));
        }
        if (!op.allFinite()) {
            fail(ErrorKind::validation, "observable " + label.str() + " has non-finite entries");
        }
        double herm = hermiticity_residual(op);
        if (herm > tol.operator_tol) {
            fail(ErrorKind::validation, "observable " + label.str() + " is not Hermitian (residual " +
                                            std::to_string(herm) + ")");
        }
        double inv = involution_residual(op);
        if (inv > tol.operator_tol) {
            fail(ErrorKind::validation, "observable " + label.str() + " is not an involution (residual " +
                                            std::to_string(inv) + ")");
        }
    }
}

std::vector<ObservableLabel> labels_for(int n) {
    std::vector<ObservableLabel> out;
    for (int q = 1; q <= n; ++q) {
        out.push_back(ObservableLabel::a(q));
        out.push_back(ObservableLabel::b(q));
    }
    for (int p = 1; p <= n; ++p) {
        for (int q = p + 1; q <= n; ++q) {
            out.push_back(ObservableLabel::n(p, q));
        }
    }
    return out;
}

StabilizerSet stabilizer_generators(int n) {
    if (n < 3) {
        fail(ErrorKind::invalid_argument, "stabilizer_generators: n must be at least 3");
    }
    StabilizerSet set{n, {}};
    for (int v = 0; v < n; ++v) {
        PauliString g(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            g.set_letter(static_cast<std::size_t>(q), q == v ? 'X' : 'Z');
        }
        set.generators.push_back(std::move(g));
    }
    return set;
}

StateVector graph_state(int n) {
    require_n(n, "graph_state");
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    StateVector psi(static_cast<Eigen::Index>(dim));
    // CZ on every pair contributes (-1)^(#pairs of set bits) = (-1)^C(w,2).
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        auto w = static_cast<std::uint64_t>(std::popcount(idx));
        bool negative = ((w * (w - (w > 0 ? 1 : 0)) / 2) & 1U) != 0;
        psi(static_cast<Eigen::Index>(idx)) = negative ? -amp : amp;
    }
    return psi;
}

PauliString canonical_pauli(const ObservableLabel &label, int n) {
    if (label.i < 1 || label.i > n || (label.kind == ObservableKind::N && (label.j < 1 || label.j > n))) {
        fail(ErrorKind::invalid_argument, "label " + label.str() + " out of range for n = " + std::to_string(n));
    }
    const auto width = static_cast<std::size_t>(n);
    switch (label.kind) {
        case ObservableKind::A:
            return PauliString::single(width, static_cast<std::size_t>(label.i - 1), 'X');
        case ObservableKind::B:
            return PauliString::single(width, static_cast<std::size_t>(label.i - 1), 'Z');
        case ObservableKind::N: {
            PauliString p(width);
            for (int q = 1; q <= n; ++q) {
                p.set_letter(static_cast<std::size_t>(q - 1), (q == label.i || q == label.j) ? 'X' : 'Z');
            }
            return p;
        }
    }
    return PauliString(width);
}

Realization canonical_observables(int n) {
    require_n(n, "canonical_observables");
    Realization r;
    r.n = n;
    r.state = graph_state(n);
    for (const ObservableLabel &label : labels_for(n)) {
        r.observables.emplace(label, to_dense(canonical_pauli(label, n)));
    }
    return r;
}

Realization embed_realization(const Realization &base, Eigen::Index extra_dim, std::uint64_t junk_seed) {
    if (extra_dim < 0) {
        fail(ErrorKind::invalid_argument, "embed_realization: extra_dim must be non-negative");
    }
    if (extra_dim == 0) {
        return base;
    }
    Rng rng(junk_seed);
    Realization out;
    out.n = base.n;
    out.state = StateVector::Zero(base.dim() + extra_dim);
    out.state.head(base.dim()) = base.state;
    for (const auto &[label, op] : base.observables) {
        out.observables.emplace(label, direct_sum(op, random_involution(extra_dim, rng)));
    }
    return out;
}

Realization perturb_realization(const Realization &base, double epsilon, std::uint64_t seed) {
    if (!(epsilon >= 0.0)) {
        fail(ErrorKind::invalid_argument, "perturb_realization: epsilon must be non-negative");
    }
    if (epsilon == 0.0) {
        return base;
    }
    Rng rng(seed);
    Realization out = base;
    for (auto &[label, op] : out.observables) {
        Operator u = exp_i_hermitian(random_hermitian_unit(op.rows(), rng), epsilon);
        Operator rotated = u * op * u.adjoint();
        op = (rotated + rotated.adjoint()) * 0.5;
    }
    return out;
}

Realization rotate_realization(const Realization &base, std::uint64_t seed) {
    Rng rng(seed);
    Operator u = random_unitary(base.dim(), rng);
    Realization out;
    out.n = base.n;
    out.state = u * base.state;
    for (const auto &[label, op] : base.observables) {
        Operator rotated = u * op * u.adjoint();
        out.observables.emplace(label, (rotated + rotated.adjoint()) * 0.5);
    }
    return out;
}

Realization relabel_qubits(const Realization &base, const std::vector<int> &permutation) {
    if (static_cast<int>(permutation.size()) != base.n) {
        fail(ErrorKind::invalid_argument, "relabel_qubits: permutation size must equal n");
    }
    std::vector<int> sorted = permutation;
    std::sort(sorted.begin(), sorted.end());
    for (int q = 0; q < base.n; ++q) {
        if (sorted[static_cast<std::size_t>(q)] != q + 1) {
            fail(ErrorKind::invalid_argument, "relabel_qubits: not a permutation of 1..n");
        }
    }
    auto map = [&](int q) { return permutation[static_cast<std::size_t>(q - 1)]; };
    Realization out;
    out.n = base.n;
    out.state = base.state;
    for (const auto &[label, op] : base.observables) {
        ObservableLabel moved = label.kind == ObservableKind::N ? ObservableLabel::n(map(label.i), map(label.j))
                                                                : ObservableLabel{label.kind, map(label.i), 0};
        out.observables.emplace(moved, op);
    }
    return out;
}

Realization classical_realization(int n, const std::map<ObservableLabel, int> &assignment, Eigen::Index dim) {
    if (dim < 1) {
        fail(ErrorKind::invalid_argument, "classical_realization: dim must be positive");
    }
    Realization out;
    out.n = n;
    out.state = StateVector::Zero(dim);
    out.state(0) = 1.0;
    for (const auto &[label, value] : assignment) {
        if (value != 1 && value != -1) {
            fail(ErrorKind::invalid_argument, "classical_realization: values must be +1 or -1");
        }
        out.observables.emplace(label, Operator::Identity(dim, dim) * static_cast<double>(value));
    }
    return out;
}

}  // namespace tempcert
