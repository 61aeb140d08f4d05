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
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tempcert/error.hpp"

namespace tempcert {
namespace {

using L = ObservableLabel;

double max_of(const std::map<std::string, double> &values) {
    double out = 0.0;
    for (const auto &[key, value] : values) {
        out = std::max(out, value);
    }
    return out;
}

// M_1 M_2 ... M_k |v>, rightmost factor first.
StateVector apply_product(const Realization &r, const std::vector<L> &labels, const StateVector &v) {
    StateVector out = v;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        out = r.at(*it) * out;
    }
    return out;
}

std::uint64_t qubit_bit(int n, int qubit) {
    return std::uint64_t{1} << (n - qubit);
}

void record_failures(const std::string &stage, const std::map<std::string, double> &values, double tol,
                     std::vector<std::string> &failed) {
    for (const auto &[key, value] : values) {
        if (!(value <= tol)) {
            failed.push_back(stage + ":" + key + " = " + std::to_string(value));
        }
    }
}

void require_n(const Realization &realization) {
    if (realization.n < 3) {
        fail(ErrorKind::invalid_argument, "certification needs n >= 3, got " + std::to_string(realization.n));
    }
    for (const L &label : labels_for(realization.n)) {
        const Operator &op = realization.at(label);
        if (op.rows() != realization.dim() || op.cols() != realization.dim()) {
            fail(ErrorKind::dimension_mismatch, "observable " + label.str() + " does not match the state dimension");
        }
    }
}

}  // namespace

Tolerances Tolerances::floating() {
    Tolerances t;
    t.relation = 1e-6;
    return t;
}

double RelationResiduals::max() const {
    return std::max(max_of(relations), max_of(pairwise));
}

double AlgebraResiduals::max() const {
    return std::max(max_of(commutators), max_of(anticommutators));
}

double HattedOperators::max() const {
    return std::max({max_of(invariance), max_of(hermiticity), max_of(involution), max_of(trace), max_of(commutators),
                     max_of(anticommutators)});
}

std::string StructurePair::key() const {
    bool comm = relation == PairRelation::commute;
    return std::string(comm ? "[" : "{") + first.str() + "," + second.str() + (comm ? "]" : "}");
}

std::vector<StructurePair> commutation_structure(int n) {
    std::vector<StructurePair> out;
    auto comm = [&](L a, L b) { out.push_back({a, b, PairRelation::commute}); };
    auto anti = [&](L a, L b) { out.push_back({a, b, PairRelation::anticommute}); };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            comm(L::a(i), L::a(j));
            comm(L::b(i), L::b(j));
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) {
                comm(L::a(i), L::b(j));
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            L nij = L::n(i, j);
            comm(L::a(i), nij);
            comm(L::a(j), nij);
            for (int k = 1; k <= n; ++k) {
                if (k != i && k != j) {
                    comm(L::b(k), nij);
                }
            }
        }
    }
    const std::vector<L> all = labels_for(n);
    std::vector<L> pairs;
    std::copy_if(all.begin(), all.end(), std::back_inserter(pairs),
                 [](const L &l) { return l.kind == ObservableKind::N; });
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            const L &x = pairs[p];
            const L &y = pairs[q];
            int shared = (x.i == y.i) + (x.i == y.j) + (x.j == y.i) + (x.j == y.j);
            if (shared == 1) {
                comm(x, y);
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        anti(L::a(i), L::b(i));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            L nij = L::n(i, j);
            for (int k = 1; k <= n; ++k) {
                if (k != i && k != j) {
                    anti(L::a(k), nij);
                }
            }
            anti(L::b(i), nij);
            anti(L::b(j), nij);
        }
    }
    return out;
}

RelationResiduals relation_residuals(const Realization &realization) {
    require_n(realization);
    const int n = realization.n;
    const StateVector &psi = realization.state;
    RelationResiduals out;
    for (const Term &term : build_Tn(n).terms) {
        double target = term.coefficient > 0 ? 1.0 : -1.0;
        StateVector v = apply_product(realization, term.correlator.labels, psi);
        out.relations[term.correlator.str()] = (v - target * psi).norm();
    }

    const std::vector<L> all = labels_for(n);
    for (int i = 1; i <= n; ++i) {
        L a = L::a(i);
        L b = L::b(i);
        StateVector ab = apply_product(realization, {a, b}, psi);
        StateVector ba = apply_product(realization, {b, a}, psi);
        out.pairwise[a.str() + b.str() + "=-" + b.str() + a.str()] = (ab + ba).norm();
        for (const L &pair : all) {
            if (pair.kind != ObservableKind::N) {
                continue;
            }
            out.pairwise[a.str() + b.str() + "=" + pair.str()] = (ab - realization.at(pair) * psi).norm();
        }
    }
    for (const L &pair : all) {
        if (pair.kind != ObservableKind::N) {
            continue;
        }
        for (int q = 1; q <= n; ++q) {
            L a = L::a(q);
            L b = L::b(q);
            if (q != pair.i && q != pair.j) {
                StateVector b_psi = realization.at(b) * psi;
                out.pairwise[a.str() + pair.str() + "=" + b.str()] =
                    (apply_product(realization, {a, pair}, psi) - b_psi).norm();
                out.pairwise["-" + pair.str() + a.str() + "=" + b.str()] =
                    (apply_product(realization, {pair, a}, psi) + b_psi).norm();
            } else {
                StateVector a_psi = realization.at(a) * psi;
                out.pairwise[b.str() + pair.str() + "=-" + a.str()] =
                    (apply_product(realization, {b, pair}, psi) + a_psi).norm();
                out.pairwise["-" + pair.str() + b.str() + "=-" + a.str()] =
                    (apply_product(realization, {pair, b}, psi) - a_psi).norm();
            }
        }
    }
    return out;
}

AlgebraResiduals algebra_residuals(const Realization &realization) {
    require_n(realization);
    const StateVector &psi = realization.state;
    AlgebraResiduals out;
    for (const StructurePair &pair : commutation_structure(realization.n)) {
        StateVector xy = apply_product(realization, {pair.first, pair.second}, psi);
        StateVector yx = apply_product(realization, {pair.second, pair.first}, psi);
        if (pair.relation == PairRelation::commute) {
            out.commutators[pair.key()] = (xy - yx).norm();
        } else {
            out.anticommutators[pair.key()] = (xy + yx).norm();
        }
    }
    return out;
}

namespace {

std::vector<StateVector> b_product_generators(const Realization &realization) {
    const int n = realization.n;
    std::vector<StateVector> gens;
    gens.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<L> factors;
        for (int j = 1; j <= n; ++j) {
            if ((mask >> (j - 1)) & 1U) {
                factors.push_back(L::b(j));
            }
        }
        gens.push_back(apply_product(realization, factors, realization.state));
    }
    return gens;
}

}  // namespace

SubspaceBasis invariant_subspace(const Realization &realization, double rank_tolerance) {
    require_n(realization);
    std::vector<StateVector> gens = b_product_generators(realization);
    return orthonormal_basis(gens, rank_tolerance);
}

SubspaceBasis a_product_subspace(const Realization &realization, double rank_tolerance) {
    require_n(realization);
    const StateVector &psi = realization.state;
    std::vector<StateVector> gens{psi};
    for (int i = 1; i <= realization.n; ++i) {
        gens.push_back(realization.at(L::a(i)) * psi);
    }
    for (int i = 1; i <= realization.n; ++i) {
        gens.push_back(realization.at(L::b(i)) * psi);
    }
    gens.push_back(apply_product(realization, {L::a(1), L::b(1)}, psi));
    return orthonormal_basis(gens, rank_tolerance);
}

double subspace_distance(const SubspaceBasis &lhs, const SubspaceBasis &rhs) {
    if (lhs.rank() != rhs.rank() || lhs.ambient_dim() != rhs.ambient_dim()) {
        return 1.0;
    }
    if (lhs.rank() == 0) {
        return 0.0;
    }
    auto leak = [](const SubspaceBasis &from, const SubspaceBasis &onto) {
        Eigen::MatrixXcd residual = from.vectors - onto.vectors * (onto.vectors.adjoint() * from.vectors);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
        return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    };
    return std::max(leak(lhs, rhs), leak(rhs, lhs));
}

HattedOperators hatted_operators(const Realization &realization, const SubspaceBasis &basis) {
    require_n(realization);
    if (basis.ambient_dim() != realization.dim()) {
        fail(ErrorKind::dimension_mismatch, "hatted_operators: basis does not live in the realization's space");
    }
    const Eigen::MatrixXcd &q = basis.vectors;
    HattedOperators out;
    for (const L &label : labels_for(realization.n)) {
        const Operator &op = realization.at(label);
        Eigen::MatrixXcd image = op * q;
        Operator hat = q.adjoint() * image;
        Eigen::MatrixXcd leak = image - q * hat;
        double worst = 0.0;
        for (Eigen::Index c = 0; c < leak.cols(); ++c) {
            worst = std::max(worst, leak.col(c).norm());
        }
        const std::string key = label.str();
        out.invariance[key] = worst;
        out.hermiticity[key] = hermiticity_residual(hat);
        out.involution[key] = involution_residual(hat);
        out.trace[key] = std::abs(hat.trace());
        out.operators.emplace(label, std::move(hat));
    }
    for (const StructurePair &pair : commutation_structure(realization.n)) {
        const Operator &x = out.operators.at(pair.first);
        const Operator &y = out.operators.at(pair.second);
        if (pair.relation == PairRelation::commute) {
            out.commutators[pair.key()] = commutator(x, y).norm();
        } else {
            out.anticommutators[pair.key()] = anticommutator(x, y).norm();
        }
    }
    return out;
}

UnitaryExtraction extract_unitary(int n, const std::map<ObservableLabel, Operator> &hatted,
                                  const SubspaceBasis &basis, const StateVector &psi) {
    const Eigen::Index k = basis.rank();
    const auto full = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    if (k != full) {
        fail(ErrorKind::numeric, "subspace not of product form: dimension " + std::to_string(k) + ", expected " +
                                     std::to_string(full));
    }
    if (psi.size() != basis.ambient_dim()) {
        fail(ErrorKind::dimension_mismatch, "extract_unitary: state does not live in the basis' ambient space");
    }
    auto hat = [&](const L &label) -> const Operator & {
        auto it = hatted.find(label);
        if (it == hatted.end()) {
            fail(ErrorKind::missing_label, "extract_unitary: no hatted operator " + label.str());
        }
        if (it->second.rows() != k || it->second.cols() != k) {
            fail(ErrorKind::dimension_mismatch, "extract_unitary: hatted " + label.str() + " has the wrong size");
        }
        return it->second;
    };

    UnitaryExtraction out;
    // Sequential eigenspace refinement over B_1..B_n; eigenvalues are sorted
    // into +1 / -1 clusters at threshold 0.5.
    struct Block {
        std::uint64_t pattern;
        Eigen::MatrixXcd frame;
    };
    std::vector<Block> blocks{{0, Eigen::MatrixXcd::Identity(k, k)}};
    for (int i = 1; i <= n; ++i) {
        const Operator &b = hat(L::b(i));
        Operator herm = (b + b.adjoint()) * 0.5;
        std::vector<Block> next;
        for (const Block &block : blocks) {
            Operator local = block.frame.adjoint() * herm * block.frame;
            Eigen::SelfAdjointEigenSolver<Operator> solver(local);
            if (solver.info() != Eigen::Success) {
                fail(ErrorKind::numeric, "eigendecomposition failed while splitting B" + std::to_string(i));
            }
            std::vector<Eigen::Index> plus;
            std::vector<Eigen::Index> minus;
            for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
                double lambda = solver.eigenvalues()(e);
                out.eigenvalue_residual = std::max(out.eigenvalue_residual, std::abs(std::abs(lambda) - 1.0));
                if (lambda > 0.5) {
                    plus.push_back(e);
                } else if (lambda < -0.5) {
                    minus.push_back(e);
                } else {
                    fail(ErrorKind::numeric, "subspace not of product form: B" + std::to_string(i) +
                                                 " has eigenvalue " + std::to_string(lambda) + " away from +-1");
                }
            }
            auto take = [&](const std::vector<Eigen::Index> &cols, std::uint64_t pattern) {
                if (cols.empty()) {
                    return;
                }
                Eigen::MatrixXcd vecs(local.rows(), static_cast<Eigen::Index>(cols.size()));
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    vecs.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(cols[c]);
                }
                next.push_back({pattern, block.frame * vecs});
            };
            take(plus, block.pattern);
            take(minus, block.pattern | qubit_bit(n, i));
        }
        blocks = std::move(next);
    }
    std::vector<StateVector> frame(static_cast<std::size_t>(full));
    for (const Block &block : blocks) {
        if (block.frame.cols() != 1) {
            fail(ErrorKind::numeric, "subspace not of product form: joint eigenspace of dimension " +
                                         std::to_string(block.frame.cols()));
        }
        frame[block.pattern] = block.frame.col(0).normalized();
    }

    const StateVector coords = basis.vectors.adjoint() * psi;
    auto align = [](StateVector &target, Complex overlap) {
        double mag = std::abs(overlap);
        if (mag > 1e-12) {
            target *= overlap / mag;
        }
    };
    align(frame[0], frame[0].dot(coords));
    for (int i = 1; i <= n; ++i) {
        const Operator &a = hat(L::a(i));
        const std::uint64_t bit = qubit_bit(n, i);
        const std::uint64_t lower = bit - 1;
        for (std::uint64_t pattern = 0; pattern < static_cast<std::uint64_t>(full); ++pattern) {
            if ((pattern & bit) == 0 || (pattern & lower) != 0) {
                continue;
            }
            const StateVector &parent = frame[pattern ^ bit];
            align(frame[pattern], frame[pattern].dot(a * parent));
        }
    }
    for (int i = 1; i <= n; ++i) {
        const Operator &a = hat(L::a(i));
        const std::uint64_t bit = qubit_bit(n, i);
        for (std::uint64_t pattern = 0; pattern < static_cast<std::uint64_t>(full); ++pattern) {
            double r = (a * frame[pattern] - frame[pattern ^ bit]).norm();
            out.phase_loop_residual = std::max(out.phase_loop_residual, r);
        }
    }

    out.unitary.resize(full, full);
    for (Eigen::Index b = 0; b < full; ++b) {
        out.unitary.row(b) = frame[static_cast<std::size_t>(b)].adjoint();
    }
    out.isometry = out.unitary * basis.vectors.adjoint();
    const Operator &u = out.unitary;
    out.unitarity_residual = (u * u.adjoint() - Operator::Identity(full, full)).norm();

    for (int i = 1; i <= n; ++i) {
        L a = L::a(i);
        L b = L::b(i);
        out.a_residuals[a.str()] = (u * hat(a) * u.adjoint() - to_dense(canonical_pauli(a, n))).norm();
        out.b_residuals[b.str()] = (u * hat(b) * u.adjoint() - to_dense(canonical_pauli(b, n))).norm();
    }
    for (const auto &[label, op] : hatted) {
        if (label.kind != ObservableKind::N) {
            continue;
        }
        Operator rotated = u * op * u.adjoint();
        Operator reference = to_dense(canonical_pauli(label, n));
        double overlap = (reference.adjoint() * rotated).trace().real() / static_cast<double>(full);
        int sign = overlap >= 0.0 ? 1 : -1;
        out.nij_signs[label.str()] = sign;
        out.n_residuals[label.str()] = (rotated - static_cast<double>(sign) * reference).norm();
    }
    out.fidelity = std::norm(graph_state(n).dot(u * coords));
    return out;
}

CertificationReport certify(const Realization &realization, const CertifyOptions &options) {
    require_n(realization);
    const Tolerances &tol = options.tolerances;
    const int n = realization.n;
    CertificationReport report;
    report.n = n;
    report.tolerances = tol;
    report.evaluation = evaluate(build_Tn(n), realization, options.workers);

    auto stop = [&] { return options.short_circuit && !report.failed_checks.empty(); };

    report.stages.push_back("relations");
    report.relations = relation_residuals(realization);
    record_failures("relations", report.relations.relations, tol.relation, report.failed_checks);
    record_failures("pairwise", report.relations.pairwise, tol.relation, report.failed_checks);
    if (stop()) {
        return report;
    }

    report.stages.push_back("algebra");
    report.algebra = algebra_residuals(realization);
    record_failures("algebra", report.algebra->commutators, tol.relation, report.failed_checks);
    record_failures("algebra", report.algebra->anticommutators, tol.relation, report.failed_checks);
    if (stop()) {
        return report;
    }

    report.stages.push_back("subspace");
    std::vector<StateVector> gens = b_product_generators(realization);
    SubspaceBasis basis = orthonormal_basis(gens, tol.rank);
    report.subspace_dim = basis.rank();
    {
        Eigen::MatrixXcd g(realization.dim(), static_cast<Eigen::Index>(gens.size()));
        for (std::size_t c = 0; c < gens.size(); ++c) {
            g.col(static_cast<Eigen::Index>(c)) = gens[c];
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
        const auto &sv = svd.singularValues();
        report.generator_singular_values.assign(sv.data(), sv.data() + sv.size());
    }
    const auto expected_dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    if (basis.rank() != expected_dim) {
        report.failed_checks.push_back("subspace:dimension = " + std::to_string(basis.rank()) + ", expected " +
                                       std::to_string(expected_dim));
    }
    if (n == 3) {
        report.a_span_distance = subspace_distance(basis, a_product_subspace(realization, tol.rank));
        if (!(*report.a_span_distance <= tol.rank)) {
            report.failed_checks.push_back("subspace:a_span_distance = " + std::to_string(*report.a_span_distance));
        }
    }
    if (stop()) {
        return report;
    }

    report.stages.push_back("hatted");
    report.hatted = hatted_operators(realization, basis);
    const HattedOperators &h = *report.hatted;
    record_failures("hatted.invariance", h.invariance, tol.relation, report.failed_checks);
    record_failures("hatted.hermiticity", h.hermiticity, tol.relation, report.failed_checks);
    record_failures("hatted.involution", h.involution, tol.relation, report.failed_checks);
    record_failures("hatted.trace", h.trace, tol.relation, report.failed_checks);
    record_failures("hatted.commutator", h.commutators, tol.relation, report.failed_checks);
    record_failures("hatted.anticommutator", h.anticommutators, tol.relation, report.failed_checks);
    if (stop()) {
        return report;
    }

    report.stages.push_back("unitary");
    try {
        report.unitary = extract_unitary(n, h.operators, basis, realization.state);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::numeric) {
            throw;
        }
        report.failed_checks.push_back(std::string("unitary:") + e.what());
        return report;
    }
    const UnitaryExtraction &ux = *report.unitary;
    record_failures("unitary.A", ux.a_residuals, tol.unitary, report.failed_checks);
    record_failures("unitary.B", ux.b_residuals, tol.unitary, report.failed_checks);
    record_failures("unitary.N", ux.n_residuals, tol.unitary, report.failed_checks);
    record_failures("unitary", {{"unitarity", ux.unitarity_residual}, {"phase_loop", ux.phase_loop_residual}},
                    tol.unitary, report.failed_checks);
    for (const auto &[key, sign] : ux.nij_signs) {
        if (sign != 1) {
            report.failed_checks.push_back("unitary.sign:" + key + " = -1");
        }
    }
    if (!(ux.fidelity >= 1.0 - tol.relation)) {
        report.failed_checks.push_back("unitary:fidelity = " + std::to_string(ux.fidelity));
    }
    report.passed = report.failed_checks.empty();
    return report;
}

}  // namespace tempcert
