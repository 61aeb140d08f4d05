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

#include "tempcert/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tempcert/error.hpp"

namespace tempcert {
namespace {

[[noreturn]] void schema(const std::string &msg) {
    fail(ErrorKind::schema, msg);
}

Json complex_to_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema(where + ": expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Operator &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Operator matrix_from_json(const Json &j, Eigen::Index dim, const std::string &where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
        schema(where + ": expected " + std::to_string(dim) + " rows");
    }
    Operator m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Json &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            schema(where + ": row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                        where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

const Json &member(const Json &doc, const char *key, const std::string &where) {
    if (!doc.is_object() || !doc.contains(key)) {
        schema(where + ": missing \"" + key + "\"");
    }
    return doc.at(key);
}

int int_member(const Json &doc, const char *key, const std::string &where) {
    const Json &v = member(doc, key, where);
    if (!v.is_number_integer()) {
        schema(where + ": \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

ObservableLabel label_from_json(const Json &j, const std::string &where) {
    if (!j.is_string()) {
        schema(where + ": labels must be strings");
    }
    return ObservableLabel::parse(j.get<std::string>());
}

Json residual_map(const std::map<std::string, double> &m) {
    Json out = Json::object();
    for (const auto &[k, v] : m) {
        out[k] = v;
    }
    return out;
}

double max_value(const std::map<std::string, double> &m) {
    double out = 0.0;
    for (const auto &[k, v] : m) {
        out = std::max(out, v);
    }
    return out;
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

}  // namespace

Json realization_to_json(const Realization &realization, const std::string &provenance) {
    Json doc;
    doc["n"] = realization.n;
    doc["dim"] = realization.dim();
    Json state = Json::array();
    for (Eigen::Index k = 0; k < realization.state.size(); ++k) {
        state.push_back(complex_to_json(realization.state(k)));
    }
    doc["state"] = std::move(state);
    Json obs = Json::object();
    for (const auto &[label, op] : realization.observables) {
        obs[label.str()] = matrix_to_json(op);
    }
    doc["observables"] = std::move(obs);
    if (!provenance.empty()) {
        doc["provenance"] = provenance;
    }
    return doc;
}

LoadedRealization realization_from_json(const Json &doc) {
    const std::string where = "realization";
    if (!doc.is_object()) {
        schema(where + ": expected an object");
    }
    LoadedRealization out;
    Realization &r = out.realization;
    r.n = int_member(doc, "n", where);
    if (r.n < 1) {
        schema(where + ": \"n\" must be positive");
    }
    int dim = int_member(doc, "dim", where);
    if (dim < 1) {
        schema(where + ": \"dim\" must be positive");
    }
    const Json &state = member(doc, "state", where);
    if (!state.is_array() || static_cast<int>(state.size()) != dim) {
        schema(where + ": \"state\" must have dim = " + std::to_string(dim) + " entries");
    }
    r.state.resize(dim);
    for (int k = 0; k < dim; ++k) {
        r.state(k) = complex_from_json(state[static_cast<std::size_t>(k)], "state[" + std::to_string(k) + "]");
    }
    const Json &obs = member(doc, "observables", where);
    if (!obs.is_object()) {
        schema(where + ": \"observables\" must be an object");
    }
    for (const auto &[name, matrix] : obs.items()) {
        ObservableLabel label = ObservableLabel::parse(name);
        int top = label.kind == ObservableKind::N ? label.j : label.i;
        if (label.i < 1 || top > r.n) {
            schema(where + ": label " + name + " is out of range for n = " + std::to_string(r.n));
        }
        if (r.observables.count(label)) {
            schema(where + ": label " + label.str() + " appears twice");
        }
        r.observables.emplace(label, matrix_from_json(matrix, dim, "observable " + name));
    }
    if (doc.contains("provenance")) {
        const Json &p = doc.at("provenance");
        if (!p.is_string()) {
            schema(where + ": \"provenance\" must be a string");
        }
        out.floating = p.get<std::string>() == "float";
    }
    return out;
}

Json inequality_to_json(const Inequality &inequality) {
    Json doc;
    doc["n"] = inequality.n;
    doc["flavor"] = flavor_name(inequality.flavor);
    doc["eta_C"] = inequality.classical_bound;
    doc["eta_Q"] = inequality.quantum_bound;
    Json terms = Json::array();
    for (const Term &t : inequality.terms) {
        Json term;
        term["coeff"] = t.coefficient;
        Json labels = Json::array();
        for (const ObservableLabel &l : t.correlator.labels) {
            labels.push_back(l.str());
        }
        term["labels"] = std::move(labels);
        Json cover = Json::array();
        for (std::size_t s = 0; s < t.correlator.cover.size(); ++s) {
            Json seq = Json::array();
            for (const ObservableLabel &l : t.correlator.sequence(s)) {
                seq.push_back(l.str());
            }
            cover.push_back(std::move(seq));
        }
        term["cover"] = std::move(cover);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

Inequality inequality_from_json(const Json &doc) {
    const std::string where = "inequality";
    if (!doc.is_object()) {
        schema(where + ": expected an object");
    }
    Inequality ineq;
    ineq.n = int_member(doc, "n", where);
    if (ineq.n < 3) {
        schema(where + ": \"n\" must be at least 3");
    }
    const Json &flavor = member(doc, "flavor", where);
    if (flavor == "temporal") {
        ineq.flavor = Flavor::temporal;
    } else if (flavor == "noncontextual") {
        ineq.flavor = Flavor::noncontextual;
    } else {
        schema(where + ": \"flavor\" must be \"temporal\" or \"noncontextual\"");
    }
    BoundFormulas bounds = bound_formulas(ineq.n);
    ineq.classical_bound = doc.contains("eta_C") ? doc.at("eta_C").get<std::int64_t>() : bounds.eta_c;
    ineq.quantum_bound = doc.contains("eta_Q") ? doc.at("eta_Q").get<std::int64_t>() : bounds.eta_q;
    const Json &terms = member(doc, "terms", where);
    if (!terms.is_array()) {
        schema(where + ": \"terms\" must be an array");
    }
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = "term " + std::to_string(t);
        const Json &term = terms[t];
        const Json &coeff = member(term, "coeff", tw);
        if (!coeff.is_number_integer()) {
            schema(tw + ": \"coeff\" must be an integer");
        }
        const Json &labels = member(term, "labels", tw);
        if (!labels.is_array() || labels.empty()) {
            schema(tw + ": \"labels\" must be a non-empty array");
        }
        if (labels.size() > static_cast<std::size_t>(kMaxCoverLength)) {
            schema(tw + ": at most " + std::to_string(kMaxCoverLength) + " labels per term");
        }
        std::vector<ObservableLabel> parsed;
        for (const Json &l : labels) {
            parsed.push_back(label_from_json(l, tw));
        }
        std::sort(parsed.begin(), parsed.end());
        PiCorrelator pc;
        pc.labels = parsed;
        const Json &cover = member(term, "cover", tw);
        if (!cover.is_array() || cover.empty()) {
            schema(tw + ": \"cover\" must be a non-empty array");
        }
        for (const Json &seq : cover) {
            if (!seq.is_array() || seq.size() != parsed.size()) {
                schema(tw + ": every cover entry must list all " + std::to_string(parsed.size()) + " labels");
            }
            // Repeated labels take the first unused position.
            std::vector<char> used(parsed.size(), 0);
            Ordering order;
            for (const Json &l : seq) {
                ObservableLabel label = label_from_json(l, tw);
                std::size_t p = 0;
                while (p < parsed.size() && (used[p] || !(parsed[p] == label))) {
                    ++p;
                }
                if (p == parsed.size()) {
                    schema(tw + ": cover entry is not an ordering of the term's labels");
                }
                used[p] = 1;
                order.push_back(static_cast<int>(p));
            }
            pc.cover.push_back(std::move(order));
        }
        if (ineq.flavor == Flavor::temporal && !covers_all_permutations(pc.cover, static_cast<int>(parsed.size()))) {
            schema(tw + ": cover does not reach every ordering of " + pc.str());
        }
        ineq.terms.push_back({coeff.get<std::int64_t>(), std::move(pc)});
    }
    return ineq;
}

Json evaluation_to_json(const Inequality &inequality, const EvaluationReport &report) {
    Json doc;
    doc["n"] = inequality.n;
    doc["flavor"] = flavor_name(inequality.flavor);
    doc["total"] = report.total;
    doc["eta_C"] = report.classical_bound;
    doc["eta_Q"] = report.quantum_bound;
    doc["deficit"] = report.deficit;
    doc["violated"] = report.violated;
    Json terms = Json::array();
    for (std::size_t t = 0; t < inequality.terms.size(); ++t) {
        terms.push_back({{"coeff", inequality.terms[t].coefficient},
                         {"labels", inequality.terms[t].correlator.str()},
                         {"value", report.term_values.at(t)}});
    }
    doc["terms"] = std::move(terms);
    if (report.max_ordering_spread) {
        doc["max_ordering_spread"] = *report.max_ordering_spread;
    }
    return doc;
}

Json tolerances_to_json(const Tolerances &tol) {
    return {{"relation", tol.relation}, {"rank", tol.rank}, {"unitary", tol.unitary}};
}

Json certification_to_json(const CertificationReport &report) {
    Json doc;
    doc["n"] = report.n;
    doc["Tn_value"] = report.evaluation.total;
    doc["eta_C"] = report.evaluation.classical_bound;
    doc["eta_Q"] = report.evaluation.quantum_bound;
    doc["deficit"] = report.evaluation.deficit;
    doc["violated"] = report.evaluation.violated;
    doc["relation_residuals"] = residual_map(report.relations.relations);
    doc["pairwise_residuals"] = residual_map(report.relations.pairwise);
    if (report.algebra) {
        Json alg = residual_map(report.algebra->commutators);
        for (const auto &[k, v] : report.algebra->anticommutators) {
            alg[k] = v;
        }
        doc["algebra_residuals"] = std::move(alg);
    } else {
        doc["algebra_residuals"] = nullptr;
    }
    doc["subspace_dim"] = report.subspace_dim ? Json(*report.subspace_dim) : Json(nullptr);
    doc["singular_values"] = report.generator_singular_values;
    if (report.a_span_distance) {
        doc["a_span_distance"] = *report.a_span_distance;
    }
    if (report.hatted) {
        const HattedOperators &h = *report.hatted;
        doc["hatted"] = {{"invariance", residual_map(h.invariance)},
                         {"hermiticity", residual_map(h.hermiticity)},
                         {"involution", residual_map(h.involution)},
                         {"trace", residual_map(h.trace)},
                         {"commutators", residual_map(h.commutators)},
                         {"anticommutators", residual_map(h.anticommutators)}};
    }
    Json signs = Json::object();
    if (report.unitary) {
        const UnitaryExtraction &u = *report.unitary;
        for (const auto &[k, s] : u.nij_signs) {
            signs[k] = s;
        }
        doc["fidelity"] = u.fidelity;
        doc["unitary"] = {{"a_residuals", residual_map(u.a_residuals)},
                          {"b_residuals", residual_map(u.b_residuals)},
                          {"n_residuals", residual_map(u.n_residuals)},
                          {"unitarity_residual", u.unitarity_residual},
                          {"phase_loop_residual", u.phase_loop_residual},
                          {"eigenvalue_residual", u.eigenvalue_residual},
                          {"matrix", matrix_to_json(u.unitary)}};
    } else {
        doc["fidelity"] = nullptr;
    }
    doc["nij_signs"] = std::move(signs);
    doc["verdict"] = report.passed ? "pass" : "fail";
    doc["tolerances"] = tolerances_to_json(report.tolerances);
    doc["stages"] = report.stages;
    doc["failed_checks"] = report.failed_checks;
    return doc;
}

std::string evaluation_table(const Inequality &inequality, const EvaluationReport &report) {
    std::ostringstream os;
    os << flavor_name(inequality.flavor) << " inequality, n = " << inequality.n << "\n";
    std::size_t width = 6;
    for (const Term &t : inequality.terms) {
        width = std::max(width, t.correlator.str().size());
    }
    os << std::left << std::setw(6) << "coeff" << "  " << std::setw(static_cast<int>(width)) << "term"
       << "  value\n";
    for (std::size_t t = 0; t < inequality.terms.size(); ++t) {
        os << std::left << std::setw(6) << inequality.terms[t].coefficient << "  "
           << std::setw(static_cast<int>(width)) << inequality.terms[t].correlator.str() << "  "
           << fmt(report.term_values[t], 12) << "\n";
    }
    os << "total    " << fmt(report.total, 15) << "\n";
    os << "eta_C    " << report.classical_bound << "\n";
    os << "eta_Q    " << report.quantum_bound << "\n";
    os << "deficit  " << fmt(report.deficit) << "\n";
    os << "violated " << (report.violated ? "yes" : "no") << "\n";
    if (report.max_ordering_spread) {
        os << "max ordering spread " << fmt(*report.max_ordering_spread) << "\n";
    }
    return os.str();
}

std::string certification_table(const CertificationReport &report) {
    std::ostringstream os;
    os << "n = " << report.n << "  T_n = " << fmt(report.evaluation.total, 15) << "  (eta_C "
       << report.evaluation.classical_bound << ", eta_Q " << report.evaluation.quantum_bound << ")\n";
    auto line = [&](const std::string &name, const std::string &value) {
        os << std::left << std::setw(24) << name << value << "\n";
    };
    line("relations (max)", fmt(max_value(report.relations.relations)));
    line("pairwise (max)", fmt(max_value(report.relations.pairwise)));
    if (report.algebra) {
        line("algebra (max)", fmt(report.algebra->max()));
    }
    if (report.subspace_dim) {
        line("subspace dim", std::to_string(*report.subspace_dim));
    }
    if (report.a_span_distance) {
        line("A-span distance", fmt(*report.a_span_distance));
    }
    if (report.hatted) {
        line("hatted (max)", fmt(report.hatted->max()));
    }
    if (report.unitary) {
        const UnitaryExtraction &u = *report.unitary;
        std::string signs;
        for (const auto &[k, s] : u.nij_signs) {
            signs += k + (s > 0 ? ":+ " : ":- ");
        }
        line("N signs", signs);
        line("unitarity", fmt(u.unitarity_residual));
        line("phase loop", fmt(u.phase_loop_residual));
        line("fidelity", fmt(u.fidelity, 15));
    }
    line("verdict", report.passed ? "pass" : "fail");
    for (const std::string &f : report.failed_checks) {
        os << "  failed " << f << "\n";
    }
    return os.str();
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        schema(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::io, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

std::string dump_json(const Json &doc) {
    return doc.dump(2) + "\n";
}

}  // namespace tempcert
