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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tempcert/tempcert.h"

namespace {

enum Exit {
    kOk = 0,
    kCertifyFailed = 1,
    kBadArgument = 2,
    kSchema = 3,
    kValidation = 4,
    kIo = 5,
    kInternal = 6,
};

int exit_code(tc_status s) {
    switch (s) {
        case TC_OK:
            return kOk;
        case TC_ERR_INVALID_ARGUMENT:
            return kBadArgument;
        case TC_ERR_SCHEMA:
            return kSchema;
        case TC_ERR_VALIDATION:
            return kValidation;
        case TC_ERR_IO:
            return kIo;
        default:
            return kInternal;
    }
}

struct Failure {
    int code;
};

void check(tc_status s, const std::string &context) {
    if (s != TC_OK) {
        std::cerr << "tempcert: " << context << ": " << tc_last_error() << "\n";
        throw Failure{exit_code(s)};
    }
}

struct StringDeleter {
    void operator()(char *p) const {
        tc_string_free(p);
    }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct RealizationDeleter {
    void operator()(tc_realization *p) const {
        tc_realization_free(p);
    }
};
struct InequalityDeleter {
    void operator()(tc_inequality *p) const {
        tc_inequality_free(p);
    }
};

void emit(const char *text, const std::string &output) {
    if (output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        std::cerr << "tempcert: cannot write " << output << "\n";
        throw Failure{kIo};
    }
}

std::unique_ptr<tc_realization, RealizationDeleter> load_realization(const std::string &path) {
    tc_realization *raw = nullptr;
    check(tc_realization_load_file(path.c_str(), &raw), path);
    std::unique_ptr<tc_realization, RealizationDeleter> real(raw);
    check(tc_realization_validate(real.get(), 0.0), path);
    return real;
}

tc_flavor parse_flavor(const std::string &name) {
    return name == "noncontextual" ? TC_FLAVOR_NONCONTEXTUAL : TC_FLAVOR_TEMPORAL;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Temporal and non-contextuality inequalities: bounds, evaluation, self-test certification"};
    app.require_subcommand(1);

    int n = 0;
    std::string input;
    std::string output;
    std::string format = "json";
    std::string flavor = "temporal";
    std::string inequality_path;
    unsigned workers = 1;
    std::uint64_t seed = tc_default_seed();
    std::optional<double> tol_relation;
    std::optional<double> tol_rank;
    std::optional<double> tol_unitary;
    bool all_stages = false;

    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--output,-o", output, "Write the report here instead of stdout");
        cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
    };

    CLI::App *bounds = app.add_subcommand("bounds", "Classical and quantum bounds for T_n");
    bounds->add_option("--n", n, "Number of qubits (>= 3)")->required();
    add_format(bounds);

    CLI::App *build = app.add_subcommand("build", "Export an inequality as JSON");
    build->add_option("--n", n, "Number of qubits (>= 3)")->required();
    build->add_option("--flavor", flavor)->check(CLI::IsMember({"temporal", "noncontextual"}));
    build->add_option("--output,-o", output, "Write here instead of stdout");

    CLI::App *evaluate = app.add_subcommand("evaluate", "Evaluate an inequality on a realization");
    evaluate->add_option("--input,-i", input, "Realization JSON")->required();
    evaluate->add_option("--inequality", inequality_path, "Inequality JSON (default: built-in family)");
    evaluate->add_option("--n", n, "Built-in inequality size (default: the realization's n)");
    evaluate->add_option("--flavor", flavor)->check(CLI::IsMember({"temporal", "noncontextual"}));
    add_format(evaluate);

    CLI::App *certify = app.add_subcommand("certify", "Run the self-testing pipeline");
    certify->add_option("--input,-i", input, "Realization JSON")->required();
    certify->add_option("--tol-relation", tol_relation, "Relation, algebra and hatted tolerance");
    certify->add_option("--tol-rank", tol_rank, "Relative rank cut for the invariant subspace");
    certify->add_option("--tol-unitary", tol_unitary, "Tolerance on the extracted frame");
    certify->add_flag("--all-stages", all_stages, "Run every stage even after a failure");
    add_format(certify);

    CLI::App *fixtures = app.add_subcommand("selftest-fixtures", "Write reference realizations");
    fixtures->add_option("--output,-o", output, "Directory")->required();
    fixtures->add_option("--seed", seed, "Seed for junk blocks, rotations and perturbations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kBadArgument;
    }

    const tc_format fmt = format == "table" ? TC_FORMAT_TABLE : TC_FORMAT_JSON;
    try {
        if (*bounds) {
            char *text = nullptr;
            check(tc_bounds_report(n, workers, fmt, &text), "bounds");
            OwnedString owned(text);
            emit(text, output);
        } else if (*build) {
            tc_inequality *raw = nullptr;
            check(tc_inequality_build(n, parse_flavor(flavor), &raw), "build");
            std::unique_ptr<tc_inequality, InequalityDeleter> ineq(raw);
            char *text = nullptr;
            check(tc_inequality_to_json(ineq.get(), &text), "build");
            OwnedString owned(text);
            emit(text, output);
        } else if (*evaluate) {
            auto real = load_realization(input);
            tc_inequality *raw = nullptr;
            if (!inequality_path.empty()) {
                check(tc_inequality_load_file(inequality_path.c_str(), &raw), inequality_path);
            } else {
                int size = n;
                if (size == 0) {
                    check(tc_realization_info(real.get(), &size, nullptr, nullptr), input);
                }
                check(tc_inequality_build(size, parse_flavor(flavor), &raw), "evaluate");
            }
            std::unique_ptr<tc_inequality, InequalityDeleter> ineq(raw);
            char *text = nullptr;
            check(tc_evaluate(ineq.get(), real.get(), workers, fmt, &text, nullptr), "evaluate");
            OwnedString owned(text);
            emit(text, output);
        } else if (*certify) {
            auto real = load_realization(input);
            tc_tolerances tol{};
            check(tc_default_tolerances(real.get(), &tol), "certify");
            tol.relation = tol_relation.value_or(tol.relation);
            tol.rank = tol_rank.value_or(tol.rank);
            tol.unitary = tol_unitary.value_or(tol.unitary);
            char *text = nullptr;
            int passed = 0;
            check(tc_certify(real.get(), &tol, workers, all_stages ? 1 : 0, fmt, &text, &passed), "certify");
            OwnedString owned(text);
            emit(text, output);
            return passed ? kOk : kCertifyFailed;
        } else if (*fixtures) {
            char *text = nullptr;
            check(tc_write_fixtures(output.c_str(), seed, &text), "selftest-fixtures");
            OwnedString owned(text);
            std::cout << text;
        }
    } catch (const Failure &f) {
        return f.code;
    }
    return kOk;
}
