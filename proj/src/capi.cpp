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

#include "tempcert/tempcert.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "tempcert/certify.hpp"
#include "tempcert/config.hpp"
#include "tempcert/error.hpp"
#include "tempcert/fixtures.hpp"
#include "tempcert/json_io.hpp"

struct tc_realization {
    tempcert::Realization realization;
    bool floating = false;
};

struct tc_inequality {
    tempcert::Inequality inequality;
};

namespace {

using namespace tempcert;

thread_local std::string last_error;

tc_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument:
            return TC_ERR_INVALID_ARGUMENT;
        case ErrorKind::dimension_mismatch:
        case ErrorKind::missing_label:
        case ErrorKind::schema:
            return TC_ERR_SCHEMA;
        case ErrorKind::validation:
            return TC_ERR_VALIDATION;
        case ErrorKind::io:
            return TC_ERR_IO;
        case ErrorKind::numeric:
            return TC_ERR_NUMERIC;
    }
    return TC_ERR_INTERNAL;
}

template <typename F>
tc_status guarded(F &&body) {
    try {
        body();
        return TC_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception &e) {
        last_error = std::string("malformed document: ") + e.what();
        return TC_ERR_SCHEMA;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return TC_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return TC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return TC_ERR_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        fail(ErrorKind::invalid_argument, std::string(what) + " is null");
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::size_t label_count(int n) {
    auto m = static_cast<std::size_t>(n);
    return 2 * m + m * (m - 1) / 2;
}

}  // namespace

extern "C" {

const char *tc_version(void) {
    return "0.1.0";
}

const char *tc_last_error(void) {
    return last_error.c_str();
}

void tc_string_free(char *text) {
    std::free(text);
}

tc_status tc_set_dense_limit(int n) {
    return guarded([&] {
        if (n < 1 || n > 30) {
            fail(ErrorKind::invalid_argument, "dense limit must be in 1..30");
        }
        set_dense_limit(static_cast<std::size_t>(n));
    });
}

tc_status tc_realization_load_file(const char *path, tc_realization **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        LoadedRealization loaded = realization_from_json(read_json_file(path));
        *out = new tc_realization{std::move(loaded.realization), loaded.floating};
    });
}

tc_status tc_realization_from_json(const char *text, tc_realization **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        LoadedRealization loaded = realization_from_json(parse_json(text));
        *out = new tc_realization{std::move(loaded.realization), loaded.floating};
    });
}

tc_status tc_realization_canonical(int n, tc_realization **out) {
    return guarded([&] {
        require(out, "out");
        *out = new tc_realization{canonical_observables(n), false};
    });
}

tc_status tc_realization_to_json(const tc_realization *real, char **out) {
    return guarded([&] {
        require(real, "realization");
        require(out, "out");
        *out = copy_string(dump_json(realization_to_json(real->realization, real->floating ? "float" : "")));
    });
}

tc_status tc_realization_info(const tc_realization *real, int *n, int *dim, int *floating) {
    return guarded([&] {
        require(real, "realization");
        if (n) {
            *n = real->realization.n;
        }
        if (dim) {
            *dim = static_cast<int>(real->realization.dim());
        }
        if (floating) {
            *floating = real->floating ? 1 : 0;
        }
    });
}

tc_status tc_realization_validate(const tc_realization *real, double operator_tol) {
    return guarded([&] {
        require(real, "realization");
        ValidationTolerance tol;
        if (operator_tol > 0) {
            tol.operator_tol = operator_tol;
        } else if (real->floating) {
            tol.operator_tol = 1e-6;
        }
        if (real->floating) {
            tol.state_tol = std::max(tol.state_tol, 1e-8);
        }
        validate_realization(real->realization, tol);
    });
}

void tc_realization_free(tc_realization *real) {
    delete real;
}

tc_status tc_inequality_build(int n, tc_flavor flavor, tc_inequality **out) {
    return guarded([&] {
        require(out, "out");
        if (flavor != TC_FLAVOR_TEMPORAL && flavor != TC_FLAVOR_NONCONTEXTUAL) {
            fail(ErrorKind::invalid_argument, "unknown flavor");
        }
        *out = new tc_inequality{flavor == TC_FLAVOR_TEMPORAL ? build_Tn(n) : build_In(n)};
    });
}

tc_status tc_inequality_load_file(const char *path, tc_inequality **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new tc_inequality{inequality_from_json(read_json_file(path))};
    });
}

tc_status tc_inequality_from_json(const char *text, tc_inequality **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new tc_inequality{inequality_from_json(parse_json(text))};
    });
}

tc_status tc_inequality_to_json(const tc_inequality *ineq, char **out) {
    return guarded([&] {
        require(ineq, "inequality");
        require(out, "out");
        *out = copy_string(dump_json(inequality_to_json(ineq->inequality)));
    });
}

tc_status tc_inequality_info(const tc_inequality *ineq, int *n, size_t *terms) {
    return guarded([&] {
        require(ineq, "inequality");
        if (n) {
            *n = ineq->inequality.n;
        }
        if (terms) {
            *terms = ineq->inequality.terms.size();
        }
    });
}

void tc_inequality_free(tc_inequality *ineq) {
    delete ineq;
}

tc_status tc_bound_formulas(int n, int64_t *eta_c, int64_t *eta_q, int64_t *alpha) {
    return guarded([&] {
        BoundFormulas b = bound_formulas(n);
        if (eta_c) {
            *eta_c = b.eta_c;
        }
        if (eta_q) {
            *eta_q = b.eta_q;
        }
        if (alpha) {
            *alpha = b.alpha;
        }
    });
}

tc_status tc_classical_bound(const tc_inequality *ineq, unsigned workers, int64_t *value) {
    return guarded([&] {
        require(ineq, "inequality");
        require(value, "value");
        *value = classical_bound_bruteforce(ineq->inequality, workers).value;
    });
}

tc_status tc_bounds_report(int n, unsigned workers, tc_format format, char **out) {
    return guarded([&] {
        require(out, "out");
        BoundFormulas b = bound_formulas(n);
        const std::size_t labels = label_count(n);
        Json doc = {{"n", n}, {"eta_C", b.eta_c}, {"eta_Q", b.eta_q}, {"alpha", b.alpha}, {"labels", labels}};
        std::string notice;
        if (labels <= kMaxBruteForceLabels) {
            BruteForceResult r = classical_bound_bruteforce(build_Tn(n), workers);
            doc["bruteforce"] = r.value;
            doc["agrees"] = r.value == b.eta_c;
        } else {
            notice = "brute force skipped: " + std::to_string(labels) + " labels > " +
                     std::to_string(kMaxBruteForceLabels);
            doc["bruteforce"] = nullptr;
            doc["notice"] = notice;
        }
        if (format == TC_FORMAT_TABLE) {
            std::ostringstream os;
            os << "n           " << n << "\n";
            os << "alpha       " << b.alpha << "\n";
            os << "eta_C       " << b.eta_c << "\n";
            os << "eta_Q       " << b.eta_q << "\n";
            if (notice.empty()) {
                os << "brute force " << doc["bruteforce"].get<std::int64_t>()
                   << (doc["agrees"].get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
            } else {
                os << notice << "\n";
            }
            *out = copy_string(os.str());
        } else {
            *out = copy_string(dump_json(doc));
        }
    });
}

tc_status tc_evaluate(const tc_inequality *ineq, const tc_realization *real, unsigned workers, tc_format format,
                      char **report, double *total) {
    return guarded([&] {
        require(ineq, "inequality");
        require(real, "realization");
        EvaluationReport r = evaluate(ineq->inequality, real->realization, workers);
        if (total) {
            *total = r.total;
        }
        if (report) {
            *report = copy_string(format == TC_FORMAT_TABLE ? evaluation_table(ineq->inequality, r)
                                                            : dump_json(evaluation_to_json(ineq->inequality, r)));
        }
    });
}

tc_status tc_default_tolerances(const tc_realization *real, tc_tolerances *out) {
    return guarded([&] {
        require(out, "out");
        Tolerances t = real && real->floating ? Tolerances::floating() : Tolerances{};
        *out = {t.relation, t.rank, t.unitary};
    });
}

tc_status tc_certify(const tc_realization *real, const tc_tolerances *tol, unsigned workers, int all_stages,
                     tc_format format, char **report, int *passed) {
    return guarded([&] {
        require(real, "realization");
        CertifyOptions options;
        options.tolerances = real->floating ? Tolerances::floating() : Tolerances{};
        if (tol) {
            if (!(tol->relation > 0 && tol->rank > 0 && tol->unitary > 0)) {
                fail(ErrorKind::invalid_argument, "tolerances must be positive");
            }
            options.tolerances = {tol->relation, tol->rank, tol->unitary};
        }
        options.short_circuit = all_stages == 0;
        options.workers = workers;
        CertificationReport r = certify(real->realization, options);
        if (passed) {
            *passed = r.passed ? 1 : 0;
        }
        if (report) {
            *report = copy_string(format == TC_FORMAT_TABLE ? certification_table(r)
                                                            : dump_json(certification_to_json(r)));
        }
    });
}

tc_status tc_write_fixtures(const char *directory, uint64_t seed, char **manifest) {
    return guarded([&] {
        require(directory, "directory");
        Json m = write_fixtures(directory, seed);
        if (manifest) {
            *manifest = copy_string(dump_json(m));
        }
    });
}

uint64_t tc_default_seed(void) {
    return kDefaultSeed;
}

}  // extern "C"
