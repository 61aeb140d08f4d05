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

#include <string>

#include <json.hpp>

#include "tempcert/certify.hpp"
#include "tempcert/inequalities.hpp"
#include "tempcert/model.hpp"

namespace tempcert {

using Json = nlohmann::json;

struct LoadedRealization {
    Realization realization;
    /// The file declared "provenance": "float".
    bool floating = false;
};

/// {"n", "dim", "state": [[re,im],...], "observables": {"A1": [[[re,im],...],...]}}
/// plus "provenance" when `provenance` is non-empty. Matrices row-major.
Json realization_to_json(const Realization &realization, const std::string &provenance = "");
/// Throws ErrorKind::schema on malformed documents (wrong shapes, bad labels,
/// non-numeric entries). Does not check Hermiticity; see validate_realization.
LoadedRealization realization_from_json(const Json &doc);

Json inequality_to_json(const Inequality &inequality);
/// Rebuilds terms from labels and covers; rejects covers that are not
/// permutations of the term's positions or do not reach every ordering.
Inequality inequality_from_json(const Json &doc);

Json evaluation_to_json(const Inequality &inequality, const EvaluationReport &report);
Json certification_to_json(const CertificationReport &report);
Json tolerances_to_json(const Tolerances &tol);

std::string evaluation_table(const Inequality &inequality, const EvaluationReport &report);
std::string certification_table(const CertificationReport &report);

/// Parses text, mapping parse failures to ErrorKind::schema.
Json parse_json(const std::string &text);
/// Reads and parses a file; ErrorKind::io when it cannot be read.
Json read_json_file(const std::string &path);
/// Serialized form written by the tools: two-space indent, trailing newline.
std::string dump_json(const Json &doc);

}  // namespace tempcert
