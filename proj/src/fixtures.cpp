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

#include "tempcert/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "tempcert/error.hpp"

namespace tempcert {
namespace {

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorKind::io, "cannot write " + path.string());
    }
    out << text;
    if (!out.flush()) {
        fail(ErrorKind::io, "write failed for " + path.string());
    }
}

}  // namespace

std::uint64_t junk_seed(std::uint64_t seed, int n) {
    return seed + 100 * static_cast<std::uint64_t>(n) + 1;
}

std::uint64_t rotate_seed(std::uint64_t seed, int n) {
    return seed + 100 * static_cast<std::uint64_t>(n) + 2;
}

std::uint64_t perturb_seed(std::uint64_t seed, int n) {
    return seed + 100 * static_cast<std::uint64_t>(n) + 3;
}

Json write_fixtures(const std::string &directory, std::uint64_t seed) {
    namespace fs = std::filesystem;
    const fs::path dir(directory);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        fail(ErrorKind::io, "cannot create directory " + directory);
    }

    Json entries = Json::array();
    auto emit = [&](const std::string &file, const std::string &kind, const Realization &r,
                    const std::string &provenance, const char *verdict) {
        write_file(dir / file, dump_json(realization_to_json(r, provenance)));
        double value = evaluate(build_Tn(r.n), r).total;
        entries.push_back({{"file", file},
                           {"kind", kind},
                           {"n", r.n},
                           {"dim", r.dim()},
                           {"Tn_value", value},
                           {"expected_verdict", verdict}});
    };

    for (int n = 3; n <= 5; ++n) {
        const std::string suffix = "_n" + std::to_string(n) + ".json";
        Realization canonical = canonical_observables(n);
        emit("canonical" + suffix, "canonical", canonical, "", "pass");

        Realization embedded = rotate_realization(embed_realization(canonical, 8, junk_seed(seed, n)),
                                                  rotate_seed(seed, n));
        emit("embedded" + suffix, "embedded", embedded, "float", "pass");

        emit("perturbed" + suffix, "perturbed", perturb_realization(canonical, 0.1, perturb_seed(seed, n)), "",
             "fail");

        BruteForceResult best = classical_bound_bruteforce(build_Tn(n));
        emit("classical" + suffix, "classical", classical_realization(n, best.argmax), "", "fail");
    }

    Realization product = canonical_observables(3);
    product.state.setZero();
    product.state(0) = 1.0;
    emit("product_state_n3.json", "product_state", product, "", "fail");

    Json manifest = {{"seed", seed}, {"fixtures", std::move(entries)}};
    write_file(dir / "manifest.json", dump_json(manifest));
    return manifest;
}

}  // namespace tempcert
