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

#include <cstdint>
#include <string>

#include "tempcert/json_io.hpp"

namespace tempcert {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Writes canonical, embedded (extra_dim 8, then a global rotation), perturbed
/// (eps 0.1) and classical (brute-force argmax, +-identity) realizations for
/// n = 3, 4, 5, a product-state control for n = 3, and manifest.json listing
/// every file with its T_n value and expected verdict. Output depends only on
/// `seed`. Returns the manifest.
Json write_fixtures(const std::string &directory, std::uint64_t seed = kDefaultSeed);

/// Seeds derived from the fixture seed, one stream per purpose and n.
std::uint64_t junk_seed(std::uint64_t seed, int n);
std::uint64_t rotate_seed(std::uint64_t seed, int n);
std::uint64_t perturb_seed(std::uint64_t seed, int n);

}  // namespace tempcert
