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

#include <cstddef>

namespace tempcert {

/// Largest qubit count for which dense 2^n x 2^n matrices may be built.
/// Defaults to 12; the TEMPCERT_DENSE_LIMIT environment variable overrides the
/// default at first use, and set_dense_limit overrides both.
std::size_t dense_limit();
void set_dense_limit(std::size_t limit);

}  // namespace tempcert
