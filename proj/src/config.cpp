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

#include "tempcert/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace tempcert {
namespace {

constexpr std::size_t kDefaultDenseLimit = 12;

std::size_t limit_from_env() {
    const char *raw = std::getenv("TEMPCERT_DENSE_LIMIT");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultDenseLimit;
    }
    char *end = nullptr;
    unsigned long parsed = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0 || parsed > 30) {
        return kDefaultDenseLimit;
    }
    return static_cast<std::size_t>(parsed);
}

std::atomic<std::size_t> &limit_slot() {
    static std::atomic<std::size_t> slot{limit_from_env()};
    return slot;
}

}  // namespace

std::size_t dense_limit() {
    return limit_slot().load(std::memory_order_relaxed);
}

void set_dense_limit(std::size_t limit) {
    limit_slot().store(limit == 0 ? kDefaultDenseLimit : limit, std::memory_order_relaxed);
}

}  // namespace tempcert
