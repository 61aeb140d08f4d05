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
#include <random>

#include "tempcert/numerics.hpp"

namespace tempcert {

/// Seeded generator with a fixed output recipe so that fixtures are
/// reproducible across standard libraries: mt19937_64 words, 53-bit uniforms,
/// and Box-Muller normals. The std:: distributions are avoided because their
/// algorithms are implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next_word() {
        return engine_();
    }
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal.
    double normal();
    /// Complex normal with independent N(0,1/2) parts.
    Complex complex_normal();
    bool coin() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-random unitary via QR of a complex Ginibre matrix with phase fix.
Operator random_unitary(Eigen::Index dim, Rng &rng);
/// Random Hermitian matrix (GUE-like) scaled to unit Frobenius norm.
Operator random_hermitian_unit(Eigen::Index dim, Rng &rng);
/// V diag(+-1) V^dagger with Haar V and random signs.
Operator random_involution(Eigen::Index dim, Rng &rng);

}  // namespace tempcert
