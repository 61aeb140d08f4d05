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

#include "tempcert/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace tempcert {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Operator random_unitary(Eigen::Index dim, Rng &rng) {
    Operator g(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            g(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Operator> qr(g);
    Operator q = qr.householderQ() * Operator::Identity(dim, dim);
    Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        Complex d = r(k, k);
        double mag = std::abs(d);
        q.col(k) *= mag > 0.0 ? d / mag : Complex{1.0, 0.0};
    }
    return q;
}

Operator random_hermitian_unit(Eigen::Index dim, Rng &rng) {
    Operator g(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            g(r, c) = rng.complex_normal();
        }
    }
    Operator h = (g + g.adjoint()) * 0.5;
    double norm = h.norm();
    if (norm > 0.0) {
        h /= norm;
    }
    return h;
}

Operator random_involution(Eigen::Index dim, Rng &rng) {
    Operator v = random_unitary(dim, rng);
    Eigen::VectorXcd signs(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        signs(k) = rng.coin() ? 1.0 : -1.0;
    }
    Operator m = v * signs.asDiagonal() * v.adjoint();
    return (m + m.adjoint()) * 0.5;
}

}  // namespace tempcert
