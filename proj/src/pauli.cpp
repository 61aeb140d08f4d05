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

#include "tempcert/pauli.hpp"

#include <bit>

#include "tempcert/config.hpp"
#include "tempcert/error.hpp"

namespace tempcert {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) {
    return (width + kWordBits - 1) / kWordBits;
}

std::complex<double> i_power(unsigned k) {
    switch (k & 3U) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

void require_same_width(const PauliString &lhs, const PauliString &rhs, const char *op) {
    if (lhs.width() != rhs.width()) {
        fail(ErrorKind::dimension_mismatch, std::string(op) + ": width mismatch (" + std::to_string(lhs.width()) +
                                                " vs " + std::to_string(rhs.width()) + ")");
    }
}

bool get_bit(const std::vector<std::uint64_t> &words, std::size_t k) {
    return ((words[k / kWordBits] >> (k % kWordBits)) & 1U) != 0;
}

void put_bit(std::vector<std::uint64_t> &words, std::size_t k, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
    if (value) {
        words[k / kWordBits] |= mask;
    } else {
        words[k / kWordBits] &= ~mask;
    }
}

}  // namespace

PauliString::PauliString(std::size_t width)
    : width_(width), xs_(word_count(width), 0), zs_(word_count(width), 0) {
    if (width == 0) {
        fail(ErrorKind::invalid_argument, "PauliString width must be at least 1");
    }
}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t log_i = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            log_i = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        log_i = static_cast<std::uint8_t>(log_i + 1);
        text.remove_prefix(1);
    }
    if (text.empty()) {
        fail(ErrorKind::invalid_argument, "Pauli string has no qubits");
    }
    PauliString result(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        result.set_letter(q, text[q]);
    }
    result.log_i_ = log_i;
    return result;
}

PauliString PauliString::single(std::size_t width, std::size_t qubit, char letter) {
    PauliString result(width);
    result.set_letter(qubit, letter);
    return result;
}

std::complex<double> PauliString::phase() const noexcept {
    return i_power(log_i_);
}

bool PauliString::x(std::size_t qubit) const {
    return get_bit(xs_, qubit);
}

bool PauliString::z(std::size_t qubit) const {
    return get_bit(zs_, qubit);
}

char PauliString::letter(std::size_t qubit) const {
    if (qubit >= width_) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    bool xb = x(qubit);
    bool zb = z(qubit);
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    return zb ? 'Z' : 'I';
}

void PauliString::set_letter(std::size_t qubit, char letter) {
    if (qubit >= width_) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    bool xb = false;
    bool zb = false;
    switch (letter) {
        case 'I':
        case '_':
            break;
        case 'X':
            xb = true;
            break;
        case 'Z':
            zb = true;
            break;
        case 'Y':
            xb = true;
            zb = true;
            break;
        default:
            fail(ErrorKind::invalid_argument, std::string("invalid Pauli letter '") + letter + "'");
    }
    put_bit(xs_, qubit, xb);
    put_bit(zs_, qubit, zb);
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[log_i_ & 3U];
    out.reserve(out.size() + width_);
    for (std::size_t q = 0; q < width_; ++q) {
        out.push_back(letter(q));
    }
    return out;
}

PauliString PauliString::operator-() const {
    PauliString result = *this;
    result.mul_phase(2);
    return result;
}

PauliString pauli_mul(const PauliString &lhs, const PauliString &rhs) {
    require_same_width(lhs, rhs, "pauli_mul");
    PauliString result(lhs.width_);
    // Single-letter products: XY=iZ, YZ=iX, ZX=iY contribute +1 to the exponent
    // of i; the reversed orders contribute -1.
    int plus = 0;
    int minus = 0;
    for (std::size_t w = 0; w < lhs.xs_.size(); ++w) {
        std::uint64_t x1 = lhs.xs_[w];
        std::uint64_t z1 = lhs.zs_[w];
        std::uint64_t x2 = rhs.xs_[w];
        std::uint64_t z2 = rhs.zs_[w];
        std::uint64_t px1 = x1 & ~z1;
        std::uint64_t py1 = x1 & z1;
        std::uint64_t pz1 = ~x1 & z1;
        std::uint64_t px2 = x2 & ~z2;
        std::uint64_t py2 = x2 & z2;
        std::uint64_t pz2 = ~x2 & z2;
        plus += std::popcount((px1 & py2) | (py1 & pz2) | (pz1 & px2));
        minus += std::popcount((py1 & px2) | (pz1 & py2) | (px1 & pz2));
        result.xs_[w] = x1 ^ x2;
        result.zs_[w] = z1 ^ z2;
    }
    int exponent = lhs.log_i_ + rhs.log_i_ + plus - minus;
    result.log_i_ = static_cast<std::uint8_t>(((exponent % 4) + 4) % 4);
    return result;
}

bool commutes(const PauliString &lhs, const PauliString &rhs) {
    require_same_width(lhs, rhs, "commutes");
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < lhs.xs_.size(); ++w) {
        parity ^= (lhs.xs_[w] & rhs.zs_[w]) ^ (lhs.zs_[w] & rhs.xs_[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

PauliString tensor(const PauliString &lhs, const PauliString &rhs) {
    PauliString result(lhs.width_ + rhs.width_);
    for (std::size_t q = 0; q < lhs.width_; ++q) {
        put_bit(result.xs_, q, lhs.x(q));
        put_bit(result.zs_, q, lhs.z(q));
    }
    for (std::size_t q = 0; q < rhs.width_; ++q) {
        put_bit(result.xs_, lhs.width_ + q, rhs.x(q));
        put_bit(result.zs_, lhs.width_ + q, rhs.z(q));
    }
    result.log_i_ = static_cast<std::uint8_t>((lhs.log_i_ + rhs.log_i_) & 3U);
    return result;
}

Eigen::MatrixXcd to_dense(const PauliString &pauli, std::size_t limit) {
    const std::size_t n = pauli.width();
    if (n > limit) {
        fail(ErrorKind::invalid_argument,
             "to_dense: " + std::to_string(n) + " qubits exceeds the dense limit of " + std::to_string(limit));
    }
    // Big-endian basis: qubit q is bit (n-1-q) of the index.
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    unsigned y_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        if (pauli.x(q)) {
            xmask |= bit;
        }
        if (pauli.z(q)) {
            zmask |= bit;
        }
        if (pauli.x(q) && pauli.z(q)) {
            ++y_count;
        }
    }
    // Y|b> = i (-1)^b |b^1>, so column c maps to row c^xmask with
    // coefficient i^(k + #Y) (-1)^popcount(c & zmask).
    const std::complex<double> base = i_power(pauli.log_i() + y_count);
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(dim); ++c) {
        bool negate = (std::popcount(c & zmask) & 1) != 0;
        out(static_cast<Eigen::Index>(c ^ xmask), static_cast<Eigen::Index>(c)) = negate ? -base : base;
    }
    return out;
}

Eigen::MatrixXcd to_dense(const PauliString &pauli) {
    return to_dense(pauli, dense_limit());
}

}  // namespace tempcert
