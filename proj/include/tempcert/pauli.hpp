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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace tempcert {

/// A signed n-qubit Pauli operator i^k * (P_1 (x) P_2 (x) ... (x) P_n) stored in
/// the symplectic layout: one X bit and one Z bit per qubit, packed into 64-bit
/// words, plus a 2-bit exponent k of i.
///
/// Letters decode as (x,z) = (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y, where
/// Y is the Hermitian Pauli Y = i*X*Z. A string is Hermitian iff k is even.
/// Qubit 0 is the leftmost tensor factor (most significant bit of a dense index).
class PauliString {
   public:
    explicit PauliString(std::size_t width);

    /// Parses "+XZZ", "-IXY", "XZ" (implicit +), "+iXY", "iXY", "-iZ". '_' is accepted for I.
    static PauliString from_str(std::string_view text);
    /// Identity on `width` qubits except `letter` at `qubit`.
    static PauliString single(std::size_t width, std::size_t qubit, char letter);

    std::size_t width() const noexcept {
        return width_;
    }
    std::uint8_t log_i() const noexcept {
        return log_i_;
    }
    std::complex<double> phase() const noexcept;
    bool is_hermitian() const noexcept {
        return (log_i_ & 1U) == 0;
    }

    bool x(std::size_t qubit) const;
    bool z(std::size_t qubit) const;
    char letter(std::size_t qubit) const;
    void set_letter(std::size_t qubit, char letter);
    /// Multiplies the string by i^k.
    void mul_phase(std::uint8_t log_i) noexcept {
        log_i_ = static_cast<std::uint8_t>((log_i_ + log_i) & 3U);
    }

    std::string str() const;

    PauliString operator-() const;
    bool operator==(const PauliString &other) const = default;

    const std::vector<std::uint64_t> &x_words() const noexcept {
        return xs_;
    }
    const std::vector<std::uint64_t> &z_words() const noexcept {
        return zs_;
    }

   private:
    friend PauliString pauli_mul(const PauliString &lhs, const PauliString &rhs);
    friend PauliString tensor(const PauliString &lhs, const PauliString &rhs);
    friend bool commutes(const PauliString &lhs, const PauliString &rhs);

    std::size_t width_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    std::uint8_t log_i_ = 0;
};

/// Exact product lhs * rhs. Throws on width mismatch.
PauliString pauli_mul(const PauliString &lhs, const PauliString &rhs);

/// True iff the symplectic form sum_q (x_q z'_q + z_q x'_q) is even.
bool commutes(const PauliString &lhs, const PauliString &rhs);

/// lhs (x) rhs; lhs occupies the leading qubits.
PauliString tensor(const PauliString &lhs, const PauliString &rhs);

/// Exact 2^n x 2^n matrix. Throws when the width exceeds `limit` qubits.
Eigen::MatrixXcd to_dense(const PauliString &pauli, std::size_t limit);
Eigen::MatrixXcd to_dense(const PauliString &pauli);

}  // namespace tempcert
