// Copyright 2026 The benchmit Authors
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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace benchmit {

/// Single-qubit Pauli letter. The numeric values are stable and used in lookup tables.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// True when the two single-qubit letters commute (either is I or they are equal).
constexpr bool letters_commute(Pauli a, Pauli b) {
    return a == Pauli::I || b == Pauli::I || a == b;
}

/// A length-n word over {I,X,Y,Z}. Qubit 0 is the leftmost letter.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n) : letters_(n, Pauli::I) {}
    explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

    /// Parses e.g. "IIXIZ". Throws std::invalid_argument on any other character.
    static PauliString parse(std::string_view text);
    /// The string with `p` on `qubit` and I elsewhere.
    static PauliString single(std::size_t n, std::size_t qubit, Pauli p);

    std::size_t size() const { return letters_.size(); }
    Pauli operator[](std::size_t q) const { return letters_[q]; }
    void set(std::size_t q, Pauli p) { letters_[q] = p; }
    const std::vector<Pauli>& letters() const { return letters_; }

    /// 0-based indices of the non-identity letters, ascending.
    std::vector<std::size_t> support() const;
    std::size_t weight() const;

    /// True when every letter is I or Z.
    bool is_diagonal() const;
    bool commutes_with(const PauliString& other) const;

    /// Bit q of x_mask is set for X/Y letters; bit q of z_mask for Z/Y letters.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    std::size_t y_count() const;

    std::string str() const;

    bool operator==(const PauliString&) const = default;

   private:
    std::vector<Pauli> letters_;
};

/// Support of a Pauli string in the 1-based convention used when reporting.
struct PauliSupport {
    std::vector<std::size_t> qubits;
    std::size_t weight = 0;
};

/// Reporting-boundary view of the support: 1-based qubit labels plus the weight.
PauliSupport pauli_support(const PauliString& p);

}  // namespace benchmit
