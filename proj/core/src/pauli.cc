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

#include "benchmit/pauli.h"

#include <stdexcept>

namespace benchmit {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    throw std::logic_error("unreachable Pauli value");
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char c : text) {
        letters.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, Pauli p) {
    if (qubit >= n) {
        throw std::out_of_range("qubit index out of range for Pauli string");
    }
    PauliString s(n);
    s.set(qubit, p);
    return s;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] != Pauli::I) {
            out.push_back(q);
        }
    }
    return out;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (Pauli p : letters_) {
        w += p != Pauli::I;
    }
    return w;
}

bool PauliString::is_diagonal() const {
    for (Pauli p : letters_) {
        if (p == Pauli::X || p == Pauli::Y) {
            return false;
        }
    }
    return true;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("Pauli strings of different length");
    }
    std::size_t anti = 0;
    for (std::size_t q = 0; q < letters_.size(); q++) {
        anti += !letters_commute(letters_[q], other.letters_[q]);
    }
    return anti % 2 == 0;
}

std::uint64_t PauliString::x_mask() const {
    if (letters_.size() > 64) {
        throw std::length_error("bit masks limited to 64 qubits");
    }
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    if (letters_.size() > 64) {
        throw std::length_error("bit masks limited to 64 qubits");
    }
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] == Pauli::Z || letters_[q] == Pauli::Y) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::size_t PauliString::y_count() const {
    std::size_t c = 0;
    for (Pauli p : letters_) {
        c += p == Pauli::Y;
    }
    return c;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Pauli p : letters_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

PauliSupport pauli_support(const PauliString& p) {
    if (p.size() == 0) {
        throw std::invalid_argument("pauli_support of an empty string");
    }
    PauliSupport s;
    for (std::size_t q : p.support()) {
        s.qubits.push_back(q + 1);
    }
    s.weight = s.qubits.size();
    return s;
}

}  // namespace benchmit
