// Copyright 2026 The fockspec Authors
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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fockspec {

/// A finite binary sequence (possibly empty), an element of 2^n.
///
/// Digits are packed into `value` with the first digit most significant, so
/// for equal lengths numeric order is lexicographic order. Sequences are
/// ordered first by length, then lexicographically.
class BinarySeq {
   public:
    static constexpr unsigned kMaxLength = 32;

    BinarySeq() = default;
    BinarySeq(unsigned length, uint64_t value);

    /// Parses a string of '0'/'1' characters. The empty string (or "e") is the null sequence.
    static BinarySeq parse(std::string_view text);
    /// All 2^n sequences of length n in canonical order.
    static std::vector<BinarySeq> all_of_length(unsigned n);

    unsigned length() const { return length_; }
    uint64_t value() const { return value_; }
    /// Digit at 0-based position i.
    int digit(unsigned i) const;

    BinarySeq append(int digit) const;
    BinarySeq concat(const BinarySeq &suffix) const;
    BinarySeq prefix(unsigned n) const;
    bool is_prefix_of(const BinarySeq &other) const;

    std::string str() const;

    auto operator<=>(const BinarySeq &) const = default;
    bool operator==(const BinarySeq &) const = default;

   private:
    // Declaration order gives length-then-lexicographic comparison.
    unsigned length_ = 0;
    uint64_t value_ = 0;
};

/// An element of 2^n or its conjugate copy.
struct Symbol {
    // Unbarred symbols sort before barred ones.
    bool barred = false;
    BinarySeq word;

    Symbol() = default;
    Symbol(BinarySeq w, bool is_barred = false) : barred(is_barred), word(w) {
    }

    Symbol conj() const {
        return Symbol(word, !barred);
    }
    /// sigma epsilon; for a barred symbol conj(s) this is conj(s epsilon).
    Symbol append(int digit) const {
        return Symbol(word.append(digit), barred);
    }
    unsigned level() const {
        return word.length();
    }

    /// "01" for an unbarred symbol, "~01" for a barred one.
    std::string str() const;
    static Symbol parse(std::string_view text);

    auto operator<=>(const Symbol &) const = default;
    bool operator==(const Symbol &) const = default;
};

}  // namespace fockspec
