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

#include "fockspec/core/binary_seq.hpp"

#include "fockspec/errors.hpp"

namespace fockspec {

BinarySeq::BinarySeq(unsigned length, uint64_t value) : length_(length), value_(value) {
    if (length > kMaxLength) {
        throw BoundError("binary sequence longer than " + std::to_string(kMaxLength));
    }
    if (length < 64 && (value >> length) != 0) {
        throw DomainError("binary sequence value does not fit its length");
    }
}

BinarySeq BinarySeq::parse(std::string_view text) {
    if (text == "e") {
        return {};
    }
    if (text.size() > kMaxLength) {
        throw BoundError("binary sequence longer than " + std::to_string(kMaxLength));
    }
    uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("not a binary digit: '" + std::string(1, c) + "'");
        }
        v = (v << 1) | static_cast<uint64_t>(c - '0');
    }
    return BinarySeq(static_cast<unsigned>(text.size()), v);
}

std::vector<BinarySeq> BinarySeq::all_of_length(unsigned n) {
    if (n > 24) {
        throw BoundError("refusing to list 2^" + std::to_string(n) + " sequences");
    }
    std::vector<BinarySeq> out;
    out.reserve(size_t{1} << n);
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        out.emplace_back(n, v);
    }
    return out;
}

int BinarySeq::digit(unsigned i) const {
    if (i >= length_) {
        throw DomainError("digit index out of range");
    }
    return static_cast<int>((value_ >> (length_ - 1 - i)) & 1);
}

BinarySeq BinarySeq::append(int d) const {
    if (d != 0 && d != 1) {
        throw DomainError("digit must be 0 or 1");
    }
    return BinarySeq(length_ + 1, (value_ << 1) | static_cast<uint64_t>(d));
}

BinarySeq BinarySeq::concat(const BinarySeq &suffix) const {
    return BinarySeq(length_ + suffix.length_, (value_ << suffix.length_) | suffix.value_);
}

BinarySeq BinarySeq::prefix(unsigned n) const {
    if (n > length_) {
        throw DomainError("prefix longer than sequence");
    }
    return BinarySeq(n, value_ >> (length_ - n));
}

bool BinarySeq::is_prefix_of(const BinarySeq &other) const {
    return length_ <= other.length_ && other.prefix(length_) == *this;
}

std::string BinarySeq::str() const {
    if (length_ == 0) {
        return "e";
    }
    std::string out(length_, '0');
    for (unsigned i = 0; i < length_; i++) {
        out[i] = static_cast<char>('0' + digit(i));
    }
    return out;
}

std::string Symbol::str() const {
    return barred ? "~" + word.str() : word.str();
}

Symbol Symbol::parse(std::string_view text) {
    if (!text.empty() && text.front() == '~') {
        return Symbol(BinarySeq::parse(text.substr(1)), true);
    }
    return Symbol(BinarySeq::parse(text), false);
}

}  // namespace fockspec
