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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fockspec/core/binary_seq.hpp"
#include "fockspec/errors.hpp"

namespace fockspec {

/// Multiplicities m(sigma) and degrees d(sigma) = (p, q) of an admissible word.
struct WordStats {
    std::map<BinarySeq, unsigned> multiplicities;  // nonzero entries only
    unsigned p = 0;
    unsigned q = 0;

    unsigned multiplicity(const BinarySeq &s) const {
        auto it = multiplicities.find(s);
        return it == multiplicities.end() ? 0 : it->second;
    }
};

/// An ordered arrangement ((r_1..r_p), (t_1..t_q)) of a word's unbarred entries
/// and de-barred barred entries.
struct Variant {
    std::vector<BinarySeq> unbarred;
    std::vector<BinarySeq> barred;

    bool operator==(const Variant &) const = default;
    auto operator<=>(const Variant &) const = default;
};

/// Sorted multiset of same-length symbols in which no s appears both barred and
/// unbarred. Indexes the basic product vector v_{sigma_1}...v_{sigma_l}.
class AdmissibleWord {
   public:
    /// Sorts the entries; throws DomainError if empty, mixed-level or inadmissible.
    explicit AdmissibleWord(std::vector<Symbol> entries);

    /// Parses "{0,0,~1}" (braces optional, whitespace ignored).
    static AdmissibleWord parse(std::string_view text);

    unsigned level() const { return level_; }
    unsigned degree() const { return static_cast<unsigned>(entries_.size()); }
    const std::vector<Symbol> &entries() const { return entries_; }

    WordStats stats() const;
    std::vector<Variant> variants() const;
    /// Runs of equal symbols: (symbol, count), in entry order.
    std::vector<std::pair<Symbol, unsigned>> runs() const;

    /// The word obtained by appending digits[i] to entry i (entry order).
    AdmissibleWord append_digits(const std::vector<int> &digits) const;

    std::string str() const;

    auto operator<=>(const AdmissibleWord &other) const {
        if (auto c = level_ <=> other.level_; c != 0) {
            return c;
        }
        if (auto c = entries_.size() <=> other.entries_.size(); c != 0) {
            return c;
        }
        return entries_ <=> other.entries_;
    }
    bool operator==(const AdmissibleWord &) const = default;

   private:
    unsigned level_ = 0;
    std::vector<Symbol> entries_;
};

/// p! q! / prod_s m_s!, the number of distinct variants.
size_t variant_count(const WordStats &stats);

/// Every admissible word of the given level and degree, once each, in canonical order.
/// Degree 0 yields nothing. Throws BoundError past the configured caps.
std::vector<AdmissibleWord> admissible_words(unsigned level, unsigned degree, const Limits &limits = {});

/// Words of degree 1..max_degree concatenated.
std::vector<AdmissibleWord> admissible_words_up_to(unsigned level, unsigned max_degree, const Limits &limits = {});

}  // namespace fockspec
