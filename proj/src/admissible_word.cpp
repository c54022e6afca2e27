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

#include "fockspec/core/admissible_word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fockspec/core/combinatorics.hpp"

namespace fockspec {

AdmissibleWord::AdmissibleWord(std::vector<Symbol> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DomainError("admissible word must have degree >= 1");
    }
    std::sort(entries_.begin(), entries_.end());
    level_ = entries_.front().level();
    std::set<BinarySeq> plain;
    std::set<BinarySeq> bar;
    for (const auto &e : entries_) {
        if (e.level() != level_) {
            throw DomainError("mixed-level word " + str());
        }
        (e.barred ? bar : plain).insert(e.word);
    }
    for (const auto &s : plain) {
        if (bar.count(s)) {
            throw DomainError("inadmissible word " + str() + ": " + s.str() + " occurs barred and unbarred");
        }
    }
}

AdmissibleWord AdmissibleWord::parse(std::string_view text) {
    std::vector<Symbol> out;
    std::string token;
    auto flush = [&]() {
        if (!token.empty()) {
            out.push_back(Symbol::parse(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == '{' || c == '}' || c == ' ' || c == '\t') {
            continue;
        }
        if (c == ',') {
            flush();
            continue;
        }
        token.push_back(c);
    }
    flush();
    return AdmissibleWord(std::move(out));
}

WordStats AdmissibleWord::stats() const {
    WordStats out;
    for (const auto &e : entries_) {
        out.multiplicities[e.word] += 1;
        (e.barred ? out.q : out.p) += 1;
    }
    return out;
}

std::vector<Variant> AdmissibleWord::variants() const {
    std::vector<BinarySeq> r;
    std::vector<BinarySeq> t;
    for (const auto &e : entries_) {
        (e.barred ? t : r).push_back(e.word);
    }
    // Entries are sorted, so both lists start at their first permutation.
    std::vector<Variant> out;
    do {
        auto t_perm = t;
        do {
            out.push_back(Variant{r, t_perm});
        } while (std::next_permutation(t_perm.begin(), t_perm.end()));
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
}

std::vector<std::pair<Symbol, unsigned>> AdmissibleWord::runs() const {
    std::vector<std::pair<Symbol, unsigned>> out;
    for (const auto &e : entries_) {
        if (!out.empty() && out.back().first == e) {
            out.back().second++;
        } else {
            out.emplace_back(e, 1);
        }
    }
    return out;
}

AdmissibleWord AdmissibleWord::append_digits(const std::vector<int> &digits) const {
    if (digits.size() != entries_.size()) {
        throw DomainError("digit count differs from word degree");
    }
    std::vector<Symbol> out;
    out.reserve(entries_.size());
    for (size_t i = 0; i < entries_.size(); i++) {
        out.push_back(entries_[i].append(digits[i]));
    }
    return AdmissibleWord(std::move(out));
}

std::string AdmissibleWord::str() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < entries_.size(); i++) {
        if (i) {
            out << ',';
        }
        out << entries_[i].str();
    }
    out << '}';
    return out.str();
}

size_t variant_count(const WordStats &stats) {
    mpz_class n = factorial(stats.p) * factorial(stats.q);
    for (const auto &[s, m] : stats.multiplicities) {
        n /= factorial(m);
    }
    return n.get_ui();
}

std::vector<AdmissibleWord> admissible_words(unsigned level, unsigned degree, const Limits &limits) {
    if (degree == 0) {
        return {};
    }
    if (level > limits.max_level || degree > limits.max_degree) {
        throw BoundError(
            "enumeration at level " + std::to_string(level) + ", degree " + std::to_string(degree) +
            " exceeds caps (level <= " + std::to_string(limits.max_level) +
            ", degree <= " + std::to_string(limits.max_degree) + ")");
    }
    if (level >= BinarySeq::kMaxLength) {
        throw BoundError("level too large");
    }
    std::vector<Symbol> alphabet;
    for (bool barred : {false, true}) {
        for (const auto &s : BinarySeq::all_of_length(level)) {
            alphabet.emplace_back(s, barred);
        }
    }
    mpz_class total = multiset_count(static_cast<unsigned>(alphabet.size()), degree);
    if (total > mpz_class(static_cast<unsigned long>(limits.max_enumeration))) {
        throw BoundError("enumeration of " + total.get_str() + " multisets exceeds cap " +
                         std::to_string(limits.max_enumeration));
    }

    // Nondecreasing index sequences enumerate sorted multisets lexicographically.
    std::vector<AdmissibleWord> out;
    std::vector<size_t> idx(degree, 0);
    const size_t n = alphabet.size();
    while (true) {
        bool admissible = true;
        for (size_t i = 0; i < degree && admissible; i++) {
            for (size_t j = i + 1; j < degree; j++) {
                if (alphabet[idx[i]] == alphabet[idx[j]].conj()) {
                    admissible = false;
                    break;
                }
            }
        }
        if (admissible) {
            std::vector<Symbol> entries;
            entries.reserve(degree);
            for (size_t i : idx) {
                entries.push_back(alphabet[i]);
            }
            out.emplace_back(std::move(entries));
        }
        size_t pos = degree;
        while (pos > 0 && idx[pos - 1] == n - 1) {
            pos--;
        }
        if (pos == 0) {
            break;
        }
        idx[pos - 1]++;
        for (size_t j = pos; j < degree; j++) {
            idx[j] = idx[pos - 1];
        }
    }
    return out;
}

std::vector<AdmissibleWord> admissible_words_up_to(unsigned level, unsigned max_degree, const Limits &limits) {
    std::vector<AdmissibleWord> out;
    for (unsigned l = 1; l <= max_degree; l++) {
        auto words = admissible_words(level, l, limits);
        out.insert(out.end(), std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
    }
    return out;
}

}  // namespace fockspec
