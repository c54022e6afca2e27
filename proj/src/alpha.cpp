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

#include "fockspec/alpha/alpha.hpp"

#include <algorithm>
#include <set>

namespace fockspec {

std::string GridCell::str() const {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); i++) {
        if (i) {
            out += ",";
        }
        out += "[" + coords[i].str() + "]";
    }
    return out + ")";
}

GridCell block_sorted(const GridCell &cell, unsigned p) {
    GridCell out = cell;
    std::sort(out.coords.begin(), out.coords.begin() + p);
    std::sort(out.coords.begin() + p, out.coords.end());
    return out;
}

std::vector<GridCell> block_orbit(const GridCell &cell, unsigned p) {
    GridCell base = block_sorted(cell, p);
    std::vector<BinarySeq> a(base.coords.begin(), base.coords.begin() + p);
    std::vector<BinarySeq> b(base.coords.begin() + p, base.coords.end());
    std::vector<GridCell> out;
    do {
        auto bb = b;
        do {
            GridCell c;
            c.coords = a;
            c.coords.insert(c.coords.end(), bb.begin(), bb.end());
            out.push_back(std::move(c));
        } while (std::next_permutation(bb.begin(), bb.end()));
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

std::vector<GridCell> refine_cell(const GridCell &cell) {
    const size_t k = cell.coords.size();
    std::vector<GridCell> out;
    out.reserve(size_t{1} << k);
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); mask++) {
        GridCell child;
        child.coords.reserve(k);
        for (size_t i = 0; i < k; i++) {
            child.coords.push_back(cell.coords[i].append(static_cast<int>((mask >> (k - 1 - i)) & 1)));
        }
        out.push_back(std::move(child));
    }
    return out;
}

std::vector<GridCell> support(const AdmissibleWord &w) {
    std::vector<GridCell> out;
    for (const auto &v : w.variants()) {
        GridCell c;
        c.coords = v.unbarred;
        c.coords.insert(c.coords.end(), v.barred.begin(), v.barred.end());
        out.push_back(std::move(c));
    }
    return out;
}

mpq_class support_measure(const AdmissibleWord &w) {
    return mpq_class(static_cast<unsigned long>(support(w).size())) *
           pow2(-static_cast<int>(w.level() * w.degree()));
}

mpq_class support_measure_formula(const AdmissibleWord &w) {
    WordStats st = w.stats();
    mpq_class out(factorial(st.p) * factorial(st.q));
    out /= mpq_class(basis_norm2(w));
    return out * pow2(-static_cast<int>(w.level() * w.degree()));
}

bool support_contains(const AdmissibleWord &w, const GridCell &point) {
    WordStats st = w.stats();
    if (point.coords.size() != w.degree()) {
        return false;
    }
    std::vector<BinarySeq> a;
    std::vector<BinarySeq> b;
    for (size_t i = 0; i < point.coords.size(); i++) {
        if (point.coords[i].length() < w.level()) {
            return false;
        }
        (i < st.p ? a : b).push_back(point.coords[i].prefix(w.level()));
    }
    std::vector<BinarySeq> r;
    std::vector<BinarySeq> t;
    for (const auto &e : w.entries()) {
        (e.barred ? t : r).push_back(e.word);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == r && b == t;
}

std::optional<AdmissibleWord> word_at_point(const GridCell &point, unsigned p, unsigned depth) {
    std::vector<Symbol> entries;
    for (size_t i = 0; i < point.coords.size(); i++) {
        entries.emplace_back(point.coords[i].prefix(depth), i >= p);
    }
    try {
        return AdmissibleWord(std::move(entries));
    } catch (const DomainError &) {
        return std::nullopt;
    }
}

}  // namespace fockspec
