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

#include "fockspec/spectral/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "fockspec/core/combinatorics.hpp"

namespace fockspec {

IndexFunction::IndexFunction(std::map<int, unsigned> values) {
    for (const auto &[k, v] : values) {
        if (k == 0) {
            throw DomainError("index function domain must exclude 0");
        }
        if (v > 0) {
            values_.emplace(k, v);
        }
    }
    if (values_.empty()) {
        throw DomainError("index function needs a nonempty domain");
    }
}

IndexFunction IndexFunction::x_pq(unsigned p, unsigned q) {
    std::map<int, unsigned> v;
    if (p) v[1] = p;
    if (q) v[-1] = q;
    return IndexFunction(std::move(v));
}

IndexFunction IndexFunction::parse(const std::string &text) {
    std::map<int, unsigned> v;
    std::string cleaned;
    for (char c : text) {
        if (c == '{' || c == '}' || c == ' ') continue;
        cleaned.push_back(c == ',' ? ' ' : c);
    }
    std::istringstream in(cleaned);
    std::string item;
    while (in >> item) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw DomainError("index function entry '" + item + "' is not k:v");
        }
        int k = std::stoi(item.substr(0, colon));
        int val = std::stoi(item.substr(colon + 1));
        if (val < 0) {
            throw DomainError("index function values must be positive");
        }
        v[k] += static_cast<unsigned>(val);
    }
    return IndexFunction(std::move(v));
}

unsigned IndexFunction::at(int k) const {
    auto it = values_.find(k);
    return it == values_.end() ? 0 : it->second;
}

unsigned IndexFunction::slot_count() const {
    unsigned n = 0;
    for (const auto &[k, v] : values_) n += v;
    return n;
}

bool IndexFunction::is_unit_supported() const {
    for (const auto &[k, v] : values_) {
        if (k != 1 && k != -1) return false;
    }
    return true;
}

std::string IndexFunction::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto &[k, v] : values_) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out + "}";
}

std::vector<Slot> slots(const IndexFunction &x) {
    std::vector<Slot> out;
    for (const auto &[k, v] : x.values()) {
        for (unsigned i = 0; i < v; i++) {
            out.push_back(Slot{k, i});
        }
    }
    return out;
}

IndexFunction oplus(const IndexFunction &x, const IndexFunction &y) {
    auto v = x.values();
    for (const auto &[k, n] : y.values()) {
        v[k] += n;
    }
    return IndexFunction(std::move(v));
}

IndexFunction scale_index(int m, const IndexFunction &x) {
    if (m == 0) {
        throw DomainError("scale_index: multiplier must be nonzero");
    }
    std::map<int, unsigned> v;
    for (const auto &[k, n] : x.values()) {
        v[m * k] = n;
    }
    return IndexFunction(std::move(v));
}

namespace {

size_t checked_product(size_t a, size_t b, size_t cap, const char *what) {
    if (b != 0 && a > cap / b) {
        throw BoundError(std::string(what) + " exceeds cap " + std::to_string(cap));
    }
    return a * b;
}

/// Calls visit for every element of the product of the given per-block permutation sets.
template <class Visit>
void for_each_block_permutation(const std::vector<size_t> &block_sizes, Visit &&visit) {
    std::vector<std::vector<size_t>> perms(block_sizes.size());
    for (size_t b = 0; b < block_sizes.size(); b++) {
        perms[b].resize(block_sizes[b]);
        for (size_t i = 0; i < block_sizes[b]; i++) perms[b][i] = i;
    }
    while (true) {
        visit(perms);
        size_t b = 0;
        for (; b < perms.size(); b++) {
            if (std::next_permutation(perms[b].begin(), perms[b].end())) {
                break;
            }
        }
        if (b == perms.size()) {
            return;
        }
    }
}

}  // namespace

std::vector<SlotPermutation> good_permutations(const IndexFunction &x, const Limits &limits) {
    std::vector<size_t> sizes;
    size_t count = 1;
    for (const auto &[k, v] : x.values()) {
        sizes.push_back(v);
        count = checked_product(count, factorial(v).get_ui(), limits.max_enumeration, "good permutation count");
    }
    std::vector<SlotPermutation> out;
    out.reserve(count);
    for_each_block_permutation(sizes, [&](const std::vector<std::vector<size_t>> &perms) {
        SlotPermutation delta;
        size_t offset = 0;
        for (size_t b = 0; b < perms.size(); b++) {
            for (size_t i : perms[b]) {
                delta.push_back(offset + i);
            }
            offset += sizes[b];
        }
        out.push_back(std::move(delta));
    });
    return out;
}

GridCell permute_cell(const GridCell &cell, const SlotPermutation &delta) {
    GridCell out = cell;
    for (size_t j = 0; j < delta.size(); j++) {
        out.coords[delta[j]] = cell.coords[j];
    }
    return out;
}

DepthMeasure::DepthMeasure(IndexFunction x, unsigned depth) : x_(std::move(x)), depth_(depth) {
}

DepthMeasure DepthMeasure::uniform(const IndexFunction &x, unsigned depth, const Limits &limits) {
    const unsigned d = x.slot_count();
    if (static_cast<unsigned long>(depth) * d >= 63 ||
        (size_t{1} << (depth * d)) > limits.max_cells) {
        throw BoundError("uniform measure on (2^" + std::to_string(depth) + ")^" + std::to_string(d) +
                         " exceeds cell cap");
    }
    DepthMeasure out(x, depth);
    const mpq_class w = pow2(-static_cast<int>(depth * d));
    const uint64_t per = uint64_t{1} << depth;
    const uint64_t total = uint64_t{1} << (depth * d);
    for (uint64_t idx = 0; idx < total; idx++) {
        GridCell cell;
        uint64_t rest = idx;
        cell.coords.resize(d);
        for (unsigned i = 0; i < d; i++) {
            cell.coords[d - 1 - i] = BinarySeq(depth, rest % per);
            rest /= per;
        }
        out.weights_.emplace(std::move(cell), w);
    }
    return out;
}

mpq_class DepthMeasure::weight(const GridCell &cell) const {
    auto it = weights_.find(cell);
    return it == weights_.end() ? mpq_class(0) : it->second;
}

void DepthMeasure::add(const GridCell &cell, const mpq_class &w) {
    if (sgn(w) < 0) {
        throw DomainError("negative cylinder weight");
    }
    if (cell.coords.size() != x_.slot_count()) {
        throw DomainError("cell arity differs from |D(x)|");
    }
    for (const auto &c : cell.coords) {
        if (c.length() != depth_) {
            throw DomainError("cell coordinate not at measure depth");
        }
    }
    if (sgn(w) == 0) {
        return;
    }
    weights_[cell] += w;
}

mpq_class DepthMeasure::mass() const {
    mpq_class out = 0;
    for (const auto &[c, w] : weights_) out += w;
    return out;
}

DepthMeasure DepthMeasure::coarsen() const {
    if (depth_ == 0) {
        throw DomainError("cannot coarsen a depth-0 measure");
    }
    DepthMeasure out(x_, depth_ - 1);
    for (const auto &[cell, w] : weights_) {
        GridCell parent;
        for (const auto &c : cell.coords) parent.coords.push_back(c.prefix(depth_ - 1));
        out.weights_[parent] += w;
    }
    return out;
}

bool DepthMeasure::is_good_invariant(const Limits &limits) const {
    auto perms = good_permutations(x_, limits);
    for (const auto &[cell, w] : weights_) {
        for (const auto &delta : perms) {
            if (weight(permute_cell(cell, delta)) != w) {
                return false;
            }
        }
    }
    return true;
}

mpq_class DepthMeasure::diagonal_mass(size_t a, size_t b) const {
    mpq_class out = 0;
    for (const auto &[cell, w] : weights_) {
        if (cell.coords.at(a) == cell.coords.at(b)) out += w;
    }
    return out;
}

bool DepthMeasure::support_contained_in(const DepthMeasure &other) const {
    if (!(x_ == other.x_) || depth_ != other.depth_) {
        throw DomainError("support comparison across different grids");
    }
    for (const auto &[cell, w] : weights_) {
        if (sgn(other.weight(cell)) == 0) return false;
    }
    return true;
}

std::string DepthMeasure::str() const {
    std::string out = "measure over " + x_.str() + " at depth " + std::to_string(depth_) + ":";
    for (const auto &[cell, w] : weights_) {
        out += " " + cell.str() + "=" + w.get_str();
    }
    return out;
}

CompatibilityReport is_compatible(const std::vector<DepthMeasure> &family, const Limits &limits) {
    if (family.empty()) {
        throw DomainError("compatibility check needs at least one depth");
    }
    for (size_t i = 1; i < family.size(); i++) {
        if (!(family[i].index() == family[0].index()) || family[i].depth() != family[i - 1].depth() + 1) {
            throw DomainError("measure family must share x and cover consecutive depths");
        }
        if (!(family[i].coarsen() == family[i - 1])) {
            throw DomainError("incoherent measure family: depth " + std::to_string(family[i].depth()) +
                              " does not coarsen to depth " + std::to_string(family[i - 1].depth()));
        }
    }
    CompatibilityReport rep;
    rep.marginal_note = "not falsifiable at finite depth: every depth-n marginal is carried by cells of positive lambda-mass";
    const size_t d = family[0].index().slot_count();
    for (const auto &mu : family) {
        rep.depths.push_back(mu.depth());
        bool inv = mu.is_good_invariant(limits);
        rep.invariant_per_depth.push_back(inv);
        rep.invariant = rep.invariant && inv;
        mpq_class diag = 0;
        for (size_t a = 0; a < d; a++) {
            for (size_t b = a + 1; b < d; b++) {
                diag += mu.diagonal_mass(a, b);
            }
        }
        rep.diagonal_masses.push_back(diag);
    }
    for (size_t i = 1; i < rep.diagonal_masses.size(); i++) {
        if (rep.diagonal_masses[i] > rep.diagonal_masses[i - 1]) rep.diagonals_nonincreasing = false;
    }
    const auto &first = rep.diagonal_masses.front();
    const auto &last = rep.diagonal_masses.back();
    rep.diagonals_decay = sgn(last) == 0 || last < first;
    return rep;
}

mpz_class pairing_count(const IndexFunction &x, const IndexFunction &y) {
    mpz_class out = 1;
    IndexFunction z = oplus(x, y);
    for (const auto &[k, n] : z.values()) {
        out *= factorial(n);
    }
    return out;
}

DepthMeasure tensor(const DepthMeasure &mu, const DepthMeasure &nu, const Limits &limits) {
    if (mu.depth() != nu.depth()) {
        throw DomainError("tensor of measures at different depths");
    }
    const IndexFunction &x = mu.index();
    const IndexFunction &y = nu.index();
    IndexFunction z = oplus(x, y);
    mpz_class count = pairing_count(x, y);
    if (count > mpz_class(static_cast<unsigned long>(limits.max_enumeration))) {
        throw BoundError("pairing set I exceeds cap");
    }
    size_t work = checked_product(count.get_ui(), mu.weights().size(), limits.max_cells * 64, "tensor work");
    checked_product(work, nu.weights().size(), limits.max_cells * 64, "tensor work");

    auto sx = slots(x);
    auto sy = slots(y);
    auto sz = slots(z);
    auto position = [&](const Slot &s) {
        return static_cast<size_t>(std::lower_bound(sz.begin(), sz.end(), s) - sz.begin());
    };

    std::vector<int> levels;
    std::vector<size_t> sizes;
    for (const auto &[k, n] : z.values()) {
        levels.push_back(k);
        sizes.push_back(n);
    }
    DepthMeasure out(z, mu.depth());
    for_each_block_permutation(sizes, [&](const std::vector<std::vector<size_t>> &perms) {
        // At level k the permutation lists images: first x(k) entries for x-slots, the rest for y-slots.
        std::vector<size_t> ix(sx.size());
        std::vector<size_t> iy(sy.size());
        for (size_t b = 0; b < levels.size(); b++) {
            int k = levels[b];
            unsigned xk = x.at(k);
            for (size_t j = 0; j < perms[b].size(); j++) {
                Slot target{k, static_cast<unsigned>(perms[b][j])};
                if (j < xk) {
                    auto src = std::lower_bound(sx.begin(), sx.end(), Slot{k, static_cast<unsigned>(j)}) - sx.begin();
                    ix[src] = position(target);
                } else {
                    auto src = std::lower_bound(sy.begin(), sy.end(), Slot{k, static_cast<unsigned>(j - xk)}) -
                               sy.begin();
                    iy[src] = position(target);
                }
            }
        }
        for (const auto &[a, wa] : mu.weights()) {
            for (const auto &[b, wb] : nu.weights()) {
                GridCell c;
                c.coords.resize(sz.size());
                for (size_t i = 0; i < sx.size(); i++) c.coords[ix[i]] = a.coords[i];
                for (size_t i = 0; i < sy.size(); i++) c.coords[iy[i]] = b.coords[i];
                out.add(c, wa * wb);
            }
        }
    });
    return out;
}

DepthMeasure scale_measure(int m, const DepthMeasure &mu) {
    IndexFunction mx = scale_index(m, mu.index());
    auto src = slots(mu.index());
    auto dst = slots(mx);
    std::vector<size_t> where(src.size());
    for (size_t i = 0; i < src.size(); i++) {
        Slot t{m * src[i].level, src[i].index};
        where[i] = static_cast<size_t>(std::lower_bound(dst.begin(), dst.end(), t) - dst.begin());
    }
    DepthMeasure out(mx, mu.depth());
    for (const auto &[cell, w] : mu.weights()) {
        GridCell c;
        c.coords.resize(cell.coords.size());
        for (size_t i = 0; i < where.size(); i++) c.coords[where[i]] = cell.coords[i];
        out.add(c, w);
    }
    return out;
}

std::optional<DepthMeasure> spectral_form(const IndexFunction &x, unsigned j, unsigned depth, const Limits &limits) {
    if (j != 1 || !x.is_unit_supported()) {
        return std::nullopt;
    }
    return DepthMeasure::uniform(x, depth, limits);
}

ConstraintReport check_constraint(const std::vector<int> &coefficients, const std::vector<IndexFunction> &indices,
                                  unsigned depth_min, unsigned depth_max, const Limits &limits) {
    if (coefficients.empty() || coefficients.size() != indices.size()) {
        throw DomainError("check_constraint needs matching nonempty coefficient and index lists");
    }
    if (depth_min > depth_max) {
        throw DomainError("empty depth range");
    }
    ConstraintReport rep{coefficients, indices, scale_index(coefficients[0], indices[0]), false, false, {}, {}, {}, true};
    for (size_t i = 1; i < indices.size(); i++) {
        rep.combined = oplus(rep.combined, scale_index(coefficients[i], indices[i]));
    }
    for (unsigned depth = depth_min; depth <= depth_max; depth++) {
        rep.depths.push_back(depth);
        std::optional<DepthMeasure> lhs;
        for (size_t i = 0; i < indices.size(); i++) {
            auto f = spectral_form(indices[i], 1, depth, limits);
            if (!f) {
                lhs.reset();
                rep.lhs_zero = true;
                break;
            }
            DepthMeasure scaled = scale_measure(coefficients[i], *f);
            lhs = lhs ? tensor(*lhs, scaled, limits) : scaled;
        }
        auto rhs = spectral_form(rep.combined, 1, depth, limits);
        rep.rhs_zero = !rhs.has_value();
        if (lhs) rep.lhs_mass.push_back(lhs->mass());
        if (rhs) rep.rhs_mass.push_back(rhs->mass());
        bool ok;
        if (!lhs || lhs->is_zero()) {
            ok = true;
        } else if (!rhs) {
            ok = false;
        } else {
            ok = lhs->support_contained_in(*rhs);
        }
        rep.abs_cont = rep.abs_cont && ok;
    }
    return rep;
}

}  // namespace fockspec
