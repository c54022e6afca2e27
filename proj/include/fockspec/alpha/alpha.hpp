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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockspec/core/admissible_word.hpp"
#include "fockspec/core/combinatorics.hpp"
#include "fockspec/core/radical.hpp"
#include "fockspec/core/torus_step.hpp"
#include "fockspec/fock/fock_vector.hpp"

namespace fockspec {

/// The cylinder [c_1] x ... x [c_{p+q}] of (2^N)^{p+q}; all coordinates share one length.
struct GridCell {
    std::vector<BinarySeq> coords;

    auto operator<=>(const GridCell &) const = default;
    bool operator==(const GridCell &) const = default;
    std::string str() const;
};

/// The cell with the first p and the last q coordinates sorted.
GridCell block_sorted(const GridCell &cell, unsigned p);
/// Every distinct cell obtained by permuting the two coordinate blocks.
std::vector<GridCell> block_orbit(const GridCell &cell, unsigned p);
/// The 2^{p+q} children of a cell one level deeper.
std::vector<GridCell> refine_cell(const GridCell &cell);

/// Cells of supp<sigma>: one per variant of w.
std::vector<GridCell> support(const AdmissibleWord &w);
/// lambda^l(supp<sigma>) computed as cell count * 2^{-nl}.
mpq_class support_measure(const AdmissibleWord &w);
/// p! q! / (2^{nl} prod_s m_s!).
mpq_class support_measure_formula(const AdmissibleWord &w);
/// Whether the depth >= n point lies in supp<sigma> for the level-n word w.
bool support_contains(const AdmissibleWord &w, const GridCell &point);

/// The word (a_1|n, ..., a_p|n, conj(b_1|n), ..., conj(b_q|n)) of a point of
/// (2^N)^p x (2^N)^q; empty when some a_i|n == b_j|n.
std::optional<AdmissibleWord> word_at_point(const GridCell &point, unsigned p, unsigned depth);

/// A block-symmetric step function on the depth-n grid of C_{p,q}, equal to
/// sqrt(kappa) * values[cell] on each listed cell and zero elsewhere.
template <Scalar S>
class AlphaElement {
   public:
    using Values = std::map<GridCell, S>;

    AlphaElement(unsigned p, unsigned q, unsigned depth) : p_(p), q_(q), depth_(depth) {
        if (p + q == 0) {
            throw DomainError("alpha element needs p + q > 0");
        }
    }

    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    unsigned depth() const { return depth_; }
    /// Common radical; 0 while the element is empty.
    const mpz_class &radical() const { return kappa_; }
    const Values &values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    /// Adds sqrt(kappa) * value on the cell.
    void add(const GridCell &cell, const S &value, const mpz_class &kappa) {
        if (cell.coords.size() != p_ + q_) {
            throw DomainError("cell arity differs from p + q");
        }
        for (const auto &c : cell.coords) {
            if (c.length() != depth_) {
                throw DomainError("cell coordinate " + c.str() + " not at depth " + std::to_string(depth_));
            }
        }
        adopt_radical(kappa);
        if (value.is_zero()) {
            return;
        }
        auto [it, inserted] = values_.try_emplace(cell, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) {
                values_.erase(it);
            }
        }
        if (values_.empty()) {
            kappa_ = 0;
        }
    }

    /// The same function on the depth+1 grid.
    AlphaElement refine(const Limits &limits = {}) const {
        if (depth_ + 1 > limits.max_depth) {
            throw BoundError("refinement past depth cap " + std::to_string(limits.max_depth));
        }
        AlphaElement out(p_, q_, depth_ + 1);
        if (values_.size() * (size_t{1} << (p_ + q_)) > limits.max_cells) {
            throw BoundError("refinement exceeds cell cap");
        }
        for (const auto &[cell, v] : values_) {
            for (auto &child : refine_cell(cell)) {
                out.values_.emplace(std::move(child), v);
            }
        }
        out.kappa_ = kappa_;
        return out;
    }

    AlphaElement refined_to(unsigned depth, const Limits &limits = {}) const {
        if (depth < depth_) {
            throw DomainError("cannot coarsen an alpha element");
        }
        AlphaElement out = *this;
        while (out.depth_ < depth) {
            out = out.refine(limits);
        }
        return out;
    }

    AlphaElement &operator+=(const AlphaElement &o) {
        if (o.p_ != p_ || o.q_ != q_) {
            throw DomainError("adding alpha elements of different degrees");
        }
        if (o.depth_ > depth_) {
            *this = refined_to(o.depth_);
        }
        const AlphaElement &rhs = o.depth_ < depth_ ? o.refined_to(depth_) : o;
        for (const auto &[cell, v] : rhs.values_) {
            add(cell, v, rhs.kappa_);
        }
        return *this;
    }

    friend AlphaElement operator*(const S &c, const AlphaElement &f) {
        AlphaElement out(f.p_, f.q_, f.depth_);
        for (const auto &[cell, v] : f.values_) {
            out.add(cell, c * v, f.kappa_);
        }
        return out;
    }

    /// Invariance under permutations of the first p and of the last q coordinates.
    bool is_block_symmetric() const {
        for (const auto &[cell, v] : values_) {
            for (const auto &image : block_orbit(cell, p_)) {
                auto it = values_.find(image);
                if (it == values_.end() || !(it->second == v)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool operator==(const AlphaElement &o) const {
        return p_ == o.p_ && q_ == o.q_ && depth_ == o.depth_ && kappa_ == o.kappa_ && values_ == o.values_;
    }

    friend bool close(const AlphaElement &a, const AlphaElement &b, double tol) {
        if (a.p_ != b.p_ || a.q_ != b.q_ || a.depth_ != b.depth_) {
            return false;
        }
        if (a.is_zero() || b.is_zero() || a.kappa_ == b.kappa_) {
            auto diff = a;
            diff += (-S::one()) * b;
            for (const auto &[cell, v] : diff.values_) {
                if (!close(v, S{}, tol)) {
                    return false;
                }
            }
            return true;
        }
        return false;
    }

   private:
    void adopt_radical(const mpz_class &kappa) {
        if (values_.empty()) {
            kappa_ = kappa;
        } else if (kappa_ != kappa) {
            throw DomainError("alpha values with incommensurable radicals sqrt(" + kappa_.get_str() + ") and sqrt(" +
                              kappa.get_str() + ")");
        }
    }

    unsigned p_;
    unsigned q_;
    unsigned depth_;
    mpz_class kappa_ = 0;
    Values values_;
};

/// <f, h> in L^2(lambda^{p+q}); zero across different (p, q).
template <Scalar S>
S inner(const AlphaElement<S> &f, const AlphaElement<S> &h) {
    if (f.p() != h.p() || f.q() != h.q() || f.is_zero() || h.is_zero()) {
        return S{};
    }
    unsigned depth = std::max(f.depth(), h.depth());
    const AlphaElement<S> a = f.refined_to(depth);
    const AlphaElement<S> b = h.refined_to(depth);
    S sum{};
    for (const auto &[cell, v] : a.values()) {
        auto it = b.values().find(cell);
        if (it != b.values().end()) {
            sum += v * conj(it->second);
        }
    }
    // sqrt(kappa) * sqrt(kappa') is rational only for equal radicals.
    S radical;
    if (a.radical() == b.radical()) {
        radical = S::from_integer(a.radical());
    } else if constexpr (S::is_exact) {
        throw DomainError("inner product of alpha elements with incommensurable radicals");
    } else {
        radical = S(std::complex<double>(std::sqrt(a.radical().get_d() * b.radical().get_d()), 0.0));
    }
    return sum * radical * S::from_rational(pow2(-static_cast<int>(depth * (f.p() + f.q()))));
}

/// An element of the l^2-sum A of the spaces ~L^2(mu_{p,q}).
template <Scalar S>
class AlphaSum {
   public:
    using Key = std::pair<unsigned, unsigned>;
    using Components = std::map<Key, AlphaElement<S>>;

    const Components &components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    void add(const AlphaElement<S> &f) {
        if (f.is_zero()) {
            return;
        }
        Key key{f.p(), f.q()};
        auto it = components_.find(key);
        if (it == components_.end()) {
            components_.emplace(key, f);
            return;
        }
        it->second += f;
        if (it->second.is_zero()) {
            components_.erase(it);
        }
    }

    AlphaSum &operator+=(const AlphaSum &o) {
        for (const auto &[k, f] : o.components_) {
            add(f);
        }
        return *this;
    }
    friend AlphaSum operator+(AlphaSum a, const AlphaSum &b) { return a += b; }
    friend AlphaSum operator*(const S &c, const AlphaSum &f) {
        AlphaSum out;
        for (const auto &[k, e] : f.components_) {
            out.add(c * e);
        }
        return out;
    }

    AlphaSum refine(const Limits &limits = {}) const {
        AlphaSum out;
        for (const auto &[k, f] : components_) {
            out.components_.emplace(k, f.refine(limits));
        }
        return out;
    }

    bool operator==(const AlphaSum &o) const { return components_ == o.components_; }

    friend bool close(const AlphaSum &a, const AlphaSum &b, double tol) {
        std::map<Key, bool> keys;
        for (const auto &[k, f] : a.components_) keys[k] = true;
        for (const auto &[k, f] : b.components_) keys[k] = true;
        for (const auto &[k, unused] : keys) {
            auto ia = a.components_.find(k);
            auto ib = b.components_.find(k);
            if (ia == a.components_.end() || ib == b.components_.end()) {
                const auto &present = ia == a.components_.end() ? ib->second : ia->second;
                for (const auto &[cell, v] : present.values()) {
                    if (!close(v, S{}, tol)) {
                        return false;
                    }
                }
                continue;
            }
            unsigned depth = std::max(ia->second.depth(), ib->second.depth());
            if (!close(ia->second.refined_to(depth), ib->second.refined_to(depth), tol)) {
                return false;
            }
        }
        return true;
    }

   private:
    Components components_;
};

template <Scalar S>
S inner(const AlphaSum<S> &f, const AlphaSum<S> &h) {
    S out{};
    for (const auto &[k, e] : f.components()) {
        auto it = h.components().find(k);
        if (it != h.components().end()) {
            out += inner(e, it->second);
        }
    }
    return out;
}

template <Scalar S>
S norm2(const AlphaSum<S> &f) {
    return inner(f, f);
}

/// F^alpha_n on a single basic word: sqrt(2^{nl}/(p!q!)) prod_s m_s! on supp<sigma>.
template <Scalar S>
AlphaElement<S> f_alpha_basis(const AdmissibleWord &w) {
    WordStats st = w.stats();
    const unsigned n = w.level();
    const unsigned l = w.degree();
    mpq_class radicand = pow2(static_cast<int>(n * l)) / mpq_class(factorial(st.p) * factorial(st.q));
    RadicalSplit split = split_sqrt(radicand);
    S value = tower_part<S>(split) * S::from_integer(basis_norm2(w));
    AlphaElement<S> out(st.p, st.q, n);
    for (const auto &cell : support(w)) {
        out.add(cell, value, split.kappa);
    }
    return out;
}

/// F^alpha_n extended linearly.
template <Scalar S>
AlphaSum<S> f_alpha(const FockVector<S> &v) {
    AlphaSum<S> out;
    for (const auto &[w, c] : v.terms()) {
        out.add(c * f_alpha_basis<S>(w));
    }
    return out;
}

/// The rho_{p,q}(g) phase g(a_1)...g(a_p) g(b_1)^{-1}...g(b_q)^{-1} on a cell.
template <Scalar S>
S rho_phase(const TorusStep<S> &g, const GridCell &cell, unsigned p) {
    S out = S::one();
    for (size_t i = 0; i < cell.coords.size(); i++) {
        const S &v = g.on_cylinder(cell.coords[i]);
        out *= i < p ? v : conj(v);
    }
    return out;
}

template <Scalar S>
AlphaElement<S> apply_rho(const TorusStep<S> &g, const AlphaElement<S> &f) {
    if (f.depth() < g.level()) {
        throw DomainError("alpha element at depth " + std::to_string(f.depth()) +
                          " is coarser than the torus step level " + std::to_string(g.level()));
    }
    AlphaElement<S> out(f.p(), f.q(), f.depth());
    for (const auto &[cell, v] : f.values()) {
        out.add(cell, rho_phase(g, cell, f.p()) * v, f.radical());
    }
    return out;
}

/// alpha(g) f, component-wise rho_{p,q}(g).
template <Scalar S>
AlphaSum<S> apply_rho(const TorusStep<S> &g, const AlphaSum<S> &f) {
    AlphaSum<S> out;
    for (const auto &[k, e] : f.components()) {
        out.add(apply_rho(g, e));
    }
    return out;
}

}  // namespace fockspec
