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
#include <string>

#include "fockspec/core/admissible_word.hpp"
#include "fockspec/core/combinatorics.hpp"
#include "fockspec/core/scalar.hpp"
#include "fockspec/core/torus_step.hpp"

namespace fockspec {

/// prod_s m_s!, the squared norm of the basic product vector indexed by w.
mpz_class basis_norm2(const AdmissibleWord &w);

/// A finite linear combination of basic product vectors of Gamma(n).
/// Zero coefficients are never stored.
template <Scalar S>
class FockVector {
   public:
    using Terms = std::map<AdmissibleWord, S>;

    explicit FockVector(unsigned level, unsigned max_degree = Limits{}.max_degree)
        : level_(level), max_degree_(max_degree) {
    }

    static FockVector basis(const AdmissibleWord &w, unsigned max_degree = Limits{}.max_degree) {
        FockVector v(w.level(), max_degree);
        v.add(w, S::one());
        return v;
    }

    unsigned level() const { return level_; }
    unsigned max_degree() const { return max_degree_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * v_w.
    void add(const AdmissibleWord &w, const S &coeff) {
        if (w.level() != level_) {
            throw DomainError("word " + w.str() + " has level " + std::to_string(w.level()) + ", vector has level " +
                              std::to_string(level_));
        }
        if (w.degree() > max_degree_) {
            throw BoundError("degree " + std::to_string(w.degree()) + " exceeds cap " + std::to_string(max_degree_));
        }
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    S coefficient(const AdmissibleWord &w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? S{} : it->second;
    }

    FockVector &operator+=(const FockVector &o) {
        check_level(o);
        for (const auto &[w, c] : o.terms_) {
            add(w, c);
        }
        return *this;
    }
    FockVector &operator-=(const FockVector &o) {
        check_level(o);
        for (const auto &[w, c] : o.terms_) {
            add(w, -c);
        }
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector &b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector &b) { return a -= b; }
    friend FockVector operator*(const S &c, const FockVector &v) {
        FockVector out(v.level_, v.max_degree_);
        for (const auto &[w, x] : v.terms_) {
            out.add(w, c * x);
        }
        return out;
    }

    bool operator==(const FockVector &o) const { return level_ == o.level_ && terms_ == o.terms_; }

    friend bool close(const FockVector &a, const FockVector &b, double tol) {
        if (a.level_ != b.level_) {
            return false;
        }
        auto diff = a - b;
        for (const auto &[w, c] : diff.terms_) {
            if (!close(c, S{}, tol)) {
                return false;
            }
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[w, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.str() + ")v" + w.str();
        }
        return out;
    }

   private:
    void check_level(const FockVector &o) const {
        if (o.level_ != level_) {
            throw DomainError("Fock vector level mismatch");
        }
    }

    unsigned level_;
    unsigned max_degree_;
    Terms terms_;
};

/// <u, v>: linear in u, conjugate-linear in v; distinct basic words are orthogonal.
template <Scalar S>
S inner(const FockVector<S> &u, const FockVector<S> &v) {
    if (u.level() != v.level()) {
        throw DomainError("inner product of Fock vectors at different levels");
    }
    S out{};
    for (const auto &[w, cu] : u.terms()) {
        auto it = v.terms().find(w);
        if (it != v.terms().end()) {
            out += cu * conj(it->second) * S::from_integer(basis_norm2(w));
        }
    }
    return out;
}

template <Scalar S>
S norm2(const FockVector<S> &v) {
    return inner(v, v);
}

/// The isometric embedding E_n : Gamma(n) -> Gamma(n+1), induced by
/// v_sigma -> (v_{sigma 0} + v_{sigma 1}) / sqrt 2.
///
/// For each run of a repeated symbol of multiplicity m, choosing which k copies
/// receive digit 0 contributes C(m, k) equal terms.
template <Scalar S>
FockVector<S> embed(const FockVector<S> &v, const Limits &limits = {}) {
    if (v.level() + 1 > limits.max_depth) {
        throw BoundError("embedding to level " + std::to_string(v.level() + 1) + " exceeds depth cap " +
                         std::to_string(limits.max_depth));
    }
    FockVector<S> out(v.level() + 1, v.max_degree());
    for (const auto &[w, coeff] : v.terms()) {
        auto runs = w.runs();
        S scale = coeff * inv_sqrt2_power<S>(w.degree());
        std::vector<unsigned> zeros(runs.size(), 0);
        while (true) {
            std::vector<Symbol> entries;
            mpz_class mult = 1;
            for (size_t r = 0; r < runs.size(); r++) {
                const auto &[sym, m] = runs[r];
                mult *= binomial(m, zeros[r]);
                for (unsigned i = 0; i < m; i++) {
                    entries.push_back(sym.append(i < zeros[r] ? 0 : 1));
                }
            }
            out.add(AdmissibleWord(std::move(entries)), scale * S::from_integer(mult));
            size_t r = 0;
            while (r < runs.size() && zeros[r] == runs[r].second) {
                zeros[r] = 0;
                r++;
            }
            if (r == runs.size()) {
                break;
            }
            zeros[r]++;
        }
    }
    return out;
}

/// The psi_n phase of a basic word: prod g_{r_i} * prod g_{t_j}^{-1}.
template <Scalar S>
S phase(const TorusStep<S> &g, const AdmissibleWord &w) {
    S out = S::one();
    for (const auto &e : w.entries()) {
        out *= e.barred ? conj(g.at(e.word)) : g.at(e.word);
    }
    return out;
}

/// psi_n(g) v.
template <Scalar S>
FockVector<S> act(const TorusStep<S> &g, const FockVector<S> &v) {
    if (g.level() != v.level()) {
        throw DomainError("torus step level " + std::to_string(g.level()) + " differs from vector level " +
                          std::to_string(v.level()));
    }
    FockVector<S> out(v.level(), v.max_degree());
    for (const auto &[w, c] : v.terms()) {
        out.add(w, phase(g, w) * c);
    }
    return out;
}

}  // namespace fockspec
