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
#include <set>
#include <string>
#include <utility>

#include "fockspec/core/binary_seq.hpp"
#include "fockspec/core/scalar.hpp"

namespace fockspec {

/// prod_s z_s^{a_s} conj(z_s)^{b_s}; (0,0) exponents are never stored.
class GaussMonomial {
   public:
    using Exponents = std::map<BinarySeq, std::pair<unsigned, unsigned>>;

    GaussMonomial() = default;
    explicit GaussMonomial(Exponents exps);
    static GaussMonomial variable(const BinarySeq &s, bool barred = false);

    const Exponents &exponents() const { return exps_; }
    bool is_constant() const { return exps_.empty(); }
    unsigned degree() const;
    /// Lengths of the variable words that occur.
    std::set<unsigned> levels() const;

    GaussMonomial conj() const;
    friend GaussMonomial operator*(const GaussMonomial &x, const GaussMonomial &y);

    std::string str() const;

    auto operator<=>(const GaussMonomial &) const = default;
    bool operator==(const GaussMonomial &) const = default;

   private:
    Exponents exps_;
};

/// Closed-form Gaussian moment of a single-level monomial: prod_s a_s! if every
/// a_s == b_s, else 0. Throws DomainError on mixed levels.
mpz_class monomial_moment(const GaussMonomial &m);

/// Brute-force Wick/Isserlis sum over all pairings of the monomial's factors with
/// covariances E[z_s conj z_t] = [s == t], E[z z] = E[conj z conj z] = 0.
/// Works for any single-level monomial of degree <= 12.
mpz_class wick_pairing_moment(const GaussMonomial &m);

/// A sparse polynomial in the variables z_s, conj(z_s).
template <Scalar S>
class GaussPoly {
   public:
    using Terms = std::map<GaussMonomial, S>;

    GaussPoly() = default;
    static GaussPoly constant(const S &c) {
        GaussPoly out;
        out.add(GaussMonomial(), c);
        return out;
    }
    static GaussPoly monomial(const GaussMonomial &m, const S &c = S::one()) {
        GaussPoly out;
        out.add(m, c);
        return out;
    }
    static GaussPoly z(const BinarySeq &s) { return monomial(GaussMonomial::variable(s, false)); }
    static GaussPoly zbar(const BinarySeq &s) { return monomial(GaussMonomial::variable(s, true)); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    std::set<unsigned> levels() const {
        std::set<unsigned> out;
        for (const auto &[m, c] : terms_) {
            auto l = m.levels();
            out.insert(l.begin(), l.end());
        }
        return out;
    }
    unsigned max_level() const {
        auto l = levels();
        return l.empty() ? 0 : *l.rbegin();
    }

    void add(const GaussMonomial &m, const S &c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    GaussPoly &operator+=(const GaussPoly &o) {
        for (const auto &[m, c] : o.terms_) {
            add(m, c);
        }
        return *this;
    }
    GaussPoly &operator-=(const GaussPoly &o) {
        for (const auto &[m, c] : o.terms_) {
            add(m, -c);
        }
        return *this;
    }
    friend GaussPoly operator+(GaussPoly a, const GaussPoly &b) { return a += b; }
    friend GaussPoly operator-(GaussPoly a, const GaussPoly &b) { return a -= b; }
    friend GaussPoly operator*(const S &c, const GaussPoly &p) {
        GaussPoly out;
        for (const auto &[m, x] : p.terms_) {
            out.add(m, c * x);
        }
        return out;
    }
    friend GaussPoly operator*(const GaussPoly &a, const GaussPoly &b) {
        GaussPoly out;
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                out.add(ma * mb, ca * cb);
            }
        }
        return out;
    }
    /// Complex conjugate: conjugates coefficients and swaps z and conj(z).
    friend GaussPoly conj(const GaussPoly &p) {
        GaussPoly out;
        for (const auto &[m, c] : p.terms_) {
            out.add(m.conj(), conj(c));
        }
        return out;
    }

    bool operator==(const GaussPoly &o) const { return terms_ == o.terms_; }
    friend bool close(const GaussPoly &a, const GaussPoly &b, double tol) {
        for (const auto &[m, c] : (a - b).terms_) {
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
        for (const auto &[m, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.str() + ")" + (m.is_constant() ? "" : "*" + m.str());
        }
        return out;
    }

   private:
    Terms terms_;
};

template <Scalar S>
GaussPoly<S> power(const GaussPoly<S> &p, unsigned e) {
    GaussPoly<S> out = GaussPoly<S>::constant(S::one());
    for (unsigned i = 0; i < e; i++) {
        out = out * p;
    }
    return out;
}

}  // namespace fockspec
