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

#include <string>
#include <vector>

#include "fockspec/core/combinatorics.hpp"
#include "fockspec/core/torus_step.hpp"
#include "fockspec/fock/fock_vector.hpp"
#include "fockspec/wick/gauss_poly.hpp"

namespace fockspec {

namespace detail {

template <Scalar S>
void check_size(const GaussPoly<S> &p, const Limits &limits) {
    if (p.size() > limits.max_poly_terms) {
        throw BoundError("polynomial expansion exceeds " + std::to_string(limits.max_poly_terms) + " terms");
    }
}

/// (sum_{t in 2^d} z_{st})^a (sum_t conj z_{st})^b, unscaled.
template <Scalar S>
GaussPoly<S> subtree_sum_power(const BinarySeq &s, unsigned d, unsigned a, unsigned b, const Limits &limits) {
    GaussPoly<S> zs;
    GaussPoly<S> zbs;
    for (const auto &t : BinarySeq::all_of_length(d)) {
        zs += GaussPoly<S>::z(s.concat(t));
        zbs += GaussPoly<S>::zbar(s.concat(t));
    }
    GaussPoly<S> out = GaussPoly<S>::constant(S::one());
    for (unsigned i = 0; i < a; i++) {
        out = out * zs;
        check_size(out, limits);
    }
    for (unsigned i = 0; i < b; i++) {
        out = out * zbs;
        check_size(out, limits);
    }
    return out;
}

}  // namespace detail

/// Lifts every variable shorter than K to level K via
/// z_s = 2^{-(K-|s|)/2} sum_{t in 2^{K-|s|}} z_{st}; longer variables are kept.
template <Scalar S>
GaussPoly<S> refine_below(const GaussPoly<S> &p, unsigned K, const Limits &limits = {}) {
    if (K > limits.max_depth) {
        throw BoundError("refinement depth " + std::to_string(K) + " exceeds cap " + std::to_string(limits.max_depth));
    }
    GaussPoly<S> out;
    for (const auto &[m, c] : p.terms()) {
        GaussPoly<S> term = GaussPoly<S>::constant(c);
        GaussMonomial::Exponents kept;
        for (const auto &[s, ab] : m.exponents()) {
            if (s.length() >= K) {
                kept[s] = ab;
                continue;
            }
            unsigned d = K - s.length();
            term = term * detail::subtree_sum_power<S>(s, d, ab.first, ab.second, limits);
            term = inv_sqrt2_power<S>(d * (ab.first + ab.second)) * term;
            detail::check_size(term, limits);
        }
        term = term * GaussPoly<S>::monomial(GaussMonomial(kept));
        out += term;
        detail::check_size(out, limits);
    }
    return out;
}

/// Rewrites P in level-K variables only; every variable must have length <= K.
template <Scalar S>
GaussPoly<S> refine_poly(const GaussPoly<S> &p, unsigned K, const Limits &limits = {}) {
    if (p.max_level() > K) {
        throw DomainError("refine_poly: variable deeper than target level " + std::to_string(K));
    }
    return refine_below(p, K, limits);
}

/// Integral of P against gamma_infinity; all variables must share one level.
template <Scalar S>
S moment(const GaussPoly<S> &p) {
    if (p.levels().size() > 1) {
        throw DomainError("moment of a mixed-level polynomial; call refine_poly first");
    }
    S out{};
    for (const auto &[m, c] : p.terms()) {
        mpz_class mom = monomial_moment(m);
        if (mom != 0) {
            out += c * S::from_integer(mom);
        }
    }
    return out;
}

/// <P, Q> = moment(P conj(Q)) after refining both to their deepest level.
template <Scalar S>
S inner_b(const GaussPoly<S> &p, const GaussPoly<S> &q, const Limits &limits = {}) {
    unsigned K = std::max(p.max_level(), q.max_level());
    GaussPoly<S> a = refine_poly(p, K, limits);
    GaussPoly<S> b = refine_poly(q, K, limits);
    S out{};
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            mpz_class mom = monomial_moment(ma * mb.conj());
            if (mom != 0) {
                out += ca * conj(cb) * S::from_integer(mom);
            }
        }
    }
    return out;
}

template <Scalar S>
S norm2_b(const GaussPoly<S> &p, const Limits &limits = {}) {
    return inner_b(p, p, limits);
}

/// prod_i z_{sigma_i} with z_{conj s} = conj(z_s).
GaussMonomial word_monomial(const AdmissibleWord &w);

/// F^beta_n extended linearly.
template <Scalar S>
GaussPoly<S> f_beta(const FockVector<S> &v) {
    GaussPoly<S> out;
    for (const auto &[w, c] : v.terms()) {
        out.add(word_monomial(w), c);
    }
    return out;
}

/// The Koopman operator of the boolean action of g: z_s -> g_{s|n} z_s.
template <Scalar S>
GaussPoly<S> koopman(const TorusStep<S> &g, const GaussPoly<S> &p, const Limits &limits = {}) {
    GaussPoly<S> lifted = refine_below(p, g.level(), limits);
    GaussPoly<S> out;
    for (const auto &[m, c] : lifted.terms()) {
        S scale = S::one();
        for (const auto &[s, ab] : m.exponents()) {
            const S &gs = g.on_cylinder(s);
            scale *= power(gs, ab.first) * power(conj(gs), ab.second);
        }
        out.add(m, scale * c);
    }
    return out;
}

/// r_l = 2^{-l(k+m)/2} sum_{t in 2^l} z_{st}^k conj(z_{st})^m and its decay.
template <Scalar S>
struct RateReport {
    BinarySeq s;
    unsigned k = 0;
    unsigned m = 0;
    unsigned l = 0;
    GaussPoly<S> r;
    S centering;        // moment(r_l)
    S centered_norm2;   // ||r_l - moment(r_l)||^2
    mpq_class expected_norm2;
    bool matches = false;
    /// Whether centering each summand z^m conj(z)^m by sqrt(m!) agrees with its
    /// actual mean m!; false exactly when k == m >= 2.
    bool sqrt_factorial_centering_consistent = true;
    /// ||r_l - sqrt(m!)||^2 (float), reported for comparison when k == m.
    double sqrt_factorial_centered_norm2 = 0.0;
};

/// (k+m)! 2^{-l(k+m-1)} when k != m; 2^{-l(2m-1)} ((2m)! - (m!)^2) when k == m.
mpq_class rate_formula(unsigned k, unsigned m, unsigned l);

template <Scalar S>
RateReport<S> r_l(const BinarySeq &s, unsigned k, unsigned m, unsigned l, const Limits &limits = {}) {
    if (k + m == 0 || l == 0) {
        throw DomainError("r_l needs k + m >= 1 and l >= 1");
    }
    if (s.length() + l > limits.max_depth) {
        throw BoundError("r_l depth exceeds cap");
    }
    RateReport<S> rep;
    rep.s = s;
    rep.k = k;
    rep.m = m;
    rep.l = l;
    for (const auto &t : BinarySeq::all_of_length(l)) {
        GaussMonomial::Exponents e;
        e[s.concat(t)] = {k, m};
        rep.r.add(GaussMonomial(std::move(e)), S::one());
    }
    rep.r = inv_sqrt2_power<S>(l * (k + m)) * rep.r;
    rep.centering = moment(rep.r);
    GaussPoly<S> centered = rep.r - GaussPoly<S>::constant(rep.centering);
    rep.centered_norm2 = norm2_b(centered, limits);
    rep.expected_norm2 = rate_formula(k, m, l);
    rep.matches = close(rep.centered_norm2, S::from_rational(rep.expected_norm2), 1e-9);
    if (k == m) {
        mpz_class mf = factorial(m);
        rep.sqrt_factorial_centering_consistent = (mf * mf == mf);
        // r_l - c is orthogonal to constants, so ||r_l - c'||^2 = ||r_l - c||^2 + |c - c'|^2.
        double shift = std::abs(rep.centering.to_complex() - std::complex<double>(std::sqrt(mf.get_d()), 0.0));
        rep.sqrt_factorial_centered_norm2 = rep.centered_norm2.to_complex().real() + shift * shift;
    } else {
        rep.sqrt_factorial_centered_norm2 = rep.centered_norm2.to_complex().real();
    }
    return rep;
}

/// Checks of the expansion
/// z_s^k conj(z_s)^m = 2^{-l(k+m)/2} sum_{t in (2^l)^{k+m}} prod z_{st_i} prod conj(z_{st_{k+i}}).
template <Scalar S>
struct ExpansionReport {
    BinarySeq s;
    unsigned k = 0;
    unsigned m = 0;
    unsigned l = 0;
    size_t tuples = 0;            // (2^l)^{k+m}
    size_t constant_tuples = 0;   // 2^l
    bool identity_holds = false;  // refine_poly(z_s^k zb_s^m, |s|+l) == explicit tuple sum
    bool constant_part_is_r_l = false;
    /// Every monomial from a non-constant tuple spreads over >= 2 variables, each of degree < k+m.
    bool nonconstant_terms_split = false;
    GaussPoly<S> constant_part;
    GaussPoly<S> nonconstant_part;
};

template <Scalar S>
ExpansionReport<S> subtree_expansion(const BinarySeq &s, unsigned k, unsigned m, unsigned l,
                                     const Limits &limits = {}) {
    if (k + m == 0) {
        throw DomainError("expansion needs k + m >= 1");
    }
    ExpansionReport<S> rep;
    rep.s = s;
    rep.k = k;
    rep.m = m;
    rep.l = l;
    const unsigned arity = k + m;
    const size_t base = size_t{1} << l;
    size_t tuples = 1;
    for (unsigned i = 0; i < arity; i++) {
        tuples *= base;
        if (tuples > limits.max_enumeration) {
            throw BoundError("tuple enumeration exceeds cap");
        }
    }
    rep.tuples = tuples;
    const S scale = inv_sqrt2_power<S>(l * arity);
    std::vector<size_t> t(arity, 0);
    for (size_t idx = 0; idx < tuples; idx++) {
        size_t rest = idx;
        for (unsigned i = 0; i < arity; i++) {
            t[arity - 1 - i] = rest % base;
            rest /= base;
        }
        GaussMonomial mono;
        bool constant = true;
        for (unsigned i = 0; i < arity; i++) {
            constant = constant && t[i] == t[0];
            mono = mono * GaussMonomial::variable(s.concat(BinarySeq(l, t[i])), i >= k);
        }
        if (constant) {
            rep.constant_tuples++;
            rep.constant_part.add(mono, scale);
        } else {
            rep.nonconstant_part.add(mono, scale);
        }
    }
    GaussMonomial::Exponents e;
    e[s] = {k, m};
    GaussPoly<S> lhs = refine_poly(GaussPoly<S>::monomial(GaussMonomial(std::move(e))), s.length() + l, limits);
    rep.identity_holds = close(lhs, rep.constant_part + rep.nonconstant_part, 1e-9);
    rep.constant_part_is_r_l = close(rep.constant_part, r_l<S>(s, k, m, l, limits).r, 1e-9);
    rep.nonconstant_terms_split = true;
    for (const auto &[mono, c] : rep.nonconstant_part.terms()) {
        if (mono.exponents().size() < 2) {
            rep.nonconstant_terms_split = false;
        }
        for (const auto &[v, ab] : mono.exponents()) {
            if (ab.first + ab.second >= arity) {
                rep.nonconstant_terms_split = false;
            }
        }
    }
    return rep;
}

/// True when no variable of P is a prefix of (or equal to) a variable of Q or vice versa,
/// so that P and Q are independent random variables.
template <Scalar Sa, Scalar Sb>
bool disjoint_subtrees(const GaussPoly<Sa> &p, const GaussPoly<Sb> &q) {
    for (const auto &[mp, cp] : p.terms()) {
        for (const auto &[mq, cq] : q.terms()) {
            for (const auto &[a, x] : mp.exponents()) {
                for (const auto &[b, y] : mq.exponents()) {
                    if (a.is_prefix_of(b) || b.is_prefix_of(a)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace fockspec
