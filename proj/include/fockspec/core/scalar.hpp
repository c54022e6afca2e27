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

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>

#include "fockspec/errors.hpp"

namespace fockspec {

/// a + b*sqrt(2) with rational a, b.
class RootTwo {
   public:
    RootTwo() = default;
    RootTwo(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    const mpq_class &rational_part() const { return a_; }
    const mpq_class &sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }
    /// Sign of a + b*sqrt(2), computed exactly.
    int sign() const;
    RootTwo inverse() const;

    RootTwo &operator+=(const RootTwo &o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    RootTwo &operator-=(const RootTwo &o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    RootTwo &operator*=(const RootTwo &o) {
        mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
        mpq_class b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    friend RootTwo operator+(RootTwo x, const RootTwo &y) { return x += y; }
    friend RootTwo operator-(RootTwo x, const RootTwo &y) { return x -= y; }
    friend RootTwo operator*(RootTwo x, const RootTwo &y) { return x *= y; }
    friend RootTwo operator-(const RootTwo &x) { return RootTwo(-x.a_, -x.b_); }
    bool operator==(const RootTwo &o) const { return a_ == o.a_ && b_ == o.b_; }

    std::string str() const;

   private:
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

/// Exact backend scalar: x + y*i with x, y in Q(sqrt 2). Holds every 8th
/// root of unity and every power of 1/sqrt 2.
class ExactComplex {
   public:
    static constexpr bool is_exact = true;

    ExactComplex() = default;
    ExactComplex(long v) : re_(mpq_class(v)) {
    }
    ExactComplex(RootTwo re, RootTwo im = {}) : re_(std::move(re)), im_(std::move(im)) {
    }

    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex from_rational(const mpq_class &q) { return ExactComplex(RootTwo(q)); }
    static ExactComplex from_integer(const mpz_class &z) { return from_rational(mpq_class(z)); }
    static ExactComplex sqrt2() { return ExactComplex(RootTwo(0, 1)); }
    static ExactComplex inv_sqrt2() { return ExactComplex(RootTwo(0, mpq_class(1, 2))); }
    /// exp(2 pi i k / 8).
    static ExactComplex root_of_unity8(int k);
    /// Arbitrary complex numbers are not representable; always throws.
    static ExactComplex from_complex(std::complex<double>);

    const RootTwo &re() const { return re_; }
    const RootTwo &im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    friend ExactComplex conj(const ExactComplex &z) { return ExactComplex(z.re_, -z.im_); }
    /// |z|^2 as a (real) scalar.
    friend ExactComplex norm2(const ExactComplex &z) { return ExactComplex(z.re_ * z.re_ + z.im_ * z.im_); }
    ExactComplex inverse() const;
    /// True when |z|^2 == 1 exactly.
    bool is_unit() const { return norm2(*this) == one(); }

    ExactComplex &operator+=(const ExactComplex &o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactComplex &operator-=(const ExactComplex &o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactComplex &operator*=(const ExactComplex &o) {
        RootTwo r = re_ * o.re_ - im_ * o.im_;
        RootTwo i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    friend ExactComplex operator+(ExactComplex x, const ExactComplex &y) { return x += y; }
    friend ExactComplex operator-(ExactComplex x, const ExactComplex &y) { return x -= y; }
    friend ExactComplex operator*(ExactComplex x, const ExactComplex &y) { return x *= y; }
    friend ExactComplex operator-(const ExactComplex &x) { return ExactComplex(-x.re_, -x.im_); }
    bool operator==(const ExactComplex &o) const { return re_ == o.re_ && im_ == o.im_; }

    friend bool close(const ExactComplex &x, const ExactComplex &y, double) { return x == y; }

    std::string str() const;
    friend std::ostream &operator<<(std::ostream &out, const ExactComplex &z) { return out << z.str(); }

   private:
    RootTwo re_;
    RootTwo im_;
};

/// Float backend scalar: a double-precision complex number.
class FloatComplex {
   public:
    static constexpr bool is_exact = false;
    /// Tolerance for unit-modulus checks on torus values.
    static constexpr double kUnitTolerance = 1e-12;

    FloatComplex() = default;
    FloatComplex(long v) : v_(static_cast<double>(v), 0.0) {
    }
    FloatComplex(std::complex<double> v) : v_(v) {
    }

    static FloatComplex one() { return FloatComplex(1); }
    static FloatComplex from_rational(const mpq_class &q) { return FloatComplex(std::complex<double>(q.get_d(), 0.0)); }
    static FloatComplex from_integer(const mpz_class &z) { return FloatComplex(std::complex<double>(z.get_d(), 0.0)); }
    static FloatComplex sqrt2() { return FloatComplex(std::complex<double>(std::sqrt(2.0), 0.0)); }
    static FloatComplex inv_sqrt2() { return FloatComplex(std::complex<double>(std::sqrt(0.5), 0.0)); }
    static FloatComplex root_of_unity8(int k) { return FloatComplex(std::polar(1.0, M_PI * k / 4.0)); }
    static FloatComplex from_complex(std::complex<double> v) { return FloatComplex(v); }

    bool is_zero() const { return v_ == std::complex<double>(0.0, 0.0); }
    std::complex<double> to_complex() const { return v_; }

    friend FloatComplex conj(const FloatComplex &z) { return FloatComplex(std::conj(z.v_)); }
    friend FloatComplex norm2(const FloatComplex &z) { return FloatComplex(std::complex<double>(std::norm(z.v_), 0.0)); }
    FloatComplex inverse() const;
    bool is_unit() const { return std::abs(std::norm(v_) - 1.0) <= kUnitTolerance; }

    FloatComplex &operator+=(const FloatComplex &o) {
        v_ += o.v_;
        return *this;
    }
    FloatComplex &operator-=(const FloatComplex &o) {
        v_ -= o.v_;
        return *this;
    }
    FloatComplex &operator*=(const FloatComplex &o) {
        v_ *= o.v_;
        return *this;
    }
    friend FloatComplex operator+(FloatComplex x, const FloatComplex &y) { return x += y; }
    friend FloatComplex operator-(FloatComplex x, const FloatComplex &y) { return x -= y; }
    friend FloatComplex operator*(FloatComplex x, const FloatComplex &y) { return x *= y; }
    friend FloatComplex operator-(const FloatComplex &x) { return FloatComplex(-x.v_); }
    bool operator==(const FloatComplex &o) const { return v_ == o.v_; }

    /// |x - y| <= tol * max(1, |x|, |y|).
    friend bool close(const FloatComplex &x, const FloatComplex &y, double tol) {
        double scale = std::max({1.0, std::abs(x.v_), std::abs(y.v_)});
        return std::abs(x.v_ - y.v_) <= tol * scale;
    }

    std::string str() const;
    friend std::ostream &operator<<(std::ostream &out, const FloatComplex &z) { return out << z.str(); }

   private:
    std::complex<double> v_{0.0, 0.0};
};

template <class S>
concept Scalar = requires(S a, const S &b, const mpq_class &q, double tol) {
    { S::is_exact } -> std::convertible_to<bool>;
    { S::one() } -> std::same_as<S>;
    { S::from_rational(q) } -> std::same_as<S>;
    { S::inv_sqrt2() } -> std::same_as<S>;
    { S::root_of_unity8(0) } -> std::same_as<S>;
    { a + b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { conj(b) } -> std::same_as<S>;
    { norm2(b) } -> std::same_as<S>;
    { b.is_zero() } -> std::same_as<bool>;
    { b.to_complex() } -> std::same_as<std::complex<double>>;
    { close(b, b, tol) } -> std::same_as<bool>;
};

/// x^e for e >= 0.
template <Scalar S>
S power(S x, unsigned e) {
    S out = S::one();
    while (e) {
        if (e & 1) {
            out *= x;
        }
        x *= x;
        e >>= 1;
    }
    return out;
}

/// (1/sqrt 2)^e.
template <Scalar S>
S inv_sqrt2_power(unsigned e) {
    if constexpr (S::is_exact) {
        // 2^{-e/2}: rational when e is even, otherwise 2^{-(e+1)/2} * sqrt 2.
        if (e % 2 == 0) {
            return S::from_rational(mpq_class(mpz_class(1), mpz_class(mpz_class(1) << (e / 2))));
        }
        return S(RootTwo(0, mpq_class(mpz_class(1), mpz_class(mpz_class(1) << ((e + 1) / 2)))));
    } else {
        return S(std::complex<double>(std::pow(2.0, -0.5 * e), 0.0));
    }
}

}  // namespace fockspec
