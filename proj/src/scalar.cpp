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

#include "fockspec/core/scalar.hpp"

#include <sstream>

namespace fockspec {

int RootTwo::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sa == 0) {
        return sb;
    }
    if (sb == 0 || sa == sb) {
        return sa;
    }
    // Opposite signs: compare a^2 with 2 b^2.
    int c = cmp(a_ * a_, 2 * b_ * b_);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

RootTwo RootTwo::inverse() const {
    mpq_class n = a_ * a_ - 2 * b_ * b_;
    if (sgn(n) == 0) {
        throw DomainError("division by zero in Q(sqrt 2)");
    }
    return RootTwo(a_ / n, -b_ / n);
}

std::string RootTwo::str() const {
    if (sgn(b_) == 0) {
        return a_.get_str();
    }
    std::string root = (b_ == 1 ? "" : (b_ == -1 ? "-" : b_.get_str() + "*")) + "sqrt2";
    if (sgn(a_) == 0) {
        return root;
    }
    return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + root;
}

ExactComplex ExactComplex::root_of_unity8(int k) {
    k = ((k % 8) + 8) % 8;
    RootTwo h(0, mpq_class(1, 2));  // sqrt(2)/2
    switch (k) {
        case 0:
            return ExactComplex(1);
        case 1:
            return ExactComplex(h, h);
        case 2:
            return ExactComplex(RootTwo(0), RootTwo(1));
        case 3:
            return ExactComplex(-h, h);
        case 4:
            return ExactComplex(-1);
        case 5:
            return ExactComplex(-h, -h);
        case 6:
            return ExactComplex(RootTwo(0), RootTwo(-1));
        default:
            return ExactComplex(h, -h);
    }
}

ExactComplex ExactComplex::from_complex(std::complex<double>) {
    throw DomainError("the exact backend only represents 8th-root phases; use the float backend for arbitrary phases");
}

ExactComplex ExactComplex::inverse() const {
    RootTwo n = re_ * re_ + im_ * im_;
    RootTwo inv = n.inverse();
    return ExactComplex(re_ * inv, -(im_ * inv));
}

std::string ExactComplex::str() const {
    if (im_.is_zero()) {
        return re_.str();
    }
    if (re_.is_zero()) {
        return "(" + im_.str() + ")i";
    }
    return "(" + re_.str() + ")+(" + im_.str() + ")i";
}

FloatComplex FloatComplex::inverse() const {
    if (is_zero()) {
        throw DomainError("division by zero");
    }
    return FloatComplex(1.0 / v_);
}

std::string FloatComplex::str() const {
    std::ostringstream out;
    out.precision(17);
    if (v_.imag() == 0.0) {
        out << v_.real();
    } else {
        out << v_.real() << (v_.imag() < 0 ? "" : "+") << v_.imag() << "i";
    }
    return out.str();
}

}  // namespace fockspec
