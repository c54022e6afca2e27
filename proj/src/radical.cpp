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

#include "fockspec/core/radical.hpp"

namespace fockspec {

RadicalSplit split_sqrt(const mpq_class &r) {
    if (sgn(r) < 0) {
        throw DomainError("square root of a negative rational");
    }
    RadicalSplit out;
    if (sgn(r) == 0) {
        out.rational = 0;
        return out;
    }
    // sqrt(a/b) = sqrt(a*b) / b.
    mpz_class x = r.get_num() * r.get_den();
    mpz_class square = 1;
    auto twos = mpz_scan1(x.get_mpz_t(), 0);
    x >>= twos;
    square <<= twos / 2;
    out.has_sqrt2 = (twos % 2) == 1;
    if (x > (mpz_class(1) << 40)) {
        throw BoundError("odd part too large to factor: " + x.get_str());
    }
    unsigned long rest = x.get_ui();
    unsigned long kappa = 1;
    for (unsigned long d = 3; d * d <= rest; d += 2) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            e++;
        }
        for (unsigned i = 0; i < e / 2; i++) {
            square *= d;
        }
        if (e % 2) {
            kappa *= d;
        }
    }
    kappa *= rest;
    out.kappa = kappa;
    out.rational = mpq_class(square, r.get_den());
    out.rational.canonicalize();
    return out;
}

}  // namespace fockspec
