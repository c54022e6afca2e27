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

#include "fockspec/core/scalar.hpp"

namespace fockspec {

/// sqrt(r) = rational * sqrt(2)^{has_sqrt2} * sqrt(kappa), kappa odd and squarefree.
struct RadicalSplit {
    mpq_class rational;
    bool has_sqrt2 = false;
    mpz_class kappa = 1;
};

/// Splits sqrt(r) for r >= 0. The odd part of numerator*denominator is factored by
/// trial division; throws BoundError when that part exceeds 2^40.
RadicalSplit split_sqrt(const mpq_class &r);

/// rational * sqrt(2)^{has_sqrt2} as a scalar (the sqrt(kappa) factor is kept apart).
template <Scalar S>
S tower_part(const RadicalSplit &split) {
    S out = S::from_rational(split.rational);
    if (split.has_sqrt2) {
        out *= S::sqrt2();
    }
    return out;
}

}  // namespace fockspec
