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

#include <cstdint>
#include <algorithm>
#include <vector>

namespace fockspec {

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);
/// Number of multisets of size k drawn from n kinds, C(n + k - 1, k).
mpz_class multiset_count(unsigned n, unsigned k);
/// 2^e as an exact rational; negative exponents allowed.
mpq_class pow2(int e);

/// Calls visit(perm) for every permutation of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_permutation(size_t n, Visit &&visit) {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; i++) {
        perm[i] = i;
    }
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace fockspec
