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

#include "fockspec/core/combinatorics.hpp"

namespace fockspec {

mpz_class factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class multiset_count(unsigned n, unsigned k) {
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    return binomial(n + k - 1, k);
}

mpq_class pow2(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) {
        return mpq_class(p);
    }
    return mpq_class(mpz_class(1), p);
}

}  // namespace fockspec
