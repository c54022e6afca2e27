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

#include "fockspec/wick/wick.hpp"

namespace fockspec {

GaussMonomial word_monomial(const AdmissibleWord &w) {
    GaussMonomial out;
    for (const auto &e : w.entries()) {
        out = out * GaussMonomial::variable(e.word, e.barred);
    }
    return out;
}

mpq_class rate_formula(unsigned k, unsigned m, unsigned l) {
    if (k != m) {
        return mpq_class(factorial(k + m)) * pow2(-static_cast<int>(l * (k + m - 1)));
    }
    mpz_class mf = factorial(m);
    return mpq_class(factorial(2 * m) - mf * mf) * pow2(-static_cast<int>(l * (2 * m - 1)));
}

}  // namespace fockspec
