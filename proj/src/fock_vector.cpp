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

#include "fockspec/fock/fock_vector.hpp"

namespace fockspec {

mpz_class basis_norm2(const AdmissibleWord &w) {
    mpz_class out = 1;
    for (const auto &[s, m] : w.stats().multiplicities) {
        out *= factorial(m);
    }
    return out;
}

}  // namespace fockspec
