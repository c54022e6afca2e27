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

#include <complex>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fockspec/alpha/alpha.hpp"
#include "fockspec/core/admissible_word.hpp"
#include "fockspec/spectral/spectral.hpp"

namespace oracle {

/// <a, b> in the symmetric Fock space as the permanent of the symbol-equality matrix.
mpz_class fock_inner_permanent(const fockspec::AdmissibleWord &a, const fockspec::AdmissibleWord &b);

/// sum over all e in 2^l of v_{s_1 e_1}...v_{s_l e_l}, as integer multiplicities of basis words.
std::map<fockspec::AdmissibleWord, mpz_class> digit_sum(const fockspec::AdmissibleWord &w);

/// Orderings ((r_1..r_p), (t_1..t_q)) obtained from every permutation of the entries.
std::set<std::pair<std::vector<fockspec::BinarySeq>, std::vector<fockspec::BinarySeq>>> brute_variants(
    const fockspec::AdmissibleWord &w);

/// Cells of the depth-n grid whose first p coordinates are a rearrangement of the unbarred
/// entries and whose last q are a rearrangement of the barred ones, found by scanning the grid.
std::set<fockspec::GridCell> brute_support(const fockspec::AdmissibleWord &w);

/// E[z_{a_1}...z_{a_k} conj(z_{b_1}...z_{b_m})] as the permanent of the covariance matrix
/// E[z_s conj(z_t)] = 2^{-| |s| - |t| |/2} when one word extends the other, else 0.
std::complex<double> gaussian_moment_permanent(const std::vector<fockspec::BinarySeq> &zs,
                                               const std::vector<fockspec::BinarySeq> &zbars);

/// Permutations of D(x) that keep every slot at its level, by scanning all |D(x)|! permutations.
size_t brute_good_permutation_count(const fockspec::IndexFunction &x);

/// Pairs of injections D(x) -> D(x+y), D(y) -> D(x+y) fixing levels with partitioning ranges.
size_t brute_pairing_count(const fockspec::IndexFunction &x, const fockspec::IndexFunction &y);

/// Value of an alpha element on a cell, in double precision.
template <class S>
std::complex<double> alpha_value(const fockspec::AlphaElement<S> &f, const fockspec::GridCell &cell) {
    auto it = f.values().find(cell);
    if (it == f.values().end()) {
        return 0.0;
    }
    return std::sqrt(f.radical().get_d()) * it->second.to_complex();
}

}  // namespace oracle
