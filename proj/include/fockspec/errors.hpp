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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fockspec {

/// Raised when a computation would exceed a configured size cap.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when arguments violate an operation's preconditions
/// (level mismatch, inadmissible word, zero multiplier, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Configured size caps shared by enumeration, expansion and sampling.
struct Limits {
    unsigned max_level = 3;        // admissible word enumeration
    unsigned max_degree = 5;       // Fock degree l
    unsigned max_depth = 16;       // word length produced by embeddings/refinement
    size_t max_enumeration = 1'000'000;
    size_t max_poly_terms = 200'000;
    size_t max_cells = 2'000'000;
    unsigned max_sample_depth = 14;  // leaf depth K of Monte Carlo trees
    uint64_t max_samples = 100'000'000;
    unsigned max_sample_degree = 12;
};

}  // namespace fockspec
