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

#include "fockspec/core/scalar.hpp"
#include "fockspec/harness/config.hpp"
#include "fockspec/harness/report.hpp"

namespace fockspec {

/// Absolute/relative tolerance used when the float backend compares values.
constexpr double kFloatTolerance = 1e-9;

template <Scalar S>
SuiteReport verify_fock(const RunConfig &config);
template <Scalar S>
SuiteReport verify_alpha(const RunConfig &config);
template <Scalar S>
SuiteReport verify_beta(const RunConfig &config);
template <Scalar S>
SuiteReport verify_coherence(const RunConfig &config);
template <Scalar S>
SuiteReport verify_density(const RunConfig &config);
SuiteReport verify_spectral(const RunConfig &config);
SuiteReport simulate(const RunConfig &config);

/// Runs one suite with the configured backend.
SuiteReport run_suite(Command command, const RunConfig &config);
/// Validates the config, then runs every suite the command selects.
RunReport run(const RunConfig &config);

}  // namespace fockspec
