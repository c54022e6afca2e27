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

#include <chrono>

#include "fockspec/harness/suites.hpp"

namespace fockspec {

namespace {

template <Scalar S>
SuiteReport run_algebra_suite(Command command, const RunConfig &config) {
    switch (command) {
        case Command::verify_fock:
            return verify_fock<S>(config);
        case Command::verify_alpha:
            return verify_alpha<S>(config);
        case Command::verify_beta:
            return verify_beta<S>(config);
        case Command::verify_coherence:
            return verify_coherence<S>(config);
        case Command::verify_density:
            return verify_density<S>(config);
        default:
            throw DomainError("not an algebra suite");
    }
}

}  // namespace

SuiteReport run_suite(Command command, const RunConfig &config) {
    switch (command) {
        case Command::verify_spectral:
            return verify_spectral(config);
        case Command::simulate:
            return simulate(config);
        case Command::all:
            throw DomainError("run_suite needs a single suite");
        default:
            if (config.backend == Backend::exact) {
                return run_algebra_suite<ExactComplex>(command, config);
            }
            return run_algebra_suite<FloatComplex>(command, config);
    }
}

RunReport run(const RunConfig &config) {
    config.validate();
    RunReport report{config, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    for (Command c : expand_command(config.command)) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteReport suite = run_suite(c, config);
        suite.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.suites.push_back(std::move(suite));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace fockspec
