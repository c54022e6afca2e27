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
#include <deque>
#include <string>
#include <vector>

#include "fockspec/harness/config.hpp"
#include "json.hpp"

namespace fockspec {

struct Failure {
    std::string message;
    nlohmann::json counterexample;
};

/// Outcome of one checked identity: how many cases ran and which failed.
struct CheckReport {
    static constexpr size_t kMaxRecorded = 10;

    CheckReport(std::string name, std::string identity) : name(std::move(name)), identity(std::move(identity)) {
    }

    std::string name;
    std::string identity;
    uint64_t cases = 0;
    uint64_t failed = 0;
    /// The first kMaxRecorded failures, with their offending objects.
    std::vector<Failure> failures;

    /// Counts one case; on failure records the payload built by make_payload.
    template <class MakePayload>
    bool record(bool ok, const std::string &message, MakePayload &&make_payload) {
        cases++;
        if (!ok) {
            failed++;
            if (failures.size() < kMaxRecorded) {
                failures.push_back(Failure{message, make_payload()});
            }
        }
        return ok;
    }
    bool record(bool ok, const std::string &message) {
        return record(ok, message, [] { return nlohmann::json::object(); });
    }
};

struct SuiteReport {
    SuiteReport(std::string name, std::string identity) : name(std::move(name)), identity(std::move(identity)) {
    }

    std::string name;
    std::string identity;
    std::deque<CheckReport> checks;  // deque keeps add_check references valid
    /// Suite-specific deterministic data (estimates, discrepancies, grids).
    nlohmann::json details = nlohmann::json::object();
    double seconds = 0;

    CheckReport &add_check(std::string check_name, std::string check_identity);
    uint64_t cases() const;
    uint64_t failures() const;
};

struct RunReport {
    RunConfig config;
    std::vector<SuiteReport> suites;
    double seconds = 0;

    bool passed() const;
};

nlohmann::json config_json(const RunConfig &config);
/// The full report; timings live only under the top-level "timings" key.
nlohmann::json report_json(const RunReport &report);
std::string format_report(const RunReport &report, Format format);

}  // namespace fockspec
