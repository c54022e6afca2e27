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

#include "fockspec/harness/report.hpp"

#include <sstream>

namespace fockspec {

CheckReport &SuiteReport::add_check(std::string check_name, std::string check_identity) {
    checks.emplace_back(std::move(check_name), std::move(check_identity));
    return checks.back();
}

uint64_t SuiteReport::cases() const {
    uint64_t n = 0;
    for (const auto &c : checks) n += c.cases;
    return n;
}

uint64_t SuiteReport::failures() const {
    uint64_t n = 0;
    for (const auto &c : checks) n += c.failed;
    return n;
}

bool RunReport::passed() const {
    for (const auto &s : suites) {
        if (s.failures()) return false;
    }
    return true;
}

nlohmann::json config_json(const RunConfig &config) {
    return {
        {"command", command_name(config.command)},
        {"level_max", config.level_max},
        {"degree_max", config.degree_max},
        {"depth_max", config.depth_max},
        {"samples", config.samples},
        {"seed", config.seed},
        {"backend", backend_name(config.backend)},
        {"phase_mode", phase_mode_name(config.phase_mode)},
        {"torus_samples", config.torus_samples},
    };
}

nlohmann::json report_json(const RunReport &report) {
    nlohmann::json suites = nlohmann::json::array();
    nlohmann::json timings = nlohmann::json::object();
    for (const auto &s : report.suites) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &c : s.checks) {
            nlohmann::json failures = nlohmann::json::array();
            for (const auto &f : c.failures) {
                failures.push_back({{"message", f.message}, {"counterexample", f.counterexample}});
            }
            checks.push_back({
                {"name", c.name},
                {"identity", c.identity},
                {"cases", c.cases},
                {"failure_count", c.failed},
                {"failures", failures},
            });
        }
        suites.push_back({
            {"name", s.name},
            {"identity", s.identity},
            {"cases", s.cases()},
            {"failure_count", s.failures()},
            {"passed", s.failures() == 0},
            {"checks", checks},
            {"details", s.details},
        });
        timings[s.name] = s.seconds;
    }
    timings["total"] = report.seconds;
    return {
        {"config", config_json(report.config)},
        {"passed", report.passed()},
        {"suites", suites},
        {"timings", timings},
    };
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_report(const RunReport &report, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::json:
            out << report_json(report).dump(2) << "\n";
            break;
        case Format::csv:
            out << "suite,check,identity,cases,failures\n";
            for (const auto &s : report.suites) {
                for (const auto &c : s.checks) {
                    out << csv_field(s.name) << "," << csv_field(c.name) << "," << csv_field(c.identity) << ","
                        << c.cases << "," << c.failed << "\n";
                }
            }
            break;
        case Format::text:
            for (const auto &s : report.suites) {
                out << (s.failures() ? "FAIL " : "ok   ") << s.name << " (" << s.identity << "): " << s.cases()
                    << " cases, " << s.failures() << " failures\n";
                for (const auto &c : s.checks) {
                    out << "    " << (c.failed ? "FAIL " : "ok   ") << c.name << ": " << c.cases << " cases";
                    if (c.failed) out << ", " << c.failed << " failures";
                    out << "  [" << c.identity << "]\n";
                    for (const auto &f : c.failures) {
                        out << "        " << f.message << "\n";
                        if (!f.counterexample.empty()) {
                            out << "        " << f.counterexample.dump() << "\n";
                        }
                    }
                }
                for (const auto &note : s.details.value("notes", nlohmann::json::array())) {
                    out << "    note: " << note.get<std::string>() << "\n";
                }
            }
            out << (report.passed() ? "all suites passed" : "verification FAILED") << " in " << report.seconds
                << " s\n";
            break;
    }
    return out.str();
}

}  // namespace fockspec
