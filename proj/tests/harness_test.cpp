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

#include <gtest/gtest.h>

#include "fockspec/harness/config.hpp"
#include "fockspec/harness/report.hpp"
#include "fockspec/harness/serialize.hpp"
#include "fockspec/harness/suites.hpp"

using namespace fockspec;

namespace {

RunConfig small_config(Command c) {
    RunConfig config;
    config.command = c;
    config.level_max = 1;
    config.degree_max = 3;
    config.depth_max = 3;
    config.samples = 20000;
    config.torus_samples = 5;
    config.threads = 1;
    return config;
}

void expect_passed(const SuiteReport &s) {
    ASSERT_GT(s.cases(), 0u) << s.name;
    for (const auto &c : s.checks) {
        ASSERT_EQ(c.failed, 0u) << s.name << "/" << c.name;
    }
}

}  // namespace

TEST(config, names_round_trip) {
    for (auto c : {Command::verify_fock, Command::verify_alpha, Command::verify_beta, Command::verify_coherence,
                   Command::verify_density, Command::verify_spectral, Command::simulate, Command::all}) {
        ASSERT_EQ(parse_command(command_name(c)), c);
    }
    ASSERT_EQ(command_name(Command::verify_fock), "verify-fock");
    ASSERT_EQ(parse_backend("float"), Backend::floating);
    ASSERT_EQ(parse_backend(backend_name(Backend::exact)), Backend::exact);
    ASSERT_EQ(parse_format("csv"), Format::csv);
    ASSERT_EQ(parse_phase_mode(phase_mode_name(PhaseMode::arbitrary)), PhaseMode::arbitrary);
    ASSERT_THROW(parse_command("verify-everything"), DomainError);
    ASSERT_THROW(parse_backend("quad"), DomainError);
    ASSERT_THROW(parse_format("xml"), DomainError);
    ASSERT_THROW(parse_phase_mode("roots7"), DomainError);
}

TEST(config, validation) {
    RunConfig c;
    c.validate();
    c.samples = 0;
    ASSERT_THROW(c.validate(), DomainError);
    c = RunConfig{};
    c.degree_max = 0;
    ASSERT_THROW(c.validate(), DomainError);
    c = RunConfig{};
    c.phase_mode = PhaseMode::arbitrary;
    ASSERT_THROW(c.validate(), DomainError);
    c.backend = Backend::floating;
    c.validate();
}

TEST(config, expand_all) {
    auto all = expand_command(Command::all);
    ASSERT_EQ(all.size(), 7u);
    ASSERT_EQ(all.front(), Command::verify_fock);
    ASSERT_EQ(expand_command(Command::simulate), std::vector<Command>{Command::simulate});
}

TEST(report, records_and_caps_failures) {
    SuiteReport s("demo", "identity");
    auto &check = s.add_check("c", "x = x");
    for (int i = 0; i < 15; i++) {
        check.record(i % 2 == 0, "odd case", [i] { return nlohmann::json{{"i", i}}; });
    }
    ASSERT_EQ(check.cases, 15u);
    ASSERT_EQ(check.failed, 7u);
    ASSERT_EQ(check.failures.size(), 7u);
    ASSERT_EQ(check.failures[0].counterexample["i"], 1);
    for (int i = 0; i < 10; i++) check.record(false, "more");
    ASSERT_EQ(check.failures.size(), CheckReport::kMaxRecorded);
    ASSERT_EQ(s.failures(), 17u);
}

TEST(report, json_and_csv_shapes) {
    RunReport r;
    r.config = small_config(Command::verify_fock);
    r.suites.push_back(verify_fock<ExactComplex>(r.config));
    auto j = report_json(r);
    ASSERT_TRUE(j["passed"].get<bool>());
    ASSERT_EQ(j["config"]["command"], "verify-fock");
    ASSERT_EQ(j["suites"].size(), 1u);
    ASSERT_TRUE(j["suites"][0].contains("checks"));
    ASSERT_TRUE(j["timings"].contains("total"));
    ASSERT_FALSE(j["suites"][0].contains("seconds"));

    auto csv = format_report(r, Format::csv);
    ASSERT_EQ(csv.substr(0, csv.find('\n')), "suite,check,identity,cases,failures");
    auto parsed = nlohmann::json::parse(format_report(r, Format::json));
    ASSERT_EQ(parsed["suites"][0]["name"], j["suites"][0]["name"]);
    ASSERT_NE(format_report(r, Format::text).find("verify-fock"), std::string::npos);
}

TEST(report, failing_suite_fails_run) {
    RunReport r;
    r.suites.emplace_back("demo", "identity");
    r.suites[0].add_check("c", "x").record(false, "broken");
    ASSERT_FALSE(r.passed());
    ASSERT_FALSE(report_json(r)["passed"].get<bool>());
}

TEST(serialize, objects) {
    using S = ExactComplex;
    auto j = scalar_json(S::inv_sqrt2());
    ASSERT_NEAR(j["re"].get<double>(), std::sqrt(0.5), 1e-15);
    ASSERT_EQ(j["im"].get<double>(), 0.0);
    auto v = FockVector<S>::basis(AdmissibleWord::parse("{0,0,~1}"));
    auto fj = fock_json(v);
    ASSERT_EQ(fj["level"], 1);
    ASSERT_EQ(fj["terms"].size(), 1u);
}

TEST(suites, small_runs_pass_on_both_backends) {
    for (auto backend : {Backend::exact, Backend::floating}) {
        for (auto c : {Command::verify_fock, Command::verify_alpha, Command::verify_beta, Command::verify_coherence,
                       Command::verify_density, Command::verify_spectral}) {
            auto config = small_config(c);
            config.backend = backend;
            expect_passed(run_suite(c, config));
        }
    }
    auto config = small_config(Command::verify_fock);
    config.backend = Backend::floating;
    config.phase_mode = PhaseMode::arbitrary;
    expect_passed(run_suite(Command::verify_fock, config));
}

TEST(suites, simulate_is_deterministic) {
    auto config = small_config(Command::simulate);
    auto a = run(config);
    config.threads = 2;
    auto b = run(config);
    ASSERT_TRUE(a.passed());
    auto ja = report_json(a);
    auto jb = report_json(b);
    ja.erase("timings");
    jb.erase("timings");
    ja["config"].erase("threads");
    jb["config"].erase("threads");
    ASSERT_EQ(ja, jb);
}

TEST(suites, density_reports_centering_discrepancy) {
    auto s = verify_density<ExactComplex>(small_config(Command::verify_density));
    expect_passed(s);
    ASSERT_TRUE(s.details.contains("sqrt_factorial_centering_discrepancies"));
    ASSERT_FALSE(s.details["sqrt_factorial_centering_discrepancies"].empty());
}

TEST(suites, spectral_reports_characterization_disagreements) {
    auto s = verify_spectral(small_config(Command::verify_spectral));
    expect_passed(s);
    ASSERT_TRUE(s.details.contains("stated_characterization_disagreements"));
}
