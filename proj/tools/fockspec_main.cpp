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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fockspec/harness/suites.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitIo = 4;

constexpr const char *kOutputDirEnv = "FOCKSPEC_OUTPUT_DIR";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_extension(fockspec::Format f) {
    return std::string(".") + std::string(fockspec::format_name(f));
}

/// Resolves where the report goes: --output, else the output directory from the environment,
/// else stdout (empty path).
std::filesystem::path resolve_output(const fockspec::RunConfig &config) {
    namespace fs = std::filesystem;
    const char *dir = std::getenv(kOutputDirEnv);
    if (!config.output_path.empty()) {
        fs::path p(config.output_path);
        if (p.is_relative() && dir && *dir) {
            return fs::path(dir) / p;
        }
        return p;
    }
    if (dir && *dir) {
        return fs::path(dir) /
               (std::string(fockspec::command_name(config.command)) + default_extension(config.format));
    }
    return {};
}

void write_report(const std::filesystem::path &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) {
            throw IoError("failed writing report to stdout");
        }
        return;
    }
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace

int main(int argc, char **argv) {
    using namespace fockspec;
    RunConfig config;
    std::string backend = "exact";
    std::string format = "text";
    std::string phase_mode = "roots8";

    CLI::App app{"Exact and Monte Carlo verification of the Fock space realizations and their spectral data"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");

    auto add_options = [&](CLI::App *sub) {
        sub->add_option("--level-max", config.level_max, "largest level n of enumerated words")
            ->capture_default_str();
        sub->add_option("--degree-max", config.degree_max, "largest degree l of enumerated words")
            ->capture_default_str();
        sub->add_option("--depth-max", config.depth_max,
                        "Monte Carlo leaf depth K; also caps spectral and density depths at 3")
            ->capture_default_str();
        sub->add_option("--samples", config.samples, "Monte Carlo sample count")->capture_default_str();
        sub->add_option("--seed", config.seed, "master seed of every randomized check")->capture_default_str();
        sub->add_option("--torus-samples", config.torus_samples, "random torus elements per level")
            ->capture_default_str();
        sub->add_option("--threads", config.threads, "Monte Carlo threads (0: all cores)")->capture_default_str();
        sub->add_option("--backend", backend, "scalar backend")
            ->check(CLI::IsMember({"exact", "float"}))
            ->capture_default_str();
        sub->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--phase-mode", phase_mode, "torus elements drawn by randomized checks")
            ->check(CLI::IsMember({"roots8", "arbitrary"}))
            ->capture_default_str();
        sub->add_option("--output", config.output_path,
                        std::string("report path; relative paths resolve inside $") + kOutputDirEnv);
    };

    const std::vector<std::pair<Command, std::string>> commands{
        {Command::verify_fock, "norms, embedding and torus action on the Fock basis"},
        {Command::verify_alpha, "the L^2 realization F^alpha"},
        {Command::verify_beta, "the Gaussian polynomial realization F^beta and Wick moments"},
        {Command::verify_coherence, "compatibility of both realizations with the embedding"},
        {Command::verify_density, "decay rates of averaged powers"},
        {Command::verify_spectral, "compatible measures and the spectral constraint grid"},
        {Command::simulate, "Monte Carlo cross-check of moments and Koopman pairings"},
        {Command::all, "every suite"},
    };
    for (const auto &[c, help] : commands) {
        auto *sub = app.add_subcommand(std::string(command_name(c)), help);
        add_options(sub);
        sub->callback([&config, c = c] { config.command = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        config.backend = parse_backend(backend);
        config.format = parse_format(format);
        config.phase_mode = parse_phase_mode(phase_mode);
        config.validate();
    } catch (const DomainError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        RunReport report = run(config);
        write_report(resolve_output(config), format_report(report, config.format));
        if (!report.passed()) {
            std::cerr << "verification failed\n";
            return kExitVerificationFailure;
        }
        return 0;
    } catch (const BoundError &e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const IoError &e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DomainError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}
