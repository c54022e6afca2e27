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
#include <string>
#include <string_view>
#include <vector>

#include "fockspec/errors.hpp"

namespace fockspec {

enum class Command {
    verify_fock,
    verify_alpha,
    verify_beta,
    verify_coherence,
    verify_density,
    verify_spectral,
    simulate,
    all,
};

enum class Backend { exact, floating };
enum class Format { text, json, csv };
/// Which torus elements randomized checks draw: 8th roots of unity, or arbitrary phases (float only).
enum class PhaseMode { eighth_roots, arbitrary };

struct RunConfig {
    Command command = Command::all;
    unsigned level_max = 2;
    unsigned degree_max = 4;
    unsigned depth_max = 10;
    uint64_t samples = 100'000;
    uint64_t seed = 20260101;
    Backend backend = Backend::exact;
    Format format = Format::text;
    std::string output_path;
    PhaseMode phase_mode = PhaseMode::eighth_roots;
    /// Random torus elements per level in equivariance checks.
    unsigned torus_samples = 200;
    /// Monte Carlo worker threads; 0 means one per hardware thread. Results do not depend on it.
    unsigned threads = 0;

    /// Throws DomainError on an unusable configuration.
    void validate() const;
    /// Size caps derived from the configured levels and degrees.
    Limits limits() const;
};

std::string_view command_name(Command c);
Command parse_command(std::string_view name);
std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);
std::string_view format_name(Format f);
Format parse_format(std::string_view name);
std::string_view phase_mode_name(PhaseMode m);
PhaseMode parse_phase_mode(std::string_view name);

/// The suites a command runs, in report order.
std::vector<Command> expand_command(Command c);

}  // namespace fockspec
