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

#include "fockspec/harness/config.hpp"

#include <array>
#include <utility>

namespace fockspec {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands{{
    {Command::verify_fock, "verify-fock"},
    {Command::verify_alpha, "verify-alpha"},
    {Command::verify_beta, "verify-beta"},
    {Command::verify_coherence, "verify-coherence"},
    {Command::verify_density, "verify-density"},
    {Command::verify_spectral, "verify-spectral"},
    {Command::simulate, "simulate"},
    {Command::all, "all"},
}};

template <class E, size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N> &table, E e) {
    for (const auto &[k, v] : table) {
        if (k == e) return v;
    }
    return "?";
}

template <class E, size_t N>
E parse_of(const std::array<std::pair<E, std::string_view>, N> &table, std::string_view name, const char *what) {
    for (const auto &[k, v] : table) {
        if (v == name) return k;
    }
    throw DomainError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

constexpr std::array<std::pair<Backend, std::string_view>, 2> kBackends{{
    {Backend::exact, "exact"},
    {Backend::floating, "float"},
}};
constexpr std::array<std::pair<Format, std::string_view>, 3> kFormats{{
    {Format::text, "text"},
    {Format::json, "json"},
    {Format::csv, "csv"},
}};
constexpr std::array<std::pair<PhaseMode, std::string_view>, 2> kPhaseModes{{
    {PhaseMode::eighth_roots, "roots8"},
    {PhaseMode::arbitrary, "arbitrary"},
}};

}  // namespace

std::string_view command_name(Command c) { return name_of(kCommands, c); }
Command parse_command(std::string_view name) { return parse_of(kCommands, name, "command"); }
std::string_view backend_name(Backend b) { return name_of(kBackends, b); }
Backend parse_backend(std::string_view name) { return parse_of(kBackends, name, "backend"); }
std::string_view format_name(Format f) { return name_of(kFormats, f); }
Format parse_format(std::string_view name) { return parse_of(kFormats, name, "format"); }
std::string_view phase_mode_name(PhaseMode m) { return name_of(kPhaseModes, m); }
PhaseMode parse_phase_mode(std::string_view name) { return parse_of(kPhaseModes, name, "phase mode"); }

void RunConfig::validate() const {
    if (degree_max == 0) {
        throw DomainError("--degree-max must be positive");
    }
    if (depth_max == 0) {
        throw DomainError("--depth-max must be positive");
    }
    if (samples == 0) {
        throw DomainError("--samples must be positive");
    }
    if (torus_samples == 0) {
        throw DomainError("--torus-samples must be positive");
    }
    if (backend == Backend::exact && phase_mode == PhaseMode::arbitrary) {
        throw DomainError(
            "the exact backend only represents 8th roots of unity; use --backend float for arbitrary phases");
    }
}

Limits RunConfig::limits() const {
    Limits out;
    out.max_level = level_max + 1;
    out.max_degree = degree_max;
    return out;
}

std::vector<Command> expand_command(Command c) {
    if (c != Command::all) {
        return {c};
    }
    std::vector<Command> out;
    for (const auto &[k, v] : kCommands) {
        if (k != Command::all) out.push_back(k);
    }
    return out;
}

}  // namespace fockspec
