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

#include "fockspec/alpha/alpha.hpp"
#include "fockspec/core/torus_step.hpp"
#include "fockspec/fock/fock_vector.hpp"
#include "fockspec/spectral/spectral.hpp"
#include "fockspec/wick/gauss_poly.hpp"
#include "json.hpp"

namespace fockspec {

template <Scalar S>
nlohmann::json scalar_json(const S &x) {
    auto z = x.to_complex();
    return {{"text", x.str()}, {"re", z.real()}, {"im", z.imag()}};
}

inline nlohmann::json complex_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

template <Scalar S>
nlohmann::json fock_json(const FockVector<S> &v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[w, c] : v.terms()) {
        terms.push_back({{"word", w.str()}, {"coefficient", scalar_json(c)}});
    }
    return {{"level", v.level()}, {"terms", terms}};
}

/// A polynomial as a list of {coefficient, factors: [{word, a, b}]} records.
template <Scalar S>
nlohmann::json poly_json(const GaussPoly<S> &p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[m, c] : p.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto &[s, ab] : m.exponents()) {
            factors.push_back({{"word", s.str()}, {"a", ab.first}, {"b", ab.second}});
        }
        terms.push_back({{"coefficient", scalar_json(c)}, {"factors", factors}});
    }
    return terms;
}

template <Scalar S>
nlohmann::json alpha_json(const AlphaSum<S> &f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[key, e] : f.components()) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto &[cell, v] : e.values()) {
            cells.push_back({{"cell", cell.str()}, {"value", scalar_json(v)}});
        }
        out.push_back({
            {"p", e.p()},
            {"q", e.q()},
            {"depth", e.depth()},
            {"radical", e.radical().get_str()},
            {"cells", cells},
        });
    }
    return out;
}

template <Scalar S>
nlohmann::json torus_json(const TorusStep<S> &g) {
    nlohmann::json values = nlohmann::json::array();
    for (size_t i = 0; i < (size_t{1} << g.level()); i++) {
        values.push_back(scalar_json(g.at(BinarySeq(g.level(), i))));
    }
    return {{"level", g.level()}, {"values", values}};
}

inline nlohmann::json measure_json(const DepthMeasure &mu) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto &[cell, w] : mu.weights()) {
        cells.push_back({{"cell", cell.str()}, {"weight", w.get_str()}});
    }
    return {{"index", mu.index().str()}, {"depth", mu.depth()}, {"cells", cells}};
}

}  // namespace fockspec
