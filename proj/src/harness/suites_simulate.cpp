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

#include <random>

#include "fockspec/harness/serialize.hpp"
#include "fockspec/harness/suites.hpp"
#include "fockspec/montecarlo/simulator.hpp"
#include "fockspec/wick/wick.hpp"

namespace fockspec {

namespace {

using Poly = GaussPoly<ExactComplex>;

Poly z(const char *s) { return Poly::z(BinarySeq::parse(s)); }
Poly zb(const char *s) { return Poly::zbar(BinarySeq::parse(s)); }
Poly abs2(const char *s) { return z(s) * zb(s); }

/// The fixed estimator suite: 20 monomials of degree <= 6 in variables of length <= 3.
std::vector<Poly> moment_suite() {
    return {
        abs2("e"),
        abs2("0"),
        abs2("011"),
        z("e"),
        power(abs2("e"), 2),
        abs2("0") * abs2("1"),
        z("0") * z("0") * zb("1"),
        power(abs2("e"), 3),
        z("e") * zb("0"),
        z("00") * zb("0"),
        z("e") * z("e") * zb("00") * zb("01"),
        abs2("0") * abs2("10"),
        abs2("e") * abs2("1"),
        power(abs2("0"), 3),
        z("00") * z("00") * zb("00") * zb("01"),
        abs2("00") * abs2("01") * abs2("10"),
        z("e") * z("e") * zb("e"),
        z("0") * zb("1"),
        power(abs2("000"), 2),
        z("e") * zb("111") * abs2("01"),
    };
}

/// Pairs (P, Q) whose Koopman-moved pairing is estimated.
std::vector<std::pair<Poly, Poly>> koopman_suite() {
    return {
        {z("0"), z("0")},
        {z("e"), z("e")},
        {z("e"), z("0")},
        {z("0") * zb("1"), z("0") * zb("1")},
        {abs2("e"), abs2("e")},
        {z("00") * z("01"), z("e") * z("e")},
        {z("e") * zb("10"), z("1") * zb("1")},
        {z("01"), z("0")},
        {z("e") * z("e"), z("00") * z("11")},
        {abs2("0") * z("1"), z("1")},
    };
}

unsigned poly_level(const Poly &p) { return p.max_level(); }

/// At most one miss per 20 estimates, and at least one allowed.
size_t allowed_misses(size_t n) { return std::max<size_t>(1, n / 20); }

}  // namespace

SuiteReport simulate(const RunConfig &config) {
    SuiteReport suite{"simulate", "Monte Carlo estimates on the Gaussian inverse-limit tree"};
    auto &residual = suite.add_check("tree-residual", "f(s) = (f(s0) + f(s1))/sqrt 2 within 1e-12 at every node");
    auto &determinism = suite.add_check("seed-determinism", "equal seeds give bit-identical samples and estimates");
    auto &moments = suite.add_check("moment-estimates", "|estimate - E P| <= 3 SE for all but 1 in 20 monomials");
    auto &acted = suite.add_check("koopman-estimates",
                                  "|estimate - <U(g) P, Q>_B| <= 3 SE for all but 1 in 20 pairs");
    const Limits limits = config.limits();
    const unsigned depth = config.depth_max;
    std::mt19937_64 rng(config.seed + 4);

    const unsigned checks = static_cast<unsigned>(std::min<uint64_t>(config.samples, 200));
    for (unsigned i = 0; i < checks; i++) {
        auto t = sample_tree(depth, config.seed, i, limits);
        auto g = TorusStep<FloatComplex>::random_phases(std::min(depth, 3u), rng);
        auto acted_t = act_boolean(g, t);
        residual.record(t.max_residual() <= 1e-12 && acted_t.max_residual() <= 1e-12, "tree constraint violated",
                        [&] {
                            return nlohmann::json{{"index", i}, {"sample", t.max_residual()}, {"acted", acted_t.max_residual()}};
                        });
        auto again = sample_tree(depth, config.seed, i, limits);
        determinism.record(again.nodes() == t.nodes(), "resampling with the same seed differs",
                           [&] { return nlohmann::json{{"index", i}}; });
    }

    std::vector<Poly> polys;
    for (const auto &p : moment_suite()) {
        if (poly_level(p) <= depth) polys.push_back(p);
    }
    std::vector<std::pair<Poly, Poly>> pairs;
    for (const auto &pq : koopman_suite()) {
        if (std::max(poly_level(pq.first), poly_level(pq.second)) <= depth) pairs.push_back(pq);
    }
    const unsigned g_level = std::min(depth, 2u);
    auto g = TorusStep<ExactComplex>::random_eighth_roots(g_level, rng);

    std::vector<Observable> observables;
    for (const auto &p : polys) {
        CompiledPoly c(p);
        observables.push_back([c](const TreeSample &t) { return c.evaluate(t); });
    }
    for (const auto &[p, q] : pairs) {
        observables.push_back(acted_pairing(g, p, q));
    }
    SamplingConfig sc{config.samples, depth, config.seed, config.threads};
    auto estimates = estimate_observables(observables, sc, limits);

    SamplingConfig small = sc;
    small.samples = std::min<uint64_t>(config.samples, 5000);
    small.threads = 1;
    auto single = estimate_observables(observables, small, limits);
    small.threads = 3;
    auto multi = estimate_observables(observables, small, limits);
    bool same_estimates = true;
    for (size_t i = 0; i < single.size(); i++) {
        same_estimates = same_estimates && single[i].mean == multi[i].mean && single[i].std_error == multi[i].std_error;
    }
    determinism.record(same_estimates, "estimates depend on the thread count");

    nlohmann::json rows = nlohmann::json::array();
    size_t misses = 0;
    for (size_t i = 0; i < polys.size(); i++) {
        auto exact = inner_b(polys[i], Poly::constant(ExactComplex(1)), limits);
        const auto &e = estimates[i];
        bool ok = e.within(exact.to_complex(), 3.0);
        misses += !ok;
        rows.push_back({{"monomial", polys[i].str()},
                        {"exact", scalar_json(exact)},
                        {"estimate", complex_json(e.mean)},
                        {"std_error", e.std_error},
                        {"z_score", e.z_score(exact.to_complex())},
                        {"within_3se", ok}});
    }
    moments.record(misses <= allowed_misses(polys.size()), "too many estimates outside 3 SE",
                   [&] { return nlohmann::json{{"misses", misses}, {"estimates", rows}}; });

    nlohmann::json acted_rows = nlohmann::json::array();
    size_t acted_misses = 0;
    for (size_t i = 0; i < pairs.size(); i++) {
        const auto &[p, q] = pairs[i];
        auto exact = inner_b(koopman(g, p, limits), q, limits);
        const auto &e = estimates[polys.size() + i];
        bool ok = e.within(exact.to_complex(), 3.0);
        acted_misses += !ok;
        acted_rows.push_back({{"P", p.str()},
                              {"Q", q.str()},
                              {"exact", scalar_json(exact)},
                              {"estimate", complex_json(e.mean)},
                              {"std_error", e.std_error},
                              {"z_score", e.z_score(exact.to_complex())},
                              {"within_3se", ok}});
    }
    acted.record(acted_misses <= allowed_misses(pairs.size()), "too many Koopman estimates outside 3 SE",
                 [&] { return nlohmann::json{{"misses", acted_misses}, {"estimates", acted_rows}}; });

    suite.details["sample_depth"] = depth;
    suite.details["samples"] = config.samples;
    suite.details["seed"] = config.seed;
    suite.details["g"] = torus_json(g);
    suite.details["moment_estimates"] = rows;
    suite.details["koopman_estimates"] = acted_rows;
    return suite;
}

}  // namespace fockspec
