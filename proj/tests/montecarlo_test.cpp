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

#include "fockspec/montecarlo/simulator.hpp"
#include "fockspec/wick/wick.hpp"
#include "oracles/generators.hpp"

using namespace fockspec;

namespace {

using S = ExactComplex;

GaussPoly<S> z(const char *s) { return GaussPoly<S>::z(BinarySeq::parse(s)); }
GaussPoly<S> zb(const char *s) { return GaussPoly<S>::zbar(BinarySeq::parse(s)); }

SamplingConfig config(uint64_t samples, unsigned depth, uint64_t seed = 7, unsigned threads = 1) {
    SamplingConfig c;
    c.samples = samples;
    c.depth = depth;
    c.seed = seed;
    c.threads = threads;
    return c;
}

std::complex<double> exact_moment(const GaussPoly<S> &p) { return moment(refine_poly(p, p.max_level())).to_complex(); }

}  // namespace

TEST(tree_sample, constraint_and_layout) {
    for (unsigned K = 0; K <= 6; K++) {
        auto t = sample_tree(K, 3, 9);
        ASSERT_EQ(t.depth(), K);
        ASSERT_EQ(t.nodes().size(), (size_t{2} << K) - 1);
        ASSERT_LE(t.max_residual(), 1e-12);
        for (const auto &s : BinarySeq::all_of_length(K)) {
            ASSERT_EQ(t.at(s), t.nodes()[TreeSample::node_index(s)]);
        }
        if (K > 0) {
            auto root = (t.at(BinarySeq::parse("0")) + t.at(BinarySeq::parse("1"))) / std::sqrt(2.0);
            ASSERT_NEAR(std::abs(t.at(BinarySeq()) - root), 0, 1e-12);
            auto tr = t.truncated(K - 1);
            ASSERT_EQ(tr.depth(), K - 1);
            ASSERT_EQ(tr.at(BinarySeq()), t.at(BinarySeq()));
        }
    }
}

TEST(tree_sample, errors) {
    ASSERT_THROW(TreeSample(2, std::vector<std::complex<double>>(3)), DomainError);
    auto t = sample_tree(2, 0, 0);
    ASSERT_THROW(t.at(BinarySeq::parse("000")), DomainError);
    ASSERT_THROW(t.truncated(3), DomainError);
    Limits limits;
    limits.max_sample_depth = 4;
    ASSERT_THROW(sample_tree(5, 0, 0, limits), BoundError);
}

TEST(tree_sample, determinism) {
    auto a = sample_tree(4, 42, 17);
    auto b = sample_tree(4, 42, 17);
    ASSERT_EQ(a.nodes(), b.nodes());
    ASSERT_NE(a.nodes(), sample_tree(4, 42, 18).nodes());
    ASSERT_NE(a.nodes(), sample_tree(4, 43, 17).nodes());
    ASSERT_NE(sample_stream_seed(1, 0), sample_stream_seed(0, 1));
}

TEST(act_boolean, identity_phases_and_constraint) {
    auto t = sample_tree(4, 1, 2);
    ASSERT_EQ(act_boolean(TorusStep<S>::identity(2), t).nodes(), t.nodes());
    auto g = TorusStep<S>::from_eighth_roots(1, {2, 5});
    auto a = act_boolean(g, t);
    ASSERT_LE(a.max_residual(), 1e-12);
    for (const auto &s : BinarySeq::all_of_length(3)) {
        auto phase = g.on_cylinder(s).to_complex();
        ASSERT_NEAR(std::abs(a.at(s) - phase * t.at(s)), 0, 1e-12);
    }
    ASSERT_THROW(act_boolean(TorusStep<S>::identity(5), t), DomainError);
}

TEST(estimate, constant_is_exact) {
    auto e = estimate(GaussPoly<S>::constant(S(1)), config(1000, 2));
    ASSERT_EQ(e.mean, std::complex<double>(1.0, 0.0));
    ASSERT_EQ(e.std_error, 0.0);
    ASSERT_EQ(e.samples, 1000u);
}

TEST(estimate, moments_within_three_standard_errors) {
    std::vector<GaussPoly<S>> polys{
        z("0") * zb("0") * z("1") * zb("1"),
        z("0") * z("0") * zb("1"),
        z("") * zb("") * z("") * zb(""),
        z("01") * zb("01"),
        z("010") * zb("010"),
        z("1"),
        z("0") * zb("00"),
        z("") * zb("11"),
    };
    auto est = estimate(polys, config(200000, 3));
    for (size_t i = 0; i < polys.size(); i++) {
        ASSERT_TRUE(est[i].within(exact_moment(polys[i]), 3.0))
            << polys[i].str() << " mean " << est[i].mean << " se " << est[i].std_error;
    }
}

TEST(estimate, thread_count_independent) {
    std::vector<GaussPoly<S>> polys{z("0") * zb("1"), z("") * zb("")};
    auto one = estimate(polys, config(20000, 3, 5, 1));
    auto three = estimate(polys, config(20000, 3, 5, 3));
    for (size_t i = 0; i < polys.size(); i++) {
        ASSERT_EQ(one[i].mean, three[i].mean);
        ASSERT_EQ(one[i].std_error, three[i].std_error);
    }
}

TEST(estimate, errors) {
    ASSERT_THROW(estimate(z("0"), config(0, 2)), DomainError);
    ASSERT_THROW(estimate(z("000"), config(10, 2)), DomainError);
    Limits limits;
    limits.max_sample_degree = 2;
    ASSERT_THROW(estimate(z("0") * z("0") * z("0"), config(10, 2), limits), BoundError);
    limits = Limits{};
    limits.max_samples = 5;
    ASSERT_THROW(estimate(z("0"), config(10, 2), limits), BoundError);
}

TEST(estimate, action_preserves_distribution) {
    auto g = TorusStep<S>::from_eighth_roots(2, {1, 3, 6, 7});
    std::vector<GaussPoly<S>> polys{z("0") * zb("0"), z("00") * z("00") * zb("00") * zb("00"), z("") * zb("1")};
    for (const auto &p : polys) {
        CompiledPoly c(p);
        auto before = estimate_observables({[c](const TreeSample &t) { return c.evaluate(t); }}, config(100000, 3))[0];
        auto after = estimate_observables(
            {[c, g](const TreeSample &t) { return c.evaluate(act_boolean(g, t)); }}, config(100000, 3, 8))[0];
        double se = std::hypot(before.std_error, after.std_error);
        ASSERT_LE(std::abs(before.mean - after.mean), 3 * se) << p.str();
    }
}

TEST(estimate, koopman_pairings_match_exact_values) {
    auto g = TorusStep<S>::from_eighth_roots(2, {1, 2, 5, 0});
    std::vector<std::pair<GaussPoly<S>, GaussPoly<S>>> pairs{
        {z("0"), z("0")},
        {z(""), z("")},
        {z("0") * zb("1"), z("0") * zb("1")},
        {z("01") * z("01"), z("01") * z("01")},
        {z(""), z("10")},
    };
    for (const auto &[p, q] : pairs) {
        auto exact = inner_b(koopman(g, p), q).to_complex();
        auto est = estimate_observables({acted_pairing(g, p, q)}, config(100000, 3))[0];
        ASSERT_TRUE(est.within(exact, 3.0)) << p.str() << " " << q.str() << " " << est.mean << " vs " << exact;
    }
}
