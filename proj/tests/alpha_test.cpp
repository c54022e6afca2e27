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

#include "fockspec/alpha/alpha.hpp"
#include "oracles/generators.hpp"
#include "oracles/oracles.hpp"

using namespace fockspec;

namespace {

GridCell cell(std::initializer_list<const char *> coords) {
    GridCell out;
    for (const char *c : coords) out.coords.push_back(BinarySeq::parse(c));
    return out;
}

template <class S>
FockVector<S> basis(const char *w) {
    return FockVector<S>::basis(AdmissibleWord::parse(w));
}

}  // namespace

TEST(support, examples) {
    auto w = AdmissibleWord::parse("{0,0,~1}");
    auto s = support(w);
    ASSERT_EQ(s, (std::vector<GridCell>{cell({"0", "0", "1"})}));
    ASSERT_EQ(support_measure(w), mpq_class(1, 8));

    auto w2 = AdmissibleWord::parse("{0,1}");
    auto s2 = support(w2);
    std::set<GridCell> got(s2.begin(), s2.end());
    ASSERT_EQ(got, (std::set<GridCell>{cell({"0", "1"}), cell({"1", "0"})}));
    ASSERT_EQ(support_measure(w2), mpq_class(1, 2));
}

TEST(support, matches_brute_force_and_formula) {
    for (unsigned n = 1; n <= 2; n++) {
        for (const auto &w : admissible_words_up_to(n, 4)) {
            auto s = support(w);
            std::set<GridCell> got(s.begin(), s.end());
            ASSERT_EQ(got.size(), s.size()) << w.str();
            ASSERT_EQ(got, oracle::brute_support(w)) << w.str();
            ASSERT_EQ(support_measure(w), support_measure_formula(w)) << w.str();
        }
    }
}

TEST(support, contains_and_word_at_point) {
    auto w = AdmissibleWord::parse("{00,01,~11}");
    ASSERT_TRUE(support_contains(w, cell({"001", "010", "111"})));
    ASSERT_TRUE(support_contains(w, cell({"010", "001", "110"})));
    ASSERT_FALSE(support_contains(w, cell({"001", "111", "010"})));
    ASSERT_EQ(word_at_point(cell({"001", "010", "111"}), 2, 2), w);
    ASSERT_FALSE(word_at_point(cell({"001", "010", "011"}), 2, 2).has_value());
}

TEST(f_alpha, examples) {
    using S = ExactComplex;
    auto f = f_alpha(basis<S>("{0,0,~1}"));
    ASSERT_EQ(norm2(f), S(2));
    for (const char *s : {"0", "1", "00", "11"}) {
        auto w = std::string("{") + s + "}";
        auto g = f_alpha(basis<S>(w.c_str()));
        ASSERT_EQ(norm2(g), S(1));
        const auto &e = g.components().at({1, 0});
        ASSERT_EQ(e.values().size(), 1u);
        ASSERT_NEAR(std::abs(oracle::alpha_value(e, cell({s}))), std::sqrt(std::pow(2.0, std::strlen(s))), 1e-12);
    }
}

TEST(f_alpha, value_on_support) {
    for (unsigned n = 1; n <= 2; n++) {
        for (const auto &w : admissible_words_up_to(n, 4)) {
            auto st = w.stats();
            unsigned p = st.p, q = st.q;
            double expected = std::sqrt(std::pow(2.0, n * w.degree()) / mpz_class(factorial(p) * factorial(q)).get_d());
            for (const auto &[s, m] : st.multiplicities) expected *= factorial(m).get_d();
            auto f = f_alpha_basis<ExactComplex>(w);
            for (const auto &c : support(w)) {
                ASSERT_NEAR(std::abs(oracle::alpha_value(f, c) - expected), 0, 1e-9 * expected) << w.str();
            }
            ASSERT_EQ(f.values().size(), support(w).size());
            ASSERT_TRUE(f.is_block_symmetric()) << w.str();
        }
    }
}

TEST(f_alpha, gram_transport) {
    for (unsigned n = 0; n <= 2; n++) {
        auto words = admissible_words_up_to(n, 4);
        for (size_t a = 0; a < words.size(); a += 5) {
            auto fa = f_alpha(FockVector<ExactComplex>::basis(words[a]));
            for (size_t b = 0; b < words.size(); b++) {
                auto fb = f_alpha(FockVector<ExactComplex>::basis(words[b]));
                ASSERT_EQ(inner(fa, fb), ExactComplex::from_integer(oracle::fock_inner_permanent(words[a], words[b])))
                    << words[a].str() << " " << words[b].str();
            }
        }
    }
}

TEST(f_alpha, isometry_on_random_vectors) {
    for (unsigned n = 0; n <= 2; n++) {
        auto pool = admissible_words_up_to(n, 4);
        for (int trial = 0; trial < 20; trial++) {
            auto u = gen::vector<ExactComplex>(n, pool);
            auto v = gen::vector<ExactComplex>(n, pool);
            ASSERT_EQ(inner(f_alpha(u), f_alpha(v)), inner(u, v));
        }
    }
}

TEST(refine, preserves_values_and_inner_products) {
    using S = ExactComplex;
    AlphaElement<S> chi(1, 0, 1);
    chi.add(cell({"0"}), S(1), 1);
    auto r = chi.refine();
    AlphaElement<S> expected(1, 0, 2);
    expected.add(cell({"00"}), S(1), 1);
    expected.add(cell({"01"}), S(1), 1);
    ASSERT_EQ(r, expected);

    auto pool = admissible_words_up_to(1, 3);
    for (int trial = 0; trial < 20; trial++) {
        auto f = f_alpha(gen::vector<S>(1, pool));
        auto h = f_alpha(gen::vector<S>(1, pool));
        ASSERT_EQ(inner(f.refine(), h.refine()), inner(f, h));
    }
}

TEST(refine, coherence_with_embedding) {
    for (unsigned n = 0; n <= 2; n++) {
        for (const auto &w : admissible_words_up_to(n, 4)) {
            auto v = FockVector<ExactComplex>::basis(w);
            ASSERT_TRUE(close(f_alpha(v).refine(), f_alpha(embed(v)), 0)) << w.str();
        }
    }
}

TEST(apply_rho, equivariance_and_identity) {
    for (unsigned n = 0; n <= 2; n++) {
        auto pool = admissible_words_up_to(n, 4);
        for (int trial = 0; trial < 20; trial++) {
            auto g = gen::torus<ExactComplex>(n);
            auto v = gen::vector<ExactComplex>(n, pool);
            ASSERT_EQ(apply_rho(g, f_alpha(v)), f_alpha(act(g, v)));
            ASSERT_EQ(apply_rho(TorusStep<ExactComplex>::identity(n), f_alpha(v)), f_alpha(v));
        }
    }
}

TEST(apply_rho, float_equivariance) {
    std::mt19937_64 rng(11);
    auto pool = admissible_words_up_to(2, 4);
    for (int trial = 0; trial < 20; trial++) {
        auto g = TorusStep<FloatComplex>::random_phases(2, rng);
        auto v = gen::vector<FloatComplex>(2, pool);
        ASSERT_TRUE(close(apply_rho(g, f_alpha(v)), f_alpha(act(g, v)), 1e-9));
    }
}

TEST(apply_rho, constant_phase_on_support) {
    using S = ExactComplex;
    auto g = TorusStep<S>::from_eighth_roots(1, {1, 3});
    auto w = AdmissibleWord::parse("{0,0,~1}");
    S c = g.on_cylinder(BinarySeq::parse("0")) * g.on_cylinder(BinarySeq::parse("0")) *
          conj(g.on_cylinder(BinarySeq::parse("1")));
    for (const auto &x : support(w)) {
        ASSERT_EQ(rho_phase(g, x, 2), c);
        for (const auto &child : refine_cell(x)) ASSERT_EQ(rho_phase(g, child, 2), c);
    }
}

TEST(apply_rho, depth_error) {
    using S = ExactComplex;
    auto f = f_alpha(basis<S>("{0}"));
    ASSERT_THROW(apply_rho(TorusStep<S>::identity(2), f), DomainError);
}

TEST(alpha_element, errors) {
    using S = ExactComplex;
    ASSERT_THROW(AlphaElement<S>(0, 0, 1), DomainError);
    AlphaElement<S> f(1, 1, 1);
    ASSERT_THROW(f.add(cell({"0"}), S(1), 1), DomainError);
    ASSERT_THROW(f.add(cell({"0", "01"}), S(1), 1), DomainError);
    ASSERT_THROW(f.refined_to(0), DomainError);
    Limits shallow;
    shallow.max_depth = 1;
    ASSERT_THROW(f.refine(shallow), BoundError);
}

TEST(alpha_element, block_symmetry_detects_asymmetry) {
    using S = ExactComplex;
    AlphaElement<S> f(2, 0, 1);
    f.add(cell({"0", "1"}), S(1), 1);
    ASSERT_FALSE(f.is_block_symmetric());
    f.add(cell({"1", "0"}), S(1), 1);
    ASSERT_TRUE(f.is_block_symmetric());
}

TEST(separation, distinct_points_are_separated) {
    // Points with pairwise distinct coordinates across blocks, compared at a common depth.
    std::mt19937_64 rng(3);
    for (unsigned n = 1; n <= 3; n++) {
        std::uniform_int_distribution<uint64_t> coord(0, (uint64_t{1} << n) - 1);
        int tested = 0;
        while (tested < 50) {
            GridCell a, b;
            for (int i = 0; i < 3; i++) a.coords.push_back(BinarySeq(n, coord(rng)));
            for (int i = 0; i < 3; i++) b.coords.push_back(BinarySeq(n, coord(rng)));
            auto wa = word_at_point(a, 2, n);
            auto wb = word_at_point(b, 2, n);
            if (!wa || !wb || block_sorted(a, 2) == block_sorted(b, 2)) continue;
            tested++;
            ASSERT_TRUE(support_contains(*wa, a));
            ASSERT_FALSE(support_contains(*wa, b)) << a.str() << " " << b.str();
        }
    }
}
