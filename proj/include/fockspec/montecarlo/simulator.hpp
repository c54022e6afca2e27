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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "fockspec/core/binary_seq.hpp"
#include "fockspec/core/torus_step.hpp"
#include "fockspec/errors.hpp"
#include "fockspec/wick/gauss_poly.hpp"

namespace fockspec {

/// One point of the Gaussian inverse-limit space truncated at leaf depth K.
/// Node values are stored level by level: the node of s lives at 2^|s| - 1 + value(s).
class TreeSample {
   public:
    TreeSample(unsigned depth, std::vector<std::complex<double>> leaves);

    unsigned depth() const { return depth_; }
    const std::complex<double> &at(const BinarySeq &s) const;
    const std::vector<std::complex<double>> &nodes() const { return nodes_; }
    std::vector<std::complex<double>> leaves() const;
    /// The same point seen only down to a shallower leaf depth.
    TreeSample truncated(unsigned depth) const;

    /// max over interior s of |f(s) - (f(s0) + f(s1))/sqrt 2|.
    double max_residual() const;

    static size_t node_index(const BinarySeq &s) { return (size_t{1} << s.length()) - 1 + s.value(); }

   private:
    unsigned depth_;
    std::vector<std::complex<double>> nodes_;
};

/// Derives the 64-bit stream seed of one sample from the master seed.
uint64_t sample_stream_seed(uint64_t master_seed, uint64_t sample_index);

/// Leaves i.i.d. with independent N(0, 1/2) real and imaginary parts; interior
/// nodes by upward averaging. Deterministic in (depth, seed, index).
TreeSample sample_tree(unsigned depth, uint64_t seed, uint64_t index, const Limits &limits = {});

/// Multiplies the leaf under s by g at the length-n prefix of s and recomputes the interior.
template <Scalar S>
TreeSample act_boolean(const TorusStep<S> &g, const TreeSample &t) {
    if (g.level() > t.depth()) {
        throw DomainError("act_boolean: torus level " + std::to_string(g.level()) + " exceeds sample depth " +
                          std::to_string(t.depth()));
    }
    auto leaves = t.leaves();
    const unsigned shift = t.depth() - g.level();
    std::vector<std::complex<double>> phases;
    for (size_t i = 0; i < (size_t{1} << g.level()); i++) {
        phases.push_back(g.at(BinarySeq(g.level(), i)).to_complex());
    }
    for (size_t i = 0; i < leaves.size(); i++) {
        leaves[i] *= phases[i >> shift];
    }
    return TreeSample(t.depth(), std::move(leaves));
}

/// A polynomial flattened for repeated evaluation on tree samples.
class CompiledPoly {
   public:
    template <Scalar S>
    explicit CompiledPoly(const GaussPoly<S> &p) {
        for (const auto &[m, c] : p.terms()) {
            Term t{c.to_complex(), {}};
            for (const auto &[s, ab] : m.exponents()) {
                t.factors.push_back(Factor{s, ab.first, ab.second});
            }
            terms_.push_back(std::move(t));
        }
    }

    /// Largest variable length, or 0 for constants.
    unsigned max_level() const;
    unsigned degree() const;
    std::complex<double> evaluate(const TreeSample &t) const;

   private:
    struct Factor {
        BinarySeq s;
        unsigned a;
        unsigned b;
    };
    struct Term {
        std::complex<double> coefficient;
        std::vector<Factor> factors;
    };
    std::vector<Term> terms_;
};

struct Estimate {
    std::complex<double> mean;
    double std_error = 0;
    uint64_t samples = 0;

    /// |value - mean| / std_error; 0 when both the gap and the error vanish.
    double z_score(std::complex<double> value) const;
    bool within(std::complex<double> value, double bands) const;
};

using Observable = std::function<std::complex<double>(const TreeSample &)>;

struct SamplingConfig {
    uint64_t samples = 100'000;
    unsigned depth = 3;
    uint64_t seed = 0;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Sample means and standard errors of every observable over one shared
/// stream of tree samples. Results do not depend on the thread count.
std::vector<Estimate> estimate_observables(const std::vector<Observable> &observables, const SamplingConfig &config,
                                           const Limits &limits = {});

/// Estimates of the Gaussian expectation of each polynomial.
template <Scalar S>
std::vector<Estimate> estimate(const std::vector<GaussPoly<S>> &polys, const SamplingConfig &config,
                               const Limits &limits = {}) {
    std::vector<Observable> obs;
    for (const auto &p : polys) {
        CompiledPoly c(p);
        if (c.max_level() > config.depth) {
            throw DomainError("estimate: polynomial variable deeper than sample depth");
        }
        if (c.degree() > limits.max_sample_degree) {
            throw BoundError("estimate: degree " + std::to_string(c.degree()) + " exceeds cap");
        }
        obs.push_back([c](const TreeSample &t) { return c.evaluate(t); });
    }
    return estimate_observables(obs, config, limits);
}

template <Scalar S>
Estimate estimate(const GaussPoly<S> &p, const SamplingConfig &config, const Limits &limits = {}) {
    return estimate(std::vector<GaussPoly<S>>{p}, config, limits).front();
}

/// Observable t -> P(g.t) * conj(Q(t)); its mean estimates the pairing of P moved by g with Q.
template <Scalar S>
Observable acted_pairing(const TorusStep<S> &g, const GaussPoly<S> &p, const GaussPoly<S> &q) {
    CompiledPoly cp(p);
    CompiledPoly cq(q);
    const unsigned depth = std::max(g.level(), cp.max_level());
    return [g, cp, cq, depth](const TreeSample &t) {
        return cp.evaluate(act_boolean(g, t.truncated(std::min(depth, t.depth())))) * std::conj(cq.evaluate(t));
    };
}

}  // namespace fockspec
