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

#include "fockspec/montecarlo/simulator.hpp"

#include <cmath>
#include <random>
#include <thread>
#include <type_traits>

namespace fockspec {

TreeSample::TreeSample(unsigned depth, std::vector<std::complex<double>> leaves) : depth_(depth) {
    const size_t width = size_t{1} << depth;
    if (leaves.size() != width) {
        throw DomainError("tree sample needs 2^depth leaves");
    }
    nodes_.resize(2 * width - 1);
    std::copy(leaves.begin(), leaves.end(), nodes_.begin() + (width - 1));
    const double inv = std::sqrt(0.5);
    for (size_t level = depth; level-- > 0;) {
        const size_t base = (size_t{1} << level) - 1;
        const size_t child = (size_t{1} << (level + 1)) - 1;
        for (size_t i = 0; i < (size_t{1} << level); i++) {
            nodes_[base + i] = (nodes_[child + 2 * i] + nodes_[child + 2 * i + 1]) * inv;
        }
    }
}

const std::complex<double> &TreeSample::at(const BinarySeq &s) const {
    if (s.length() > depth_) {
        throw DomainError("tree sample has no node " + s.str());
    }
    return nodes_[node_index(s)];
}

std::vector<std::complex<double>> TreeSample::leaves() const {
    const size_t width = size_t{1} << depth_;
    return {nodes_.begin() + (width - 1), nodes_.end()};
}

TreeSample TreeSample::truncated(unsigned depth) const {
    if (depth > depth_) {
        throw DomainError("cannot truncate a tree sample below its leaves");
    }
    const size_t width = size_t{1} << depth;
    return TreeSample(depth, {nodes_.begin() + (width - 1), nodes_.begin() + (2 * width - 1)});
}

double TreeSample::max_residual() const {
    double worst = 0;
    const double inv = std::sqrt(0.5);
    for (size_t level = 0; level < depth_; level++) {
        const size_t base = (size_t{1} << level) - 1;
        const size_t child = (size_t{1} << (level + 1)) - 1;
        for (size_t i = 0; i < (size_t{1} << level); i++) {
            auto avg = (nodes_[child + 2 * i] + nodes_[child + 2 * i + 1]) * inv;
            worst = std::max(worst, std::abs(nodes_[base + i] - avg));
        }
    }
    return worst;
}

uint64_t sample_stream_seed(uint64_t master_seed, uint64_t sample_index) {
    // splitmix64 finalizer over a counter offset from the master seed.
    uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (sample_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

TreeSample sample_tree(unsigned depth, uint64_t seed, uint64_t index, const Limits &limits) {
    if (depth > limits.max_sample_depth) {
        throw BoundError("sample depth " + std::to_string(depth) + " exceeds cap " +
                         std::to_string(limits.max_sample_depth));
    }
    std::mt19937_64 rng(sample_stream_seed(seed, index));
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    std::vector<std::complex<double>> leaves(size_t{1} << depth);
    for (auto &v : leaves) {
        double re = normal(rng);
        double im = normal(rng);
        v = {re, im};
    }
    return TreeSample(depth, std::move(leaves));
}

unsigned CompiledPoly::max_level() const {
    unsigned out = 0;
    for (const auto &t : terms_) {
        for (const auto &f : t.factors) out = std::max(out, f.s.length());
    }
    return out;
}

unsigned CompiledPoly::degree() const {
    unsigned out = 0;
    for (const auto &t : terms_) {
        unsigned d = 0;
        for (const auto &f : t.factors) d += f.a + f.b;
        out = std::max(out, d);
    }
    return out;
}

std::complex<double> CompiledPoly::evaluate(const TreeSample &t) const {
    std::complex<double> total = 0;
    for (const auto &term : terms_) {
        std::complex<double> v = term.coefficient;
        for (const auto &f : term.factors) {
            const auto z = t.at(f.s);
            const auto zb = std::conj(z);
            for (unsigned i = 0; i < f.a; i++) v *= z;
            for (unsigned i = 0; i < f.b; i++) v *= zb;
        }
        total += v;
    }
    return total;
}

double Estimate::z_score(std::complex<double> value) const {
    double gap = std::abs(value - mean);
    if (std_error == 0) {
        return gap == 0 ? 0 : INFINITY;
    }
    return gap / std_error;
}

bool Estimate::within(std::complex<double> value, double bands) const {
    return z_score(value) <= bands;
}

namespace {

/// Neumaier compensated sum.
template <class T>
struct CompensatedSum {
    T sum{};
    T carry{};

    void add(T x) {
        if constexpr (std::is_same_v<T, double>) {
            step(sum, carry, x);
        } else {
            double s_re = sum.real(), c_re = carry.real();
            double s_im = sum.imag(), c_im = carry.imag();
            step(s_re, c_re, x.real());
            step(s_im, c_im, x.imag());
            sum = {s_re, s_im};
            carry = {c_re, c_im};
        }
    }
    T value() const { return sum + carry; }

    static void step(double &s, double &c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }
};

struct Accumulator {
    CompensatedSum<std::complex<double>> first;
    CompensatedSum<double> second;
};

constexpr uint64_t kChunk = 4096;

}  // namespace

std::vector<Estimate> estimate_observables(const std::vector<Observable> &observables, const SamplingConfig &config,
                                           const Limits &limits) {
    if (config.samples == 0) {
        throw DomainError("estimate needs at least one sample");
    }
    if (config.samples > limits.max_samples) {
        throw BoundError("sample count " + std::to_string(config.samples) + " exceeds cap");
    }
    if (config.depth > limits.max_sample_depth) {
        throw BoundError("sample depth exceeds cap");
    }
    const size_t n_obs = observables.size();
    const uint64_t n_chunks = (config.samples + kChunk - 1) / kChunk;
    std::vector<std::vector<Accumulator>> chunks(n_chunks, std::vector<Accumulator>(n_obs));

    auto run_chunk = [&](uint64_t c) {
        const uint64_t begin = c * kChunk;
        const uint64_t end = std::min(config.samples, begin + kChunk);
        for (uint64_t i = begin; i < end; i++) {
            TreeSample t = sample_tree(config.depth, config.seed, i, limits);
            for (size_t k = 0; k < n_obs; k++) {
                auto v = observables[k](t);
                chunks[c][k].first.add(v);
                chunks[c][k].second.add(std::norm(v));
            }
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, n_chunks));
    if (threads <= 1) {
        for (uint64_t c = 0; c < n_chunks; c++) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back([&, w] {
                for (uint64_t c = w; c < n_chunks; c += threads) run_chunk(c);
            });
        }
        for (auto &th : pool) th.join();
    }

    std::vector<Estimate> out(n_obs);
    const double n = static_cast<double>(config.samples);
    for (size_t k = 0; k < n_obs; k++) {
        CompensatedSum<std::complex<double>> s1;
        CompensatedSum<double> s2;
        for (const auto &chunk : chunks) {
            s1.add(chunk[k].first.value());
            s2.add(chunk[k].second.value());
        }
        auto mean = s1.value() / n;
        double var = 0;
        if (config.samples > 1) {
            var = std::max(0.0, (s2.value() - n * std::norm(mean)) / (n - 1));
        }
        out[k] = Estimate{mean, std::sqrt(var / n), config.samples};
    }
    return out;
}

}  // namespace fockspec
