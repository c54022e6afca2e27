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

#include <random>
#include <vector>

#include "fockspec/core/binary_seq.hpp"
#include "fockspec/core/scalar.hpp"

namespace fockspec {

/// An element g of S_n, i.e. a step function on 2^N constant on each cylinder
/// [s], s in 2^n, stored as the sequence (g_s) indexed by s.
template <Scalar S>
class TorusStep {
   public:
    /// Throws DomainError unless values.size() == 2^level and every value is a unit.
    TorusStep(unsigned level, std::vector<S> values) : level_(level), values_(std::move(values)) {
        if (level > 20) {
            throw BoundError("torus level too large");
        }
        if (values_.size() != (size_t{1} << level)) {
            throw DomainError("torus step needs 2^level values");
        }
        for (const auto &v : values_) {
            if (!v.is_unit()) {
                throw DomainError("torus step value " + v.str() + " is not of modulus 1");
            }
        }
    }

    static TorusStep identity(unsigned level) {
        return TorusStep(level, std::vector<S>(size_t{1} << level, S::one()));
    }
    /// g_s = exp(2 pi i k_s / 8).
    static TorusStep from_eighth_roots(unsigned level, const std::vector<int> &exponents) {
        std::vector<S> values;
        values.reserve(exponents.size());
        for (int k : exponents) {
            values.push_back(S::root_of_unity8(k));
        }
        return TorusStep(level, std::move(values));
    }
    template <class Rng>
    static TorusStep random_eighth_roots(unsigned level, Rng &rng) {
        std::uniform_int_distribution<int> dist(0, 7);
        std::vector<int> ks(size_t{1} << level);
        for (auto &k : ks) {
            k = dist(rng);
        }
        return from_eighth_roots(level, ks);
    }
    /// Arbitrary phases; only representable on the float backend.
    template <class Rng>
    static TorusStep random_phases(unsigned level, Rng &rng) {
        std::uniform_real_distribution<double> dist(0.0, 2.0 * M_PI);
        std::vector<S> values;
        for (size_t i = 0; i < (size_t{1} << level); i++) {
            values.push_back(S::from_complex(std::polar(1.0, dist(rng))));
        }
        return TorusStep(level, std::move(values));
    }

    unsigned level() const { return level_; }
    const std::vector<S> &values() const { return values_; }

    /// g_s for |s| == level.
    const S &at(const BinarySeq &s) const {
        if (s.length() != level_) {
            throw DomainError("torus value requested at word of wrong length");
        }
        return values_[s.value()];
    }
    /// g evaluated on the cylinder [s] for any |s| >= level.
    const S &on_cylinder(const BinarySeq &s) const {
        if (s.length() < level_) {
            throw DomainError("torus step is not constant on cylinder " + s.str());
        }
        return values_[s.prefix(level_).value()];
    }

    /// The same element viewed in S_{level+1}.
    TorusStep lift() const {
        std::vector<S> out;
        out.reserve(values_.size() * 2);
        for (const auto &v : values_) {
            out.push_back(v);
            out.push_back(v);
        }
        return TorusStep(level_ + 1, std::move(out));
    }

    TorusStep inverse() const {
        std::vector<S> out;
        for (const auto &v : values_) {
            out.push_back(conj(v));
        }
        return TorusStep(level_, std::move(out));
    }

    friend TorusStep operator*(const TorusStep &a, const TorusStep &b) {
        if (a.level_ != b.level_) {
            throw DomainError("torus step level mismatch");
        }
        std::vector<S> out;
        for (size_t i = 0; i < a.values_.size(); i++) {
            out.push_back(a.values_[i] * b.values_[i]);
        }
        return TorusStep(a.level_, std::move(out));
    }

   private:
    unsigned level_;
    std::vector<S> values_;
};

}  // namespace fockspec
