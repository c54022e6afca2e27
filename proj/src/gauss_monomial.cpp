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

#include "fockspec/wick/gauss_poly.hpp"

#include <functional>
#include <vector>

#include "fockspec/core/combinatorics.hpp"

namespace fockspec {

GaussMonomial::GaussMonomial(Exponents exps) {
    for (auto &[s, ab] : exps) {
        if (ab.first || ab.second) {
            exps_.emplace(s, ab);
        }
    }
}

GaussMonomial GaussMonomial::variable(const BinarySeq &s, bool barred) {
    Exponents e;
    e[s] = barred ? std::make_pair(0u, 1u) : std::make_pair(1u, 0u);
    return GaussMonomial(std::move(e));
}

unsigned GaussMonomial::degree() const {
    unsigned d = 0;
    for (const auto &[s, ab] : exps_) {
        d += ab.first + ab.second;
    }
    return d;
}

std::set<unsigned> GaussMonomial::levels() const {
    std::set<unsigned> out;
    for (const auto &[s, ab] : exps_) {
        out.insert(s.length());
    }
    return out;
}

GaussMonomial GaussMonomial::conj() const {
    GaussMonomial out;
    for (const auto &[s, ab] : exps_) {
        out.exps_.emplace(s, std::make_pair(ab.second, ab.first));
    }
    return out;
}

GaussMonomial operator*(const GaussMonomial &x, const GaussMonomial &y) {
    GaussMonomial out = x;
    for (const auto &[s, ab] : y.exps_) {
        auto &slot = out.exps_[s];
        slot.first += ab.first;
        slot.second += ab.second;
    }
    return out;
}

std::string GaussMonomial::str() const {
    if (exps_.empty()) {
        return "1";
    }
    std::string out;
    auto emit = [&](const std::string &name, unsigned e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += name;
        if (e > 1) {
            out += "^" + std::to_string(e);
        }
    };
    for (const auto &[s, ab] : exps_) {
        emit("z" + s.str(), ab.first);
        emit("zb" + s.str(), ab.second);
    }
    return out;
}

mpz_class monomial_moment(const GaussMonomial &m) {
    if (m.levels().size() > 1) {
        throw DomainError("moment of mixed-level monomial " + m.str() + "; refine first");
    }
    mpz_class out = 1;
    for (const auto &[s, ab] : m.exponents()) {
        if (ab.first != ab.second) {
            return 0;
        }
        out *= factorial(ab.first);
    }
    return out;
}

mpz_class wick_pairing_moment(const GaussMonomial &m) {
    if (m.levels().size() > 1) {
        throw DomainError("moment of mixed-level monomial " + m.str() + "; refine first");
    }
    if (m.degree() > 12) {
        throw BoundError("pairing enumeration limited to degree 12");
    }
    // Factor list: (variable index, barred).
    std::vector<std::pair<size_t, bool>> factors;
    size_t var = 0;
    for (const auto &[s, ab] : m.exponents()) {
        for (unsigned i = 0; i < ab.first; i++) factors.emplace_back(var, false);
        for (unsigned i = 0; i < ab.second; i++) factors.emplace_back(var, true);
        var++;
    }
    std::vector<bool> used(factors.size(), false);
    std::function<mpz_class()> pairings = [&]() -> mpz_class {
        size_t first = 0;
        while (first < factors.size() && used[first]) {
            first++;
        }
        if (first == factors.size()) {
            return 1;
        }
        used[first] = true;
        mpz_class total = 0;
        for (size_t j = first + 1; j < factors.size(); j++) {
            if (used[j]) {
                continue;
            }
            // Only z_s paired with conj(z_s) has nonzero covariance.
            bool covariant = factors[j].first == factors[first].first && factors[j].second != factors[first].second;
            if (!covariant) {
                continue;
            }
            used[j] = true;
            total += pairings();
            used[j] = false;
        }
        used[first] = false;
        return total;
    };
    return pairings();
}

}  // namespace fockspec
