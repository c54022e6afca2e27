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

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockspec/alpha/alpha.hpp"
#include "fockspec/core/torus_step.hpp"
#include "fockspec/errors.hpp"

namespace fockspec {

/// An element x of N[Z^x]: a positive-integer function on a finite nonempty set of nonzero integers.
class IndexFunction {
   public:
    explicit IndexFunction(std::map<int, unsigned> values);
    /// x_{p,q}: p at level 1, q at level -1.
    static IndexFunction x_pq(unsigned p, unsigned q);
    /// Parses "{1:2,-1:1}".
    static IndexFunction parse(const std::string &text);

    const std::map<int, unsigned> &values() const & { return values_; }
    std::map<int, unsigned> values() && { return std::move(values_); }
    unsigned at(int k) const;
    /// |D(x)|.
    unsigned slot_count() const;
    /// dom(x) is contained in {-1, 1}.
    bool is_unit_supported() const;

    std::string str() const;

    auto operator<=>(const IndexFunction &) const = default;
    bool operator==(const IndexFunction &) const = default;

   private:
    std::map<int, unsigned> values_;
};

/// An element (k, i) of D(x).
struct Slot {
    int level = 0;
    unsigned index = 0;
    auto operator<=>(const Slot &) const = default;
    bool operator==(const Slot &) const = default;
};

/// D(x) in canonical order: by level, then index. Grid cells over C_x list
/// their coordinates in this order.
std::vector<Slot> slots(const IndexFunction &x);

/// x (+) y, coordinatewise addition.
IndexFunction oplus(const IndexFunction &x, const IndexFunction &y);
/// m x with dom(mx) = m dom(x) and (mx)(mk) = x(k).
IndexFunction scale_index(int m, const IndexFunction &x);

/// A permutation delta of D(x) given on slot positions: delta maps position i to perm[i].
using SlotPermutation = std::vector<size_t>;

/// All good permutations (those fixing the level coordinate); there are prod_k x(k)!.
std::vector<SlotPermutation> good_permutations(const IndexFunction &x, const Limits &limits = {});
/// The cell moved by the good homeomorphism induced by delta.
GridCell permute_cell(const GridCell &cell, const SlotPermutation &delta);

/// Nonnegative rational cylinder weights on (2^n)^{D(x)}.
class DepthMeasure {
   public:
    DepthMeasure(IndexFunction x, unsigned depth);

    /// lambda^{D(x)}: every depth-n cell has mass 2^{-n |D(x)|}.
    static DepthMeasure uniform(const IndexFunction &x, unsigned depth, const Limits &limits = {});

    const IndexFunction &index() const { return x_; }
    unsigned depth() const { return depth_; }
    const std::map<GridCell, mpq_class> &weights() const & { return weights_; }
    std::map<GridCell, mpq_class> weights() && { return std::move(weights_); }
    mpq_class weight(const GridCell &cell) const;

    /// Adds a nonnegative weight to a cell.
    void add(const GridCell &cell, const mpq_class &w);
    mpq_class mass() const;
    bool is_zero() const { return weights_.empty(); }

    /// The pushforward to depth - 1.
    DepthMeasure coarsen() const;
    /// Invariance under every good homeomorphism, tested exactly.
    bool is_good_invariant(const Limits &limits = {}) const;
    /// Mass of the diagonal cylinder {pi_a = pi_b} at this depth.
    mpq_class diagonal_mass(size_t slot_a, size_t slot_b) const;
    /// Every cell charged here is also charged by `other` (same index and depth).
    bool support_contained_in(const DepthMeasure &other) const;

    bool operator==(const DepthMeasure &o) const {
        return x_ == o.x_ && depth_ == o.depth_ && weights_ == o.weights_;
    }
    std::string str() const;

   private:
    IndexFunction x_;
    unsigned depth_;
    std::map<GridCell, mpq_class> weights_;
};

struct CompatibilityReport {
    bool coherent = true;
    std::vector<unsigned> depths;
    std::vector<bool> invariant_per_depth;
    bool invariant = true;
    /// Per depth, the sum over unordered slot pairs of the diagonal-cylinder masses.
    std::vector<mpq_class> diagonal_masses;
    bool diagonals_nonincreasing = true;
    /// Diagonal mass is zero, or strictly smaller at the deepest depth than at the shallowest.
    bool diagonals_decay = true;
    /// Marginal absolute continuity cannot be falsified by finite-depth weights.
    std::string marginal_note;
    bool compatible() const { return coherent && invariant && diagonals_nonincreasing && diagonals_decay; }
};

/// Checks compatibility conditions on a family of the same measure given at consecutive depths.
/// Throws DomainError if the family is empty, mixes index functions, skips depths, or is not
/// coherent under coarsening.
CompatibilityReport is_compatible(const std::vector<DepthMeasure> &family, const Limits &limits = {});

/// R_x(phi) on a cell: prod_{(k,i)} phi(coord_{k,i})^k.
template <Scalar S>
S apply_R(const IndexFunction &x, const TorusStep<S> &phi, const GridCell &cell) {
    auto d = slots(x);
    if (cell.coords.size() != d.size()) {
        throw DomainError("cell arity differs from |D(x)|");
    }
    S out = S::one();
    for (size_t i = 0; i < d.size(); i++) {
        const S &v = phi.on_cylinder(cell.coords[i]);
        int k = d[i].level;
        out *= k > 0 ? power(v, static_cast<unsigned>(k)) : power(conj(v), static_cast<unsigned>(-k));
    }
    return out;
}

/// A step function on the depth-n grid of C_x.
template <Scalar S>
struct GridFunction {
    IndexFunction x;
    unsigned depth;
    std::map<GridCell, S> values;
};

/// rho_{mu_x}(phi) f = R_x(phi) f.
template <Scalar S>
GridFunction<S> apply_rho_general(const TorusStep<S> &phi, const GridFunction<S> &f) {
    if (f.depth < phi.level()) {
        throw DomainError("grid function coarser than torus step");
    }
    GridFunction<S> out{f.x, f.depth, {}};
    for (const auto &[cell, v] : f.values) {
        out.values.emplace(cell, apply_R(f.x, phi, cell) * v);
    }
    return out;
}

/// ||f||^2 in L^2(mu).
template <Scalar S>
S l2_norm2(const GridFunction<S> &f, const DepthMeasure &mu) {
    if (!(f.x == mu.index()) || f.depth != mu.depth()) {
        throw DomainError("grid function and measure live on different grids");
    }
    S out{};
    for (const auto &[cell, v] : f.values) {
        out += norm2(v) * S::from_rational(mu.weight(cell));
    }
    return out;
}

/// Number of pairs (iota^x, iota^y) in I: prod_k (x(k) + y(k))!.
mpz_class pairing_count(const IndexFunction &x, const IndexFunction &y);

/// mu (x) nu = sum over iota-bar in I of (h_iota)_*(mu x nu).
DepthMeasure tensor(const DepthMeasure &mu, const DepthMeasure &nu, const Limits &limits = {});
/// m mu = (e_{x,m})_* mu.
DepthMeasure scale_measure(int m, const DepthMeasure &mu);

/// mu^j_x of the Koopman representation at the given depth; nullopt is the zero measure.
std::optional<DepthMeasure> spectral_form(const IndexFunction &x, unsigned j, unsigned depth,
                                          const Limits &limits = {});

struct ConstraintReport {
    std::vector<int> coefficients;
    std::vector<IndexFunction> indices;
    IndexFunction combined;  // m_1 x_1 (+) ... (+) m_n x_n
    bool lhs_zero = false;
    bool rhs_zero = false;
    std::vector<unsigned> depths;
    std::vector<mpq_class> lhs_mass;  // per depth; empty when lhs is zero
    std::vector<mpq_class> rhs_mass;
    bool abs_cont = false;
};

/// Tests m_1 mu^1_{x_1} (x) ... (x) m_n mu^1_{x_n} << mu^1_x by cylinder-support
/// containment at every depth in [depth_min, depth_max].
ConstraintReport check_constraint(const std::vector<int> &coefficients, const std::vector<IndexFunction> &indices,
                                  unsigned depth_min, unsigned depth_max, const Limits &limits = {});

}  // namespace fockspec
