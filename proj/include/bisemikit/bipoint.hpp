/*
 * Copyright 2026 The bisemikit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file bipoint.hpp
 *
 * Half-space splitting of point sets, algebraic bipoints (the n^2 grid of
 * right-by-left coordinate products), cross bipoints, the projection back to
 * a classical point, and metric-tensor bookkeeping.
 */

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bisemikit/errors.hpp"
#include "bisemikit/linalg.hpp"
#include "bisemikit/scalars.hpp"

namespace bisemikit {

inline int sign_of(const Rational& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

template <class B>
using Tuple = std::vector<typename B::value_type>;

/// Disjoint split of a point set into the upper and lower half-space sides.
/// Mixed-sign tuples fit neither side and are reported separately.
template <class B>
struct SemispacePartition {
    std::vector<Tuple<B>> upper;      // all coordinates >= 0 (the all-zero tuple lands here)
    std::vector<Tuple<B>> lower;      // all coordinates <= 0, excluding ties already taken
    std::vector<Tuple<B>> mixed_sign; // rejected: strictly positive and negative coordinates
};

/// Classifies each tuple by coordinate signs. Tuples must share one arity.
template <class B>
SemispacePartition<B> split_solutions(const std::vector<Tuple<B>>& points) {
    SemispacePartition<B> out;
    std::size_t arity = 0;
    bool arity_set = false;
    for (const auto& p : points) {
        if (!arity_set) {
            arity = p.size();
            arity_set = true;
        } else if (p.size() != arity) {
            throw carrier_mismatch("point tuples have differing arity");
        }
        bool has_pos = false, has_neg = false;
        for (const auto& c : p) {
            const int s = sign_of(c);
            has_pos |= s > 0;
            has_neg |= s < 0;
        }
        if (has_pos && has_neg)
            out.mixed_sign.push_back(p);
        else if (has_neg)
            out.lower.push_back(p);
        else
            out.upper.push_back(p); // includes the all-zero tuple by convention
    }
    return out;
}

/// The n^2-bituple of products source_right[i] * source_left[j], kept with
/// its source tuples. Diagonal entries are the matched-index products; the
/// distinction is positional, not arithmetic.
template <class B>
struct AlgebraicBipoint {
    using value_type = typename B::value_type;
    std::size_t n = 0;
    Tuple<B> source_right;
    Tuple<B> source_left;
    std::vector<value_type> entries; // row-major, entry(i,j) = right[i]*left[j]

    const value_type& entry(std::size_t i, std::size_t j) const {
        return entries[i * n + j];
    }
};

template <class B>
AlgebraicBipoint<B> outer_bipoint(Tuple<B> right, Tuple<B> left) {
    if (right.size() != left.size())
        throw dimension_mismatch("source tuples have different lengths");
    if (right.empty()) throw dimension_mismatch("bipoint needs n >= 1");
    AlgebraicBipoint<B> bp;
    bp.n = right.size();
    bp.entries.reserve(bp.n * bp.n);
    for (std::size_t i = 0; i < bp.n; ++i)
        for (std::size_t j = 0; j < bp.n; ++j) bp.entries.push_back(right[i] * left[j]);
    bp.source_right = std::move(right);
    bp.source_left = std::move(left);
    return bp;
}

/// Splits the bituple into its n diagonal entries and the n^2 - n
/// off-diagonal entries in row-major order. Concatenation is lossless.
template <class B>
std::pair<Tuple<B>, Tuple<B>> partition_bipoint(const AlgebraicBipoint<B>& bp) {
    Tuple<B> diagonal, off_diagonal;
    diagonal.reserve(bp.n);
    off_diagonal.reserve(bp.n * bp.n - bp.n);
    for (std::size_t i = 0; i < bp.n; ++i)
        for (std::size_t j = 0; j < bp.n; ++j)
            (i == j ? diagonal : off_diagonal).push_back(bp.entry(i, j));
    return {std::move(diagonal), std::move(off_diagonal)};
}

template <class B>
struct CrossBipoints {
    std::vector<AlgebraicBipoint<B>> general; // [bp_i, bp_j]
    std::vector<AlgebraicBipoint<B>> cross;   // [bp_ij, bp_ji]
};

/// The two general bipoints together with the two cross bipoints built from
/// mismatched sources: (right_i outer left_j) and (right_j outer left_i).
template <class B>
CrossBipoints<B> cross_bipoints(const AlgebraicBipoint<B>& bp_i,
                                const AlgebraicBipoint<B>& bp_j) {
    if (bp_i.n != bp_j.n) throw dimension_mismatch("bipoint dimensions differ");
    CrossBipoints<B> out;
    out.general = {bp_i, bp_j};
    out.cross = {outer_bipoint<B>(bp_i.source_right, bp_j.source_left),
                 outer_bipoint<B>(bp_j.source_right, bp_i.source_left)};
    return out;
}

/// Identifies a symmetric bipoint with the classical point of the upper
/// half-space: requires left[i] to be the involution image of right[i].
template <class B>
Tuple<B> project_bipoint_to_point(const AlgebraicBipoint<B>& bp) {
    for (std::size_t i = 0; i < bp.n; ++i) {
        if (!B::eq(bp.source_left[i], B::involute(bp.source_right[i])))
            throw asymmetric_sources("sources are not mirror images at index " +
                                     std::to_string(i + 1));
    }
    return bp.source_left;
}

enum class MetricKind : std::uint8_t {
    CovariantCovariant,     // type (0,2)
    MixedVariance,          // type (1,1)
    ContravariantContravariant // type (2,0)
};

inline const char* to_string(MetricKind k) {
    switch (k) {
        case MetricKind::CovariantCovariant: return "(0,2)";
        case MetricKind::MixedVariance: return "(1,1)";
        default: return "(2,0)";
    }
}

/// Symmetric metric-tensor components of a declared variance type.
template <class B>
struct MetricComponents {
    MetricKind kind = MetricKind::CovariantCovariant;
    Matrix<B> g;

    static MetricComponents identity(std::size_t n,
                                     MetricKind kind = MetricKind::CovariantCovariant) {
        return MetricComponents{kind, Matrix<B>::identity(n)};
    }
};

template <class B>
typename B::value_type metric_component(const MetricComponents<B>& m, std::size_t i,
                                        std::size_t j) {
    if (i >= m.g.size() || j >= m.g.size())
        throw dimension_mismatch("metric index out of range");
    return m.g(i, j);
}

/// Standard index raising/lowering: contracting one slot of a (0,2) metric
/// against its inverse yields the (1,1) identity-shaped mixed tensor, both
/// slots the (2,0) inverse, and symmetrically from (2,0). Converting between
/// the two pure types is an involution.
template <class B>
MetricComponents<B> convert_metric(const MetricComponents<B>& m, MetricKind target) {
    if (m.kind == target) return m;
    if (m.kind == MetricKind::MixedVariance)
        throw kit_error("a (1,1) metric does not determine the pure-type components");
    if (target == MetricKind::MixedVariance)
        return MetricComponents<B>{target, Matrix<B>::identity(m.g.size())};
    return MetricComponents<B>{target, gauss_jordan_inverse(m.g)};
}

} // namespace bisemikit
