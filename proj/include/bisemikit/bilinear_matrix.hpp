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
 * @file bilinear_matrix.hpp
 *
 * Pivot-free LDU factorization and the triangular-pair view of a regular
 * matrix: A = xi_R * delta * xi_L with xi_R lower unitriangular, delta
 * diagonal and xi_L upper unitriangular, refined into the pair
 * (T_R lower, T_L upper) with T_R * T_L = A.
 *
 * No pivoting, ever: a permutation matrix is neither upper nor lower
 * triangular, so pivoting would exit the triangular semigroups the pair
 * lives in. Matrices with a zero leading principal minor are a clean error.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bisemikit/bipoint.hpp"
#include "bisemikit/errors.hpp"
#include "bisemikit/linalg.hpp"
#include "bisemikit/scalars.hpp"

namespace bisemikit {

template <class B>
struct GaussFactors {
    Matrix<B> lower_unitriangular;             // xi_R
    std::vector<typename B::value_type> delta; // diagonal entries
    Matrix<B> upper_unitriangular;             // xi_L

    Matrix<B> delta_matrix() const {
        Matrix<B> d(delta.size());
        for (std::size_t i = 0; i < delta.size(); ++i) d(i, i) = delta[i];
        return d;
    }
    Matrix<B> reconstruct() const {
        return lower_unitriangular * delta_matrix() * upper_unitriangular;
    }
};

/// Row-oriented Doolittle elimination without pivoting. delta[k] equals the
/// ratio of the (k+1)-th to the k-th leading principal minor; a zero pivot
/// means the matrix sits outside the pivot-free Gauss cell and raises
/// decomposition_undefined with the 1-based failing index.
template <class B>
GaussFactors<B> gauss_ldu(const Matrix<B>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw dimension_mismatch("cannot decompose an empty matrix");
    Matrix<B> u = a;
    Matrix<B> l = Matrix<B>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (B::is_zero(u(k, k)))
            throw decomposition_undefined(
                k + 1, "zero leading principal minor at index " + std::to_string(k + 1));
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto m = u(i, k) / u(k, k);
            if (B::is_zero(m)) continue;
            l(i, k) = m;
            for (std::size_t j = k; j < n; ++j) u(i, j) = u(i, j) - m * u(k, j);
        }
    }
    GaussFactors<B> f;
    f.lower_unitriangular = std::move(l);
    f.delta.reserve(n);
    f.upper_unitriangular = Matrix<B>::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.delta.push_back(u(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            f.upper_unitriangular(i, j) = u(i, j) / u(i, i);
    }
    return f;
}

/// How the diagonal is distributed over the two triangular factors. The
/// product d_R * d_L = delta is fixed; the split is a caller choice.
enum class DeltaSplit { DeltaLeft, DeltaSqrt };

template <class B>
struct BilinearMatrixPair {
    Matrix<B> right_lower; // T_R, lower triangular over the right carrier
    Matrix<B> left_upper;  // T_L, upper triangular over the left carrier

    Matrix<B> reconstruct() const { return right_lower * left_upper; }
};

/// Splits A into the triangular pair (T_R, T_L) with T_R * T_L = A.
/// DeltaLeft keeps the whole diagonal on the left factor (exact in every
/// backend); DeltaSqrt distributes principal square roots evenly and
/// requires each delta entry to have a square root in the backend.
template <class B>
BilinearMatrixPair<B> bilinear_decompose(const Matrix<B>& a,
                                         DeltaSplit rule = DeltaSplit::DeltaLeft) {
    const GaussFactors<B> f = gauss_ldu(a);
    const std::size_t n = a.size();
    std::vector<typename B::value_type> d_right(n, B::one());
    std::vector<typename B::value_type> d_left = f.delta;
    if (rule == DeltaSplit::DeltaSqrt) {
        for (std::size_t i = 0; i < n; ++i) {
            typename B::value_type root;
            if (!B::sqrt(f.delta[i], root))
                throw sqrt_unavailable("delta entry " + std::to_string(i + 1) +
                                       " has no square root in this backend");
            d_right[i] = root;
            d_left[i] = root;
        }
    }
    BilinearMatrixPair<B> pair;
    pair.right_lower = f.lower_unitriangular;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            pair.right_lower(i, j) = pair.right_lower(i, j) * d_right[j];
    pair.left_upper = f.upper_unitriangular;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            pair.left_upper(i, j) = d_left[i] * pair.left_upper(i, j);
    return pair;
}

/// Action of a triangular pair on a (right, left) source pair: transform
/// each side, then take the outer bipoint of the images. The result is the
/// n^2-dimensional bielement of the representation bisemispace.
template <class B>
AlgebraicBipoint<B> bisemimodule_action(const BilinearMatrixPair<B>& pair,
                                        const Tuple<B>& v_right, const Tuple<B>& v_left) {
    if (v_right.size() != pair.right_lower.size() ||
        v_left.size() != pair.left_upper.size())
        throw dimension_mismatch("action vectors must match the pair dimension");
    return outer_bipoint<B>(pair.right_lower.apply(v_right), pair.left_upper.apply(v_left));
}

struct CorrespondenceReport {
    bool reconstructed = false;   // T_R * T_L == A
    bool factors_preserved = false; // unitriangular parts survive the round trip
    double residual = 0.0;
    bool pass() const { return reconstructed && factors_preserved; }
};

/// Round trip through the three correspondence maps: factor A, send the
/// unitriangular factors to their one-sided images and split the diagonal,
/// rebuild from the pair, and check both the product and the factor-level
/// identifications.
template <class B>
CorrespondenceReport correspondence_roundtrip(const Matrix<B>& a,
                                              DeltaSplit rule = DeltaSplit::DeltaLeft) {
    const GaussFactors<B> f = gauss_ldu(a);
    const BilinearMatrixPair<B> pair = bilinear_decompose(a, rule);
    const std::size_t n = a.size();

    CorrespondenceReport report;
    const Matrix<B> back = pair.reconstruct();
    report.residual = relative_residual(back, a);
    report.reconstructed = back.equals(a);

    // Recover the unitriangular factors from the pair by scaling out the
    // diagonals, and check them against the direct factorization.
    Matrix<B> xi_r = pair.right_lower;
    Matrix<B> xi_l = pair.left_upper;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
        const auto dr = pair.right_lower(j, j);
        const auto dl = pair.left_upper(j, j);
        ok = !B::is_zero(dr) && !B::is_zero(dl) && B::eq(dr * dl, f.delta[j]);
        if (!ok) break;
        for (std::size_t i = j; i < n; ++i) xi_r(i, j) = xi_r(i, j) / dr;
        for (std::size_t i = j; i < n; ++i) xi_l(j, i) = xi_l(j, i) / dl;
    }
    report.factors_preserved =
        ok && xi_r.equals(f.lower_unitriangular) && xi_l.equals(f.upper_unitriangular);
    return report;
}

} // namespace bisemikit
