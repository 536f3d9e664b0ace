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
 * @file tensor.hpp
 *
 * Vector bisemimodules as coefficient grids, the diagonal/off-diagonal
 * splitting, and the three-stage pairing pipeline:
 *
 *   mixed     raw right-by-left sums on (M_R, M_L) pairs;
 *   external  the same sums after projecting the right vector onto the left
 *             half-space (one-forms, (1,1) metric bookkeeping);
 *   internal  after the Riesz-style variance flip ((0,2) metric), where the
 *             diagonal mode is the classical Hermitian inner product.
 *
 * Each stage offers three modes: Diagonal (matched basis indices), Extended
 * (all index pairs) and OffDiagonal (Extended minus Diagonal, by
 * construction, so mode additivity is exact).
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bisemikit/bipoint.hpp"
#include "bisemikit/errors.hpp"
#include "bisemikit/linalg.hpp"
#include "bisemikit/report.hpp"
#include "bisemikit/sampling.hpp"
#include "bisemikit/scalars.hpp"

namespace bisemikit {

/// Coefficient grid X_{ab} relative to a bilinear basis of dimension `dim`.
template <class B>
struct BisemimoduleElement {
    Matrix<B> coeffs;
    std::size_t dim() const { return coeffs.size(); }
};

template <class B>
struct TensorSplit {
    BisemimoduleElement<B> diagonal;     // dim slots
    BisemimoduleElement<B> off_diagonal; // dim^2 - dim slots
    std::size_t diagonal_dimension = 0;
    std::size_t off_diagonal_dimension = 0;
};

/// Entrywise split into the diagonal and off-diagonal grids; their sum
/// reproduces the input exactly.
template <class B>
TensorSplit<B> tensor_split(const BisemimoduleElement<B>& x) {
    const std::size_t n = x.dim();
    TensorSplit<B> out;
    out.diagonal.coeffs = Matrix<B>(n);
    out.off_diagonal.coeffs = Matrix<B>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            (i == j ? out.diagonal : out.off_diagonal).coeffs(i, j) = x.coeffs(i, j);
    out.diagonal_dimension = n;
    out.off_diagonal_dimension = n * n - n;
    return out;
}

enum class Side : std::uint8_t { Left, Right };
enum class Variance : std::uint8_t { Covariant, Contravariant };
enum class ProductMode : std::uint8_t { Diagonal, Extended, OffDiagonal };
enum class ProductStage : std::uint8_t { Mixed, External, Internal };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }
inline const char* to_string(Variance v) {
    return v == Variance::Covariant ? "covariant" : "contravariant";
}
inline const char* to_string(ProductMode m) {
    switch (m) {
        case ProductMode::Diagonal: return "diagonal";
        case ProductMode::Extended: return "extended";
        default: return "off-diagonal";
    }
}
inline const char* to_string(ProductStage s) {
    switch (s) {
        case ProductStage::Mixed: return "mixed";
        case ProductStage::External: return "external";
        default: return "internal";
    }
}

struct InnerProductSpec {
    ProductMode mode = ProductMode::Diagonal;
    ProductStage stage = ProductStage::Mixed;
};

/// Coordinate vector of one semimodule. `projected` marks images of the
/// half-space projection: values that live on the opposite side but keep
/// their provenance.
template <class B>
struct SemimoduleVector {
    Side side = Side::Left;
    Variance variance = Variance::Contravariant;
    std::vector<typename B::value_type> coords;
    bool projected = false;

    std::size_t dim() const { return coords.size(); }

    static SemimoduleVector left(std::vector<typename B::value_type> c) {
        return {Side::Left, Variance::Contravariant, std::move(c), false};
    }
    static SemimoduleVector right(std::vector<typename B::value_type> c) {
        return {Side::Right, Variance::Contravariant, std::move(c), false};
    }
};

namespace detail {

/// One summation kernel serves all three stages; the stages differ only in
/// which vectors are fed in and in the metric-type bookkeeping.
/// Reductions run left-to-right by index for reproducibility.
template <class B>
typename B::value_type pairing_sum(const std::vector<typename B::value_type>& a,
                                   const std::vector<typename B::value_type>& b,
                                   ProductMode mode) {
    if (a.size() != b.size()) throw dimension_mismatch("pairing of unequal dimensions");
    using V = typename B::value_type;
    V diagonal = B::zero();
    for (std::size_t i = 0; i < a.size(); ++i) diagonal = diagonal + a[i] * b[i];
    if (mode == ProductMode::Diagonal) return diagonal;
    V extended = B::zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) extended = extended + a[i] * b[j];
    if (mode == ProductMode::Extended) return extended;
    return extended - diagonal; // off-diagonal = extended - diagonal by construction
}

} // namespace detail

/// Raw right-by-left pairing. The value lands in the right carrier; the
/// returned bi-scalar pairs it with its left mirror.
template <class B>
BiScalar<B> mixed_product(const SemimoduleVector<B>& x_right,
                          const SemimoduleVector<B>& x_left, ProductMode mode) {
    if (x_right.side != Side::Right || x_left.side != Side::Left)
        throw carrier_violation("mixed product expects a (right, left) pair");
    const auto raw = detail::pairing_sum<B>(x_right.coords, x_left.coords, mode);
    return BiScalar<B>::mirror_of_right(raw);
}

/// Half-space projection p: componentwise involution onto the opposite side.
/// The image is the semispace of one-forms there, hence covariant.
template <class B>
SemimoduleVector<B> project_p(const SemimoduleVector<B>& x, Side direction) {
    if (direction == Side::Left && x.side != Side::Right)
        throw carrier_violation("p_L projects right-side vectors only");
    if (direction == Side::Right && x.side != Side::Left)
        throw carrier_violation("p_R projects left-side vectors only");
    SemimoduleVector<B> out;
    out.side = direction;
    out.variance = Variance::Covariant;
    out.projected = true;
    out.coords.reserve(x.coords.size());
    for (const auto& c : x.coords) out.coords.push_back(B::involute(c));
    return out;
}

/// External-stage pairing of a projected one-form with a native vector of
/// the same side ((1,1) metric bookkeeping).
template <class B>
typename B::value_type external_product(const SemimoduleVector<B>& projected,
                                        const SemimoduleVector<B>& native,
                                        ProductMode mode) {
    if (!projected.projected)
        throw carrier_violation("external product expects a projected first argument");
    if (projected.side != native.side)
        throw carrier_violation("external product pairs vectors of one side");
    return detail::pairing_sum<B>(projected.coords, native.coords, mode);
}

/// Riesz-style raising: maps a covariant element to the corresponding
/// contravariant one through the inverse of a positive-definite (0,2)
/// metric. With the identity metric only the variance flag flips.
template <class B>
SemimoduleVector<B> riesz_B(const SemimoduleVector<B>& x, const MetricComponents<B>& metric) {
    if (x.variance != Variance::Covariant)
        throw carrier_violation("riesz map expects a covariant vector");
    if (metric.kind != MetricKind::CovariantCovariant)
        throw kit_error("riesz map expects a (0,2) metric");
    if (metric.g.size() != x.dim()) throw dimension_mismatch("metric/vector dimension");
    if (!symmetric_positive_definite(metric.g))
        throw singular_metric("metric is not symmetric positive-definite");
    SemimoduleVector<B> out = x;
    out.variance = Variance::Contravariant;
    out.coords = gauss_jordan_inverse(metric.g).apply(x.coords);
    return out;
}

/// Lowering with the metric itself; exact inverse of riesz_B.
template <class B>
SemimoduleVector<B> riesz_B_inverse(const SemimoduleVector<B>& x,
                                    const MetricComponents<B>& metric) {
    if (x.variance != Variance::Contravariant)
        throw carrier_violation("riesz inverse expects a contravariant vector");
    if (metric.kind != MetricKind::CovariantCovariant)
        throw kit_error("riesz inverse expects a (0,2) metric");
    SemimoduleVector<B> out = x;
    out.variance = Variance::Covariant;
    out.coords = metric.g.apply(x.coords);
    return out;
}

/// The conjugate partner used by the internal stage: componentwise
/// involution, living on the left side with projected provenance. Equals
/// riesz_B(project_p(x_R, Left), identity) for the mirrored right vector.
template <class B>
SemimoduleVector<B> conjugate_partner(const SemimoduleVector<B>& x) {
    SemimoduleVector<B> out;
    out.side = Side::Left;
    out.variance = Variance::Contravariant;
    out.projected = true;
    out.coords.reserve(x.coords.size());
    for (const auto& c : x.coords) out.coords.push_back(B::involute(c));
    return out;
}

/// Internal-stage scalar product ((0,2) metric bookkeeping). The first
/// argument is expected to be a conjugate partner (image of a right vector
/// under the projection followed by the Riesz flip); no further involution
/// is applied here.
template <class B>
typename B::value_type inner_product(const SemimoduleVector<B>& x_bar,
                                     const SemimoduleVector<B>& x, ProductMode mode) {
    return detail::pairing_sum<B>(x_bar.coords, x.coords, mode);
}

/// Nonnegative value of the diagonal self-pairing with the conjugate
/// partner, expressed in the left carrier.
template <class B>
typename B::value_type norm_squared_value(const SemimoduleVector<B>& x) {
    using V = typename B::value_type;
    V raw = B::zero();
    for (const auto& c : x.coords) raw = raw + B::involute(c) * c;
    return B::involute(raw); // left mirror: nonnegative in both backends
}

template <class B>
double norm(const SemimoduleVector<B>& x) {
    return std::sqrt(B::to_double(norm_squared_value(x)));
}

struct HilbertReport {
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Verifies, at tuple level, that the diagonal internal pairing behaves as a
/// classical Hermitian inner product: the embedding x -> (conj x, x) is
/// injective, the pairing matches the Hermitian sum, it is sesquilinear
/// (linear on the right, antilinear on the left), and conjugate-symmetric.
inline HilbertReport hilbert_correspondence_check(
    const std::vector<SemimoduleVector<ComplexBackend>>& xs,
    std::uint64_t seed = 0x5eedU) {
    using B = ComplexBackend;
    HilbertReport report;
    report.samples = static_cast<int>(xs.size());
    report.seed = seed;
    for (const auto& x : xs)
        if (x.dim() != xs.front().dim())
            throw dimension_mismatch("correspondence check needs one common dimension");

    const auto eq = [](const Complex& a, const Complex& b) { return B::eq(a, b); };
    const auto hermitian = [](const SemimoduleVector<B>& a, const SemimoduleVector<B>& b) {
        Complex sum(0, 0);
        for (std::size_t i = 0; i < a.dim(); ++i)
            sum += std::conj(a.coords[i]) * b.coords[i];
        return sum;
    };

    LawResult embed{"embedding-injective", true, 0, ""};
    for (std::size_t i = 0; i < xs.size() && embed.pass; ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            ++embed.samples_run;
            bool same_vec = true, same_pair = true;
            for (std::size_t k = 0; k < xs[i].dim(); ++k) {
                same_vec &= xs[i].coords[k] == xs[j].coords[k];
                same_pair &= xs[i].coords[k] == xs[j].coords[k] &&
                             std::conj(xs[i].coords[k]) == std::conj(xs[j].coords[k]);
            }
            if (!same_vec && same_pair) {
                embed.pass = false;
                embed.witness = "vectors " + std::to_string(i) + "," + std::to_string(j);
                break;
            }
        }
    report.checks.push_back(std::move(embed));

    LawResult match{"matches-hermitian-product", true, 0, ""};
    for (std::size_t i = 0; i + 1 < xs.size() && match.pass; ++i) {
        ++match.samples_run;
        const auto lib = inner_product(conjugate_partner(xs[i]), xs[i + 1],
                                       ProductMode::Diagonal);
        if (!eq(lib, hermitian(xs[i], xs[i + 1]))) {
            match.pass = false;
            match.witness = "pair " + std::to_string(i);
        }
    }
    report.checks.push_back(std::move(match));

    Rng rng(seed);
    LawResult sesqui{"sesquilinear", true, 0, ""};
    for (std::size_t i = 0; i + 1 < xs.size() && sesqui.pass; ++i) {
        ++sesqui.samples_run;
        const Complex alpha = ScalarSampler<B>::draw(rng);
        const auto& x = xs[i];
        const auto& y = xs[i + 1];
        const auto base = inner_product(conjugate_partner(x), y, ProductMode::Diagonal);
        SemimoduleVector<B> ay = y;
        for (auto& c : ay.coords) c *= alpha;
        SemimoduleVector<B> ax = x;
        for (auto& c : ax.coords) c *= alpha;
        const auto right_scaled =
            inner_product(conjugate_partner(x), ay, ProductMode::Diagonal);
        const auto left_scaled =
            inner_product(conjugate_partner(ax), y, ProductMode::Diagonal);
        if (!eq(right_scaled, alpha * base) || !eq(left_scaled, std::conj(alpha) * base)) {
            sesqui.pass = false;
            sesqui.witness = "pair " + std::to_string(i);
        }
    }
    report.checks.push_back(std::move(sesqui));

    LawResult sym{"conjugate-symmetric", true, 0, ""};
    for (std::size_t i = 0; i + 1 < xs.size() && sym.pass; ++i) {
        ++sym.samples_run;
        const auto& x = xs[i];
        const auto& y = xs[i + 1];
        const auto xy = inner_product(conjugate_partner(x), y, ProductMode::Diagonal);
        const auto yx = inner_product(conjugate_partner(y), x, ProductMode::Diagonal);
        if (!eq(yx, std::conj(xy))) {
            sym.pass = false;
            sym.witness = "pair " + std::to_string(i);
        }
    }
    report.checks.push_back(std::move(sym));

    return report;
}

} // namespace bisemikit
