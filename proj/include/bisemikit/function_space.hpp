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
 * @file function_space.hpp
 *
 * Discretized function bisemialgebras: sampled functions with quadrature
 * weights, absolute-integrability values for functions and bifunctions, and
 * the transform that replaces the right factor by the conjugate of the left
 * one, landing in the square-integrable pipeline.
 *
 * Grids are opaque labels plus sample points; weights stand in for the Haar
 * measure, with a uniform default. The algebraic identities under test are
 * measure-agnostic.
 */

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bisemikit/errors.hpp"

namespace bisemikit {

/// Complex samples of one function over a weighted grid.
struct SampledFunction {
    std::vector<std::complex<double>> samples;
    std::vector<double> weights;
    std::string domain_label = "grid";

    SampledFunction() = default;
    SampledFunction(std::vector<std::complex<double>> s, std::vector<double> w,
                    std::string label = "grid")
        : samples(std::move(s)), weights(std::move(w)), domain_label(std::move(label)) {
        validate();
    }

    /// Uniform weights summing to one.
    static SampledFunction uniform(std::vector<std::complex<double>> s,
                                   std::string label = "grid") {
        const std::size_t n = s.size();
        const double w = n == 0 ? 1.0 : 1.0 / static_cast<double>(n);
        return SampledFunction(std::move(s), std::vector<double>(n, w), std::move(label));
    }

    std::size_t size() const { return samples.size(); }

    void validate() const {
        if (samples.size() != weights.size())
            throw dimension_mismatch("sample/weight length mismatch");
        for (double w : weights)
            if (!(w > 0.0)) throw kit_error("quadrature weights must be positive");
    }
};

/// A right and a left sampled function sharing one grid.
struct Bifunction {
    SampledFunction phi_right;
    SampledFunction phi_left;

    Bifunction() = default;
    Bifunction(SampledFunction r, SampledFunction l)
        : phi_right(std::move(r)), phi_left(std::move(l)) {
        if (phi_right.size() != phi_left.size() ||
            phi_right.domain_label != phi_left.domain_label)
            throw carrier_mismatch("bifunction factors must share one grid");
    }
};

/// Weighted absolute sum: the discretized integral of |f|. Finite grids make
/// membership a threshold report, never a convergence question.
inline double quadrature_l1(const SampledFunction& f) {
    double sum = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
        sum += f.weights[k] * std::abs(f.samples[k]);
    return sum;
}

struct L11Result {
    double value = 0.0;
    bool within_bound = false;
};

/// Discretized double integral of |phi_R x phi_L|, which factorizes as the
/// product of the two single-function values.
inline L11Result l11_membership(const Bifunction& bf, double bound) {
    L11Result out;
    out.value = quadrature_l1(bf.phi_right) * quadrature_l1(bf.phi_left);
    out.within_bound = out.value < bound;
    return out;
}

struct TransformResult {
    Bifunction squared;  // conj(phi_L) paired with phi_L on the same grid
    double l2_value = 0.0; // discretized integral of |phi_L|^2
};

/// The function-level composite of the projection and the Riesz flip:
/// replaces the right factor by the conjugate of the left factor. The
/// squared bifunction's pointwise diagonal integrand is |phi_L|^2 exactly.
inline TransformResult transform_BL_pL(const Bifunction& bf) {
    TransformResult out;
    SampledFunction conj_left = bf.phi_left;
    for (auto& s : conj_left.samples) s = std::conj(s);
    out.squared = Bifunction(std::move(conj_left), bf.phi_left);
    for (std::size_t k = 0; k < bf.phi_left.size(); ++k)
        out.l2_value += bf.phi_left.weights[k] * std::norm(bf.phi_left.samples[k]);
    return out;
}

} // namespace bisemikit
