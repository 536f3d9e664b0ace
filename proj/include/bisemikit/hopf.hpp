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
 * @file hopf.hpp
 *
 * Finite-dimensional Hopf structure on group algebras: multiplication and
 * unit, comultiplication and counit, the antipode with its convolution
 * identities, the bilinear antipode exchanging the two oriented
 * bisemialgebras, and the *-involution pair on the complex carrier.
 *
 * Group algebras are the carrier of choice because every axiom is
 * exhaustively checkable over basis tuples at desk scale.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bisemikit/errors.hpp"
#include "bisemikit/linalg.hpp"
#include "bisemikit/report.hpp"
#include "bisemikit/scalars.hpp"

namespace bisemikit {

/// Multiplication table of a finite group, validated on construction:
/// closure, a two-sided identity, two-sided inverses, associativity.
class GroupTable {
public:
    static GroupTable from_table(const std::vector<std::vector<std::size_t>>& rows) {
        GroupTable g;
        g.order_ = rows.size();
        if (g.order_ == 0) throw invalid_group("empty multiplication table");
        g.table_.reserve(g.order_ * g.order_);
        for (const auto& row : rows) {
            if (row.size() != g.order_) throw invalid_group("table is not square");
            for (std::size_t v : row) {
                if (v >= g.order_) throw invalid_group("table entry out of range");
                g.table_.push_back(v);
            }
        }
        g.validate();
        return g;
    }

    static GroupTable cyclic(std::size_t n) {
        std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
        return from_table(rows);
    }

    static GroupTable klein_four() {
        // pairs (a, b) in Z/2 x Z/2 indexed as 2a + b, componentwise xor
        std::vector<std::vector<std::size_t>> rows(4, std::vector<std::size_t>(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) rows[i][j] = i ^ j;
        return from_table(rows);
    }

    static GroupTable symmetric3() {
        // the six permutations of {0,1,2} in lexicographic order
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        auto index_of = [&](const int p[3]) {
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
                    return k;
            return std::size_t(6);
        };
        std::vector<std::vector<std::size_t>> rows(6, std::vector<std::size_t>(6));
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                int composed[3]; // (p_i after p_j): x -> p_i[p_j[x]]
                for (int x = 0; x < 3; ++x) composed[x] = perms[i][perms[j][x]];
                rows[i][j] = index_of(composed);
            }
        return from_table(rows);
    }

    std::size_t order() const { return order_; }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * order_ + j]; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }

private:
    void validate() {
        bool found = false;
        for (std::size_t e = 0; e < order_; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < order_; ++g)
                ok &= mul(e, g) == g && mul(g, e) == g;
            if (ok) {
                identity_ = e;
                found = true;
                break;
            }
        }
        if (!found) throw invalid_group("no two-sided identity element");
        inverse_.assign(order_, order_);
        for (std::size_t g = 0; g < order_; ++g) {
            for (std::size_t h = 0; h < order_; ++h)
                if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                    inverse_[g] = h;
                    break;
                }
            if (inverse_[g] == order_)
                throw invalid_group("element " + std::to_string(g) + " has no inverse");
        }
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b)
                for (std::size_t c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw invalid_group("multiplication is not associative at (" +
                                            std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c) + ")");
    }

    std::size_t order_ = 0;
    std::size_t identity_ = 0;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
};

/// Basis-indexed structure constants for (mu, eta, Delta, epsilon, S).
/// mul[(i*d + j)*d + k] is the e_k coefficient of e_i * e_j;
/// comul[(k*d + i)*d + j] the (e_i tensor e_j) coefficient of Delta(e_k).
/// Linear maps are matrices whose columns are images of basis elements.
template <class B>
struct HopfData {
    using value_type = typename B::value_type;

    std::size_t dim = 0;
    std::vector<value_type> mul;
    std::vector<value_type> unit;
    std::vector<value_type> comul;
    std::vector<value_type> counit;
    Matrix<B> antipode;

    const value_type& mul_c(std::size_t i, std::size_t j, std::size_t k) const {
        return mul[(i * dim + j) * dim + k];
    }
    const value_type& comul_c(std::size_t k, std::size_t i, std::size_t j) const {
        return comul[(k * dim + i) * dim + j];
    }

    std::vector<value_type> basis(std::size_t i) const {
        std::vector<value_type> v(dim, B::zero());
        v[i] = B::one();
        return v;
    }

    std::vector<value_type> product(const std::vector<value_type>& a,
                                    const std::vector<value_type>& b) const {
        std::vector<value_type> out(dim, B::zero());
        for (std::size_t i = 0; i < dim; ++i) {
            if (B::is_zero(a[i])) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (B::is_zero(b[j])) continue;
                const value_type ab = a[i] * b[j];
                for (std::size_t k = 0; k < dim; ++k)
                    out[k] = out[k] + ab * mul_c(i, j, k);
            }
        }
        return out;
    }
};

/// Group algebra: mu from the table, Delta(g) = g tensor g, epsilon = 1,
/// S(g) = g^{-1}. Hopf identities hold by construction and are re-verified
/// by hopf_axiom_check.
template <class B>
HopfData<B> build_group_bisemialgebra(const GroupTable& group) {
    const std::size_t d = group.order();
    HopfData<B> h;
    h.dim = d;
    h.mul.assign(d * d * d, B::zero());
    h.comul.assign(d * d * d, B::zero());
    h.unit.assign(d, B::zero());
    h.counit.assign(d, B::one());
    h.antipode = Matrix<B>(d);
    h.unit[group.identity()] = B::one();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            h.mul[(i * d + j) * d + group.mul(i, j)] = B::one();
        h.comul[(i * d + i) * d + i] = B::one();
        h.antipode(group.inverse(i), i) = B::one();
    }
    return h;
}

/// Convolution of two linear endomorphisms: multiply after comultiplying,
/// column by column.
template <class B>
Matrix<B> convolution(const Matrix<B>& h1, const Matrix<B>& h2, const HopfData<B>& h) {
    if (h1.size() != h.dim || h2.size() != h.dim)
        throw dimension_mismatch("convolution maps must act on the carrier");
    const std::size_t d = h.dim;
    Matrix<B> out(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto& c = h.comul_c(k, i, j);
                if (B::is_zero(c)) continue;
                // mu(h1(e_i) tensor h2(e_j))
                for (std::size_t p = 0; p < d; ++p) {
                    if (B::is_zero(h1(p, i))) continue;
                    for (std::size_t q = 0; q < d; ++q) {
                        if (B::is_zero(h2(q, j))) continue;
                        const auto w = c * h1(p, i) * h2(q, j);
                        for (std::size_t m = 0; m < d; ++m)
                            out(m, k) = out(m, k) + w * h.mul_c(p, q, m);
                    }
                }
            }
    }
    return out;
}

/// The convolution unit eta after epsilon, as a matrix.
template <class B>
Matrix<B> unit_counit_map(const HopfData<B>& h) {
    Matrix<B> out(h.dim);
    for (std::size_t k = 0; k < h.dim; ++k)
        for (std::size_t m = 0; m < h.dim; ++m) out(m, k) = h.counit[k] * h.unit[m];
    return out;
}

struct HopfReport {
    std::string carrier;
    std::size_t dim = 0;
    std::vector<LawResult> laws;
    bool all_pass() const {
        for (const auto& l : laws)
            if (!l.pass) return false;
        return true;
    }
};

/// Exhaustive verification over basis tuples of all bialgebra and antipode
/// identities. Report-based; never throws on violation.
template <class B>
HopfReport hopf_axiom_check(const HopfData<B>& h, const std::string& carrier_name = "") {
    HopfReport report;
    report.carrier = carrier_name;
    report.dim = h.dim;
    const std::size_t d = h.dim;
    using V = typename B::value_type;

    const auto vec_eq = [&](const std::vector<V>& a, const std::vector<V>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!B::eq(a[i], b[i])) return false;
        return true;
    };

    { // associativity of mu
        LawResult r{"mu-associative", true, 0, ""};
        for (std::size_t a = 0; a < d && r.pass; ++a)
            for (std::size_t b = 0; b < d && r.pass; ++b)
                for (std::size_t c = 0; c < d; ++c) {
                    ++r.samples_run;
                    const auto lhs = h.product(h.product(h.basis(a), h.basis(b)), h.basis(c));
                    const auto rhs = h.product(h.basis(a), h.product(h.basis(b), h.basis(c)));
                    if (!vec_eq(lhs, rhs)) {
                        r.pass = false;
                        r.witness = "basis (" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")";
                        break;
                    }
                }
        report.laws.push_back(std::move(r));
    }
    { // eta is a two-sided unit
        LawResult r{"eta-unit", true, 0, ""};
        for (std::size_t a = 0; a < d; ++a) {
            ++r.samples_run;
            if (!vec_eq(h.product(h.unit, h.basis(a)), h.basis(a)) ||
                !vec_eq(h.product(h.basis(a), h.unit), h.basis(a))) {
                r.pass = false;
                r.witness = "basis " + std::to_string(a);
                break;
            }
        }
        report.laws.push_back(std::move(r));
    }
    { // coassociativity: (Delta x id) Delta == (id x Delta) Delta on basis
        LawResult r{"delta-coassociative", true, 0, ""};
        for (std::size_t k = 0; k < d && r.pass; ++k) {
            ++r.samples_run;
            for (std::size_t i = 0; i < d && r.pass; ++i)
                for (std::size_t j = 0; j < d && r.pass; ++j)
                    for (std::size_t l = 0; l < d; ++l) {
                        V lhs = B::zero(), rhs = B::zero();
                        for (std::size_t m = 0; m < d; ++m) {
                            lhs = lhs + h.comul_c(k, m, l) * h.comul_c(m, i, j);
                            rhs = rhs + h.comul_c(k, i, m) * h.comul_c(m, j, l);
                        }
                        if (!B::eq(lhs, rhs)) {
                            r.pass = false;
                            r.witness = "basis " + std::to_string(k);
                            break;
                        }
                    }
        }
        report.laws.push_back(std::move(r));
    }
    { // counit law: (eps x id) Delta == id == (id x eps) Delta
        LawResult r{"epsilon-counit", true, 0, ""};
        for (std::size_t k = 0; k < d && r.pass; ++k) {
            ++r.samples_run;
            std::vector<V> left(d, B::zero()), right(d, B::zero());
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    left[j] = left[j] + h.counit[i] * h.comul_c(k, i, j);
                    right[i] = right[i] + h.counit[j] * h.comul_c(k, i, j);
                }
            if (!vec_eq(left, h.basis(k)) || !vec_eq(right, h.basis(k))) {
                r.pass = false;
                r.witness = "basis " + std::to_string(k);
            }
        }
        report.laws.push_back(std::move(r));
    }
    { // Delta is an algebra map: Delta(ab) == Delta(a) Delta(b), Delta(1) == 1 x 1
        LawResult r{"delta-algebra-map", true, 0, ""};
        for (std::size_t a = 0; a < d && r.pass; ++a)
            for (std::size_t b = 0; b < d && r.pass; ++b) {
                ++r.samples_run;
                const auto ab = h.product(h.basis(a), h.basis(b));
                for (std::size_t i = 0; i < d && r.pass; ++i)
                    for (std::size_t j = 0; j < d; ++j) {
                        V lhs = B::zero();
                        for (std::size_t k = 0; k < d; ++k)
                            lhs = lhs + ab[k] * h.comul_c(k, i, j);
                        V rhs = B::zero();
                        for (std::size_t p = 0; p < d; ++p)
                            for (std::size_t q = 0; q < d; ++q)
                                for (std::size_t s = 0; s < d; ++s)
                                    for (std::size_t t = 0; t < d; ++t) {
                                        const auto w =
                                            h.comul_c(a, p, q) * h.comul_c(b, s, t);
                                        if (B::is_zero(w)) continue;
                                        rhs = rhs + w * h.mul_c(p, s, i) * h.mul_c(q, t, j);
                                    }
                        if (!B::eq(lhs, rhs)) {
                            r.pass = false;
                            r.witness = "basis (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")";
                            break;
                        }
                    }
            }
        if (r.pass) { // Delta(eta(1)) == eta(1) x eta(1)
            for (std::size_t i = 0; i < d && r.pass; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    V lhs = B::zero();
                    for (std::size_t k = 0; k < d; ++k)
                        lhs = lhs + h.unit[k] * h.comul_c(k, i, j);
                    if (!B::eq(lhs, h.unit[i] * h.unit[j])) {
                        r.pass = false;
                        r.witness = "unit";
                        break;
                    }
                }
        }
        report.laws.push_back(std::move(r));
    }
    { // epsilon is an algebra map
        LawResult r{"epsilon-algebra-map", true, 0, ""};
        for (std::size_t a = 0; a < d && r.pass; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                ++r.samples_run;
                const auto ab = h.product(h.basis(a), h.basis(b));
                V lhs = B::zero();
                for (std::size_t k = 0; k < d; ++k) lhs = lhs + ab[k] * h.counit[k];
                if (!B::eq(lhs, h.counit[a] * h.counit[b])) {
                    r.pass = false;
                    r.witness = "basis (" + std::to_string(a) + "," + std::to_string(b) + ")";
                    break;
                }
            }
        if (r.pass) {
            V eps_unit = B::zero();
            for (std::size_t k = 0; k < d; ++k)
                eps_unit = eps_unit + h.unit[k] * h.counit[k];
            if (!B::eq(eps_unit, B::one())) {
                r.pass = false;
                r.witness = "unit";
            }
        }
        report.laws.push_back(std::move(r));
    }
    { // both antipode identities: S * id == id * S == eta o eps
        const auto target = unit_counit_map(h);
        const auto id = Matrix<B>::identity(d);
        const auto left = convolution(h.antipode, id, h);
        const auto right = convolution(id, h.antipode, h);
        LawResult l{"antipode-left", left.equals(target), static_cast<int>(d), ""};
        LawResult r{"antipode-right", right.equals(target), static_cast<int>(d), ""};
        if (!l.pass || !r.pass) {
            for (std::size_t k = 0; k < d; ++k) {
                bool bad = false;
                for (std::size_t m = 0; m < d; ++m)
                    bad |= !B::eq(left(m, k), target(m, k)) || !B::eq(right(m, k), target(m, k));
                if (bad) {
                    const std::string w = "basis " + std::to_string(k);
                    if (!l.pass) l.witness = w;
                    if (!r.pass) r.witness = w;
                    break;
                }
            }
        }
        report.laws.push_back(std::move(l));
        report.laws.push_back(std::move(r));
    }
    return report;
}

enum class BiOrientation : std::uint8_t { LeftBi, RightBi };

/// One oriented bisemialgebra element: the projected cosemialgebra factor
/// paired with the plain factor. LeftBi pairs the projected-right factor
/// with a left element; RightBi the mirror arrangement.
template <class B>
struct BisemialgebraElement {
    std::vector<typename B::value_type> proj_factor;
    std::vector<typename B::value_type> plain_factor;
    BiOrientation orientation = BiOrientation::LeftBi;
};

/// The bilinear antipode: applies the antipode to each factor and swaps the
/// slots, exchanging the two orientations.
template <class B>
BisemialgebraElement<B> bilinear_antipode(const BisemialgebraElement<B>& x,
                                          const HopfData<B>& h) {
    if (x.orientation != BiOrientation::LeftBi)
        throw carrier_violation("bilinear antipode expects a left-oriented element");
    BisemialgebraElement<B> out;
    out.orientation = BiOrientation::RightBi;
    out.proj_factor = h.antipode.apply(x.plain_factor);
    out.plain_factor = h.antipode.apply(x.proj_factor);
    return out;
}

template <class B>
BisemialgebraElement<B> bilinear_antipode_inverse(const BisemialgebraElement<B>& y,
                                                  const HopfData<B>& h) {
    if (y.orientation != BiOrientation::RightBi)
        throw carrier_violation("inverse bilinear antipode expects a right-oriented element");
    const Matrix<B> s_inv = gauss_jordan_inverse(h.antipode);
    BisemialgebraElement<B> out;
    out.orientation = BiOrientation::LeftBi;
    out.proj_factor = s_inv.apply(y.plain_factor);
    out.plain_factor = s_inv.apply(y.proj_factor);
    return out;
}

/// Star involution on the complex group-algebra carrier: conjugate the
/// coefficients and apply the antipode permutation. Conjugate-linear and
/// antimultiplicative; applying it twice is the identity.
inline std::vector<Complex> star_involution(const std::vector<Complex>& a,
                                            const HopfData<ComplexBackend>& h) {
    std::vector<Complex> conj_coeffs(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) conj_coeffs[i] = std::conj(a[i]);
    return h.antipode.apply(conj_coeffs);
}

struct StarReport {
    std::vector<LawResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Samples coefficient vectors and verifies the involution pair: reversal of
/// products, conjugate-linearity, and that the two involutions are mutually
/// inverse (double application restores the element).
inline StarReport star_involution_check(const HopfData<ComplexBackend>& h, int samples,
                                        std::uint64_t seed = 0x5eedU) {
    using B = ComplexBackend;
    StarReport report;
    Rng rng(seed);
    const auto sample_vec = [&]() {
        std::vector<Complex> v(h.dim);
        for (auto& c : v) c = ScalarSampler<B>::draw(rng);
        return v;
    };
    const auto vec_eq = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!B::eq(a[i], b[i])) return false;
        return true;
    };

    LawResult anti{"antimultiplicative", true, 0, ""};
    LawResult conj_lin{"conjugate-linear", true, 0, ""};
    LawResult inverse_pair{"involutions-mutually-inverse", true, 0, ""};
    for (int i = 0; i < samples; ++i) {
        const auto a = sample_vec();
        const auto b = sample_vec();
        const Complex alpha = ScalarSampler<B>::draw(rng);

        ++anti.samples_run;
        const auto lhs = star_involution(h.product(a, b), h);
        const auto rhs = h.product(star_involution(b, h), star_involution(a, h));
        if (anti.pass && !vec_eq(lhs, rhs)) {
            anti.pass = false;
            anti.witness = "sample " + std::to_string(i);
        }

        ++conj_lin.samples_run;
        auto scaled = a;
        for (auto& c : scaled) c *= alpha;
        auto expected = star_involution(a, h);
        for (auto& c : expected) c *= std::conj(alpha);
        if (conj_lin.pass && !vec_eq(star_involution(scaled, h), expected)) {
            conj_lin.pass = false;
            conj_lin.witness = "sample " + std::to_string(i);
        }

        ++inverse_pair.samples_run;
        if (inverse_pair.pass && !vec_eq(star_involution(star_involution(a, h), h), a)) {
            inverse_pair.pass = false;
            inverse_pair.witness = "sample " + std::to_string(i);
        }
    }
    report.checks = {std::move(anti), std::move(conj_lin), std::move(inverse_pair)};
    return report;
}

} // namespace bisemikit
