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
 * @file scalars.hpp
 *
 * Scalar carriers for the left/right half-space discipline.
 *
 * Two backends are provided:
 *   - RationalBackend: exact arbitrary-precision rationals. The left carrier
 *     is the nonnegative rationals, the right carrier their negated mirror.
 *   - ComplexBackend: double-precision complex numbers. The left carrier is
 *     all of C, the right carrier the conjugate mirror.
 *
 * The involution I maps a left value to its right partner (negation resp.
 * conjugation) and is its own inverse in both backends. The right carrier's
 * internal product is transported through I so the carrier stays closed:
 * mul_right(a, b) = I(I(a) * I(b)). In the complex backend this collapses to
 * the plain product; in the rational backend it is -(a*b), with right unit -1.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bisemikit/errors.hpp"
#include "bisemikit/report.hpp"
#include "bisemikit/sampling.hpp"

namespace bisemikit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

inline std::string rational_to_string(const Rational& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

/// Parses "p/q", a plain integer, or a plain decimal ("-1.25") exactly.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw parse_error("zero denominator in \"" + text + "\"");
            return Rational(num, den);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        BigInt den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Rational(BigInt(digits), den);
    } catch (const std::exception&) {
        throw parse_error("cannot parse rational \"" + text + "\"");
    }
}

struct RationalBackend {
    using value_type = Rational;
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";

    static value_type zero() { return Rational(0); }
    static value_type one() { return Rational(1); }
    static value_type involute(const value_type& v) { return -v; }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static bool is_zero(const value_type& v) { return v == 0; }
    static bool less(const value_type& a, const value_type& b) { return a < b; }
    static bool in_left(const value_type& v) { return v >= 0; }
    static bool in_right(const value_type& v) { return v <= 0; }
    static double to_double(const value_type& v) { return static_cast<double>(v); }

    static value_type mul_right(const value_type& a, const value_type& b) {
        return involute(involute(a) * involute(b));
    }
    static value_type right_one() { return involute(one()); }

    /// Exact square root; succeeds only when numerator and denominator are
    /// perfect squares.
    static bool sqrt(const value_type& v, value_type& out) {
        if (v < 0) return false;
        const BigInt num = numerator(v);
        const BigInt den = denominator(v);
        const BigInt sn = boost::multiprecision::sqrt(num);
        const BigInt sd = boost::multiprecision::sqrt(den);
        if (sn * sn != num || sd * sd != den) return false;
        out = Rational(sn, sd);
        return true;
    }
};

struct ComplexBackend {
    using value_type = Complex;
    static constexpr bool exact = false;
    static constexpr const char* name = "complex";
    /// Absolute tolerance at unit scale; comparisons scale with operand size.
    static constexpr double tolerance = 1e-12;

    static value_type zero() { return Complex(0.0, 0.0); }
    static value_type one() { return Complex(1.0, 0.0); }
    static value_type involute(const value_type& v) { return std::conj(v); }
    static bool eq(const value_type& a, const value_type& b) {
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= tolerance * scale;
    }
    static bool is_zero(const value_type& v) { return v == Complex(0.0, 0.0); }
    static bool less(const value_type& a, const value_type& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    }
    static bool in_left(const value_type&) { return true; }
    static bool in_right(const value_type&) { return true; }
    static double to_double(const value_type& v) { return v.real(); }

    static value_type mul_right(const value_type& a, const value_type& b) {
        return involute(involute(a) * involute(b));
    }
    static value_type right_one() { return involute(one()); }

    static bool sqrt(const value_type& v, value_type& out) {
        out = std::sqrt(v);
        return true;
    }
};

template <>
struct ScalarSampler<RationalBackend> {
    static Rational draw(Rng& rng) {
        static const int boundary[] = {0, 1, -1, 2, 3, 5, 7};
        if (rng.next_u64() % 4 == 0) {
            const auto i = rng.next_u64() % (sizeof(boundary) / sizeof(boundary[0]) + 2);
            if (i < 7) return Rational(boundary[i]);
            return i == 7 ? Rational(1, 2) : Rational(-1, 2);
        }
        const std::int64_t num = rng.range(-99, 99);
        const std::int64_t den = rng.range(1, 9);
        return Rational(num, den);
    }
};

template <>
struct ScalarSampler<ComplexBackend> {
    static Complex draw(Rng& rng) {
        static const Complex boundary[] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1},
                                           {0, -1}, {1, 1}, {1, -1}};
        if (rng.next_u64() % 4 == 0)
            return boundary[rng.next_u64() % (sizeof(boundary) / sizeof(boundary[0]))];
        const double re = rng.unit() * 6.0 - 3.0;
        const double im = rng.unit() * 6.0 - 3.0;
        return Complex(re, im);
    }
};

/// Scalar scoped to the upper half-space carrier.
template <class B>
class LeftScalar {
public:
    using backend = B;
    using value_type = typename B::value_type;

    LeftScalar() : value_(B::zero()) {}
    explicit LeftScalar(value_type v) : value_(std::move(v)) {
        if (!B::in_left(value_)) throw carrier_violation("value outside the left carrier");
    }
    const value_type& value() const { return value_; }

    friend LeftScalar operator+(const LeftScalar& a, const LeftScalar& b) {
        return LeftScalar(a.value_ + b.value_);
    }
    friend LeftScalar operator*(const LeftScalar& a, const LeftScalar& b) {
        return LeftScalar(a.value_ * b.value_);
    }
    friend bool operator==(const LeftScalar& a, const LeftScalar& b) {
        return B::eq(a.value_, b.value_);
    }

private:
    value_type value_;
};

/// Scalar scoped to the lower half-space carrier.
template <class B>
class RightScalar {
public:
    using backend = B;
    using value_type = typename B::value_type;

    RightScalar() : value_(B::zero()) {}
    explicit RightScalar(value_type v) : value_(std::move(v)) {
        if (!B::in_right(value_)) throw carrier_violation("value outside the right carrier");
    }
    const value_type& value() const { return value_; }

    friend RightScalar operator+(const RightScalar& a, const RightScalar& b) {
        return RightScalar(a.value_ + b.value_);
    }
    /// Product transported through the involution, so the result stays in the
    /// right carrier.
    friend RightScalar operator*(const RightScalar& a, const RightScalar& b) {
        return RightScalar(B::mul_right(a.value_, b.value_));
    }
    friend bool operator==(const RightScalar& a, const RightScalar& b) {
        return B::eq(a.value_, b.value_);
    }

private:
    value_type value_;
};

template <class B>
RightScalar<B> involution_left_to_right(const LeftScalar<B>& a) {
    return RightScalar<B>(B::involute(a.value()));
}

template <class B>
LeftScalar<B> project_right_to_left(const RightScalar<B>& a) {
    return LeftScalar<B>(B::involute(a.value()));
}

/// A paired (right, left) scalar. Arithmetic is componentwise; the biunit is
/// (I(1), 1) and nonzero bi-scalars invert componentwise.
template <class B>
class BiScalar {
public:
    using backend = B;
    using value_type = typename B::value_type;

    BiScalar() = default;
    BiScalar(RightScalar<B> right, LeftScalar<B> left)
        : right_(std::move(right)), left_(std::move(left)) {}

    /// Builds the symmetric bielement (I(v_left), v_left) of a left value.
    static BiScalar mirror_of_left(const value_type& left) {
        return BiScalar(RightScalar<B>(B::involute(left)), LeftScalar<B>(left));
    }
    /// Builds the bielement (v, I(v)) of a right-carrier value.
    static BiScalar mirror_of_right(const value_type& right) {
        return BiScalar(RightScalar<B>(right), LeftScalar<B>(B::involute(right)));
    }
    static BiScalar biunit() {
        return BiScalar(RightScalar<B>(B::right_one()), LeftScalar<B>(B::one()));
    }
    static BiScalar bizero() { return BiScalar(); }

    const RightScalar<B>& right() const { return right_; }
    const LeftScalar<B>& left() const { return left_; }

    bool is_zero() const {
        return B::is_zero(right_.value()) && B::is_zero(left_.value());
    }

    BiScalar inverse() const {
        if (B::is_zero(right_.value()) || B::is_zero(left_.value()))
            throw kit_error("bi-scalar with a zero component has no inverse");
        const value_type inv_left = B::one() / left_.value();
        const value_type inv_right = B::involute(B::one() / B::involute(right_.value()));
        return BiScalar(RightScalar<B>(inv_right), LeftScalar<B>(inv_left));
    }

    friend BiScalar operator+(const BiScalar& a, const BiScalar& b) {
        return BiScalar(a.right_ + b.right_, a.left_ + b.left_);
    }
    friend BiScalar operator*(const BiScalar& a, const BiScalar& b) {
        return BiScalar(a.right_ * b.right_, a.left_ * b.left_);
    }
    friend bool operator==(const BiScalar& a, const BiScalar& b) {
        return a.right_ == b.right_ && a.left_ == b.left_;
    }

private:
    RightScalar<B> right_;
    LeftScalar<B> left_;
};

// ---------------------------------------------------------------------------
// Semifield models and the axiom checker.
// ---------------------------------------------------------------------------

/// Nonnegative rationals under + and *: the left semifield of the rational
/// backend. Exact equality.
struct RationalLeftSemifield {
    using value_type = Rational;
    static constexpr const char* name = "rational";
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    bool invert(const value_type& a, value_type& out) const {
        if (a == 0) return false;
        out = Rational(1) / a;
        return true;
    }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }
    value_type sample(Rng& rng) const {
        return abs(ScalarSampler<RationalBackend>::draw(rng));
    }
    std::string show(const value_type& v) const { return rational_to_string(v); }
};

/// The complex numbers; axiom equality within the backend tolerance.
struct ComplexSemifield {
    using value_type = Complex;
    static constexpr const char* name = "complex";
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type zero() const { return Complex(0, 0); }
    value_type one() const { return Complex(1, 0); }
    bool invert(const value_type& a, value_type& out) const {
        if (a == Complex(0, 0)) return false;
        out = Complex(1, 0) / a;
        return true;
    }
    bool eq(const value_type& a, const value_type& b) const {
        return ComplexBackend::eq(a, b);
    }
    value_type sample(Rng& rng) const { return ScalarSampler<ComplexBackend>::draw(rng); }
    std::string show(const value_type& v) const {
        return std::to_string(v.real()) + (v.imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(v.imag())) + "i";
    }
};

struct SemifieldReport {
    std::string backend;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Samples element triples and evaluates the division-semiring laws. Never
/// throws on violation: failures are reported with a witness triple.
template <class F>
SemifieldReport check_semifield_axioms(const F& field, int sample_budget,
                                       std::uint64_t seed = 0x5eedU) {
    if (sample_budget < 1) throw kit_error("sample budget must be >= 1");
    SemifieldReport report;
    report.backend = F::name;
    report.samples = sample_budget;
    report.seed = seed;

    using V = typename F::value_type;
    struct Law {
        const char* name;
        // Returns true on pass; triple (a, b, c) already drawn.
        bool (*check)(const F&, const V&, const V&, const V&);
    };
    const Law laws[] = {
        {"add-associative",
         [](const F& f, const V& a, const V& b, const V& c) {
             return f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
         }},
        {"add-commutative",
         [](const F& f, const V& a, const V& b, const V&) {
             return f.eq(f.add(a, b), f.add(b, a));
         }},
        {"mul-associative",
         [](const F& f, const V& a, const V& b, const V& c) {
             return f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
         }},
        {"mul-commutative",
         [](const F& f, const V& a, const V& b, const V&) {
             return f.eq(f.mul(a, b), f.mul(b, a));
         }},
        {"distributive",
         [](const F& f, const V& a, const V& b, const V& c) {
             return f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
         }},
        {"additive-identity",
         [](const F& f, const V& a, const V&, const V&) {
             return f.eq(f.add(a, f.zero()), a);
         }},
        {"multiplicative-identity",
         [](const F& f, const V& a, const V&, const V&) {
             return f.eq(f.mul(a, f.one()), a);
         }},
        {"nonzero-invertible",
         [](const F& f, const V& a, const V&, const V&) {
             if (f.eq(a, f.zero())) return true;
             V inv;
             if (!f.invert(a, inv)) return false;
             return f.eq(f.mul(a, inv), f.one());
         }},
    };

    for (const Law& law : laws) {
        Rng rng(seed); // every law sees the same sample stream
        LawResult result;
        result.law = law.name;
        for (int i = 0; i < sample_budget; ++i) {
            const V a = field.sample(rng);
            const V b = field.sample(rng);
            const V c = field.sample(rng);
            ++result.samples_run;
            if (!law.check(field, a, b, c)) {
                result.pass = false;
                result.witness = "sample " + std::to_string(i) + ": (" + field.show(a) +
                                 ", " + field.show(b) + ", " + field.show(c) + ")";
                break;
            }
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace bisemikit
