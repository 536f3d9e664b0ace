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
 * @file bisemigroup.hpp
 *
 * Bielements, integer-weighted formal sums, and the cross binary operation.
 *
 * A bielement pairs a right-carrier value with a left-carrier value. The
 * cross operation of two bielements adds componentwise; its expansion is the
 * four-term sum of two diagonal and two cross bielements. Formal sums stand
 * in for tensor cosets: the bilinearity rewrite rule replaces any explicit
 * quotient construction.
 *
 * Everything here is generic over a pair of additive carriers. A carrier
 * supplies value semantics plus `add`, `zero`, `eq`, `less` and a runtime
 * `compatible` test (arity check for tuple carriers).
 */

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "bisemikit/errors.hpp"

namespace bisemikit {

template <class C>
concept additive_carrier = requires(const C& c, const typename C::value_type& a,
                                    const typename C::value_type& b) {
    { c.add(a, b) } -> std::convertible_to<typename C::value_type>;
    { c.zero() } -> std::convertible_to<typename C::value_type>;
    { c.eq(a, b) } -> std::convertible_to<bool>;
    { c.less(a, b) } -> std::convertible_to<bool>;
    { c.compatible(a, b) } -> std::convertible_to<bool>;
};

/// Plain signed integers under addition.
struct IntCarrier {
    using value_type = std::int64_t;
    value_type add(value_type a, value_type b) const { return a + b; }
    value_type zero() const { return 0; }
    bool eq(value_type a, value_type b) const { return a == b; }
    bool less(value_type a, value_type b) const { return a < b; }
    bool compatible(value_type, value_type) const { return true; }
};

/// Backend scalars under addition (no half-space restriction; the carrier is
/// chosen by the caller).
template <class B>
struct ScalarCarrier {
    using value_type = typename B::value_type;
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type zero() const { return B::zero(); }
    bool eq(const value_type& a, const value_type& b) const { return B::eq(a, b); }
    bool less(const value_type& a, const value_type& b) const { return B::less(a, b); }
    bool compatible(const value_type&, const value_type&) const { return true; }
};

/// Fixed-arity tuples of backend scalars under componentwise addition.
/// Tuples of different arity are incompatible.
template <class B>
struct TupleCarrier {
    using value_type = std::vector<typename B::value_type>;
    value_type add(const value_type& a, const value_type& b) const {
        if (a.size() != b.size()) throw carrier_mismatch("tuple arity mismatch");
        value_type out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    }
    value_type zero() const { return {}; }
    bool eq(const value_type& a, const value_type& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!B::eq(a[i], b[i])) return false;
        return true;
    }
    bool less(const value_type& a, const value_type& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (B::less(a[i], b[i])) return true;
            if (B::less(b[i], a[i])) return false;
        }
        return false;
    }
    bool compatible(const value_type& a, const value_type& b) const {
        return a.empty() || b.empty() || a.size() == b.size();
    }
};

/// Provenance of a bielement inside an expansion: matched indices or crossed.
enum class Provenance : std::uint8_t { Diagonal, Cross };

inline const char* to_string(Provenance p) {
    return p == Provenance::Diagonal ? "diagonal" : "cross";
}

template <class R, class L>
struct Bielement {
    R right{};
    L left{};
    Provenance tag = Provenance::Diagonal;
};

/// Integer-weighted formal sum of bielements. Terms are kept in insertion
/// order until canonicalized; equality of sums ignores provenance tags.
template <class R, class L>
struct BiformalSum {
    struct Term {
        std::int64_t coeff = 0;
        Bielement<R, L> elem;
    };
    std::vector<Term> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
};

/// The pair of carriers (G_R, G_L) and all bielement operations over them.
template <additive_carrier CR, additive_carrier CL>
class Bisemigroup {
public:
    using right_value = typename CR::value_type;
    using left_value = typename CL::value_type;
    using element = Bielement<right_value, left_value>;
    using formal_sum = BiformalSum<right_value, left_value>;
    using term = typename formal_sum::Term;

    Bisemigroup() = default;
    Bisemigroup(CR right, CL left)
        : right_(std::move(right)), left_(std::move(left)) {}

    const CR& right_carrier() const { return right_; }
    const CL& left_carrier() const { return left_; }

    element make(right_value r, left_value l,
                 Provenance tag = Provenance::Diagonal) const {
        return element{std::move(r), std::move(l), tag};
    }
    element zero_element() const { return make(right_.zero(), left_.zero()); }

    bool elements_equal(const element& a, const element& b) const {
        return right_.eq(a.right, b.right) && left_.eq(a.left, b.left);
    }

    /// (r1 x l1) cross (r2 x l2) -> (r1 + r2) x (l1 + l2).
    element cross_combine(const element& a, const element& b) const {
        require_compatible(a, b);
        return make(right_.add(a.right, b.right), left_.add(a.left, b.left));
    }

    /// Four-term expansion of the cross operation: the two diagonal
    /// bielements followed by the two cross bielements, then canonicalized.
    formal_sum cross_expand(const element& a, const element& b) const {
        formal_sum sum = cross_expand_raw(a, b);
        canonicalize(sum);
        return sum;
    }

    /// Expansion before like-term merging; always exactly 2 + 2 terms.
    formal_sum cross_expand_raw(const element& a, const element& b) const {
        require_compatible(a, b);
        formal_sum sum;
        sum.terms = {
            term{1, make(a.right, a.left, Provenance::Diagonal)},
            term{1, make(b.right, b.left, Provenance::Diagonal)},
            term{1, make(a.right, b.left, Provenance::Cross)},
            term{1, make(b.right, a.left, Provenance::Cross)},
        };
        return sum;
    }

    /// The inputs are "simple" when no component value repeats across the
    /// two operands. Repeats are legal; callers that care can validate.
    bool cross_inputs_simple(const element& a, const element& b) const {
        return !right_.eq(a.right, b.right) && !left_.eq(a.left, b.left);
    }

    // -- formal sum algebra --------------------------------------------------

    /// Merges like terms (same right, left, and tag), sorts by
    /// (right, left, tag), and drops zero coefficients.
    void canonicalize(formal_sum& sum) const {
        std::stable_sort(sum.terms.begin(), sum.terms.end(),
                         [this](const term& x, const term& y) { return term_less(x, y); });
        std::vector<term> merged;
        for (const term& t : sum.terms) {
            if (t.coeff == 0) continue;
            if (!merged.empty() && same_key(merged.back(), t))
                merged.back().coeff += t.coeff;
            else
                merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const term& t) { return t.coeff == 0; }),
                     merged.end());
        sum.terms = std::move(merged);
    }

    formal_sum add_sums(const formal_sum& a, const formal_sum& b) const {
        formal_sum out = a;
        out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
        canonicalize(out);
        return out;
    }

    formal_sum scale_sum(std::int64_t k, const formal_sum& a) const {
        formal_sum out = a;
        for (term& t : out.terms) t.coeff *= k;
        canonicalize(out);
        return out;
    }

    formal_sum singleton(const element& e, std::int64_t coeff = 1) const {
        formal_sum out;
        out.terms = {term{coeff, e}};
        return out;
    }

    /// Bilinear extension of the cross operation to formal sums:
    /// (sum n_i a_i) cross (sum m_j b_j) = sum n_i m_j expand(a_i, b_j).
    formal_sum cross_sums(const formal_sum& a, const formal_sum& b) const {
        formal_sum out;
        for (const term& ta : a.terms)
            for (const term& tb : b.terms) {
                formal_sum part = cross_expand_raw(ta.elem, tb.elem);
                for (term& t : part.terms) t.coeff *= ta.coeff * tb.coeff;
                out.terms.insert(out.terms.end(), part.terms.begin(), part.terms.end());
            }
        canonicalize(out);
        return out;
    }

    /// Equality of canonical forms. Provenance tags are metadata and are
    /// ignored here: like terms collapse across tags before comparison.
    bool sums_equal(const formal_sum& a, const formal_sum& b) const {
        const auto ca = collapse_tags(a);
        const auto cb = collapse_tags(b);
        if (ca.terms.size() != cb.terms.size()) return false;
        for (std::size_t i = 0; i < ca.terms.size(); ++i) {
            if (ca.terms[i].coeff != cb.terms[i].coeff) return false;
            if (!elements_equal(ca.terms[i].elem, cb.terms[i].elem)) return false;
        }
        return true;
    }

    // -- law checks ----------------------------------------------------------

    /// True iff the two expansion orders agree as canonical sums.
    bool check_cross_abelian(const element& a, const element& b) const {
        return sums_equal(cross_expand(a, b), cross_expand(b, a));
    }

    /// True iff combining associates, i.e. carrier addition associates on
    /// the sampled components.
    bool check_cross_associative(const element& a, const element& b,
                                 const element& c) const {
        const element lhs = cross_combine(cross_combine(a, b), c);
        const element rhs = cross_combine(a, cross_combine(b, c));
        return elements_equal(lhs, rhs);
    }

    /// Compares a cross (b + c) with (a cross b) + (a cross c) under the
    /// bilinear extension to formal sums. The extension is this module's
    /// choice of how the cross operation acts on sums; the check records
    /// whether the distributive identity then holds rather than assuming it.
    bool check_cross_distributive(const element& a, const element& b,
                                  const element& c) const {
        const formal_sum bc = add_sums(singleton(b), singleton(c));
        const formal_sum lhs = cross_sums(singleton(a), bc);
        const formal_sum rhs =
            add_sums(cross_sums(singleton(a), singleton(b)),
                     cross_sums(singleton(a), singleton(c)));
        return sums_equal(lhs, rhs);
    }

private:
    void require_compatible(const element& a, const element& b) const {
        if (!right_.compatible(a.right, b.right) || !left_.compatible(a.left, b.left))
            throw carrier_mismatch("bielement operands live in different carriers");
    }

    bool term_less(const term& x, const term& y) const {
        if (right_.less(x.elem.right, y.elem.right)) return true;
        if (right_.less(y.elem.right, x.elem.right)) return false;
        if (left_.less(x.elem.left, y.elem.left)) return true;
        if (left_.less(y.elem.left, x.elem.left)) return false;
        return x.elem.tag < y.elem.tag;
    }
    bool same_key(const term& x, const term& y) const {
        return right_.eq(x.elem.right, y.elem.right) &&
               left_.eq(x.elem.left, y.elem.left) && x.elem.tag == y.elem.tag;
    }

    formal_sum collapse_tags(const formal_sum& a) const {
        formal_sum out = a;
        for (term& t : out.terms) t.elem.tag = Provenance::Diagonal;
        canonicalize(out);
        return out;
    }

    CR right_;
    CL left_;
};

} // namespace bisemikit
