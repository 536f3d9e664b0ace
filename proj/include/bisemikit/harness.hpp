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
 * @file harness.hpp
 *
 * Declarative conformance engine: structure kinds name their definitional
 * laws, laws are evaluated on seeded pseudo-random elements, and the result
 * is a machine-readable report that is byte-deterministic for a fixed
 * (spec, samples, seed) triple.
 *
 * Models plug in the carriers. A model supplies one-sided scalar arithmetic
 * on the left carrier, the involution onto the right carrier, the
 * transported right product, comparison, ordering and sampling. Test doubles
 * with deliberate defects are ordinary models.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bisemikit/bisemigroup.hpp"
#include "bisemikit/errors.hpp"
#include "bisemikit/report.hpp"
#include "bisemikit/sampling.hpp"
#include "bisemikit/scalars.hpp"

namespace bisemikit {

enum class StructureKind : std::uint8_t {
    Semigroup,
    Monoid,
    Semiring,
    Semifield,
    Bisemigroup,
    Bimonoid,
    Bisemiring,
    Bisemifield,
    Bisemimodule,
    Bisemialgebra,
};

inline const char* to_string(StructureKind k) {
    switch (k) {
        case StructureKind::Semigroup: return "semigroup";
        case StructureKind::Monoid: return "monoid";
        case StructureKind::Semiring: return "semiring";
        case StructureKind::Semifield: return "semifield";
        case StructureKind::Bisemigroup: return "bisemigroup";
        case StructureKind::Bimonoid: return "bimonoid";
        case StructureKind::Bisemiring: return "bisemiring";
        case StructureKind::Bisemifield: return "bisemifield";
        case StructureKind::Bisemimodule: return "bisemimodule";
        default: return "bisemialgebra";
    }
}

inline StructureKind parse_structure_kind(const std::string& name) {
    for (StructureKind k :
         {StructureKind::Semigroup, StructureKind::Monoid, StructureKind::Semiring,
          StructureKind::Semifield, StructureKind::Bisemigroup, StructureKind::Bimonoid,
          StructureKind::Bisemiring, StructureKind::Bisemifield,
          StructureKind::Bisemimodule, StructureKind::Bisemialgebra})
        if (name == to_string(k)) return k;
    throw parse_error("unknown structure kind \"" + name + "\"");
}

/// One registry row: a law identifier and the defining clause it checks.
struct LawInfo {
    const char* name;
    const char* clause;
};

/// The full law table. Each definitional clause of the structure ladder is
/// represented by exactly one named law; the registry itself is a tested
/// artifact (count and names are asserted in the suite).
inline const std::vector<LawInfo>& law_registry() {
    static const std::vector<LawInfo> table = {
        {"add-associative", "one-sided addition associates"},
        {"cross-expansion",
         "the cross operation of two bielements expands into exactly two diagonal and "
         "two cross terms whose componentwise sums match the combined bielement"},
        {"add-identity", "the one-sided identity leaves every element fixed"},
        {"shared-identity",
         "both carriers embed one common identity fixed by the cross operation"},
        {"add-commutative", "one-sided addition commutes"},
        {"mul-associative", "one-sided multiplication associates"},
        {"cross-associative", "the cross operation associates"},
        {"mul-distributive", "one-sided multiplication distributes over addition"},
        {"cross-distributive",
         "the cross operation distributes over formal sums of bielements under the "
         "bilinear term-by-term extension"},
        {"cross-commutative", "the cross operation commutes as canonical formal sums"},
        {"mul-commutative", "one-sided multiplication commutes"},
        {"mul-identity", "the one-sided unit leaves every element fixed"},
        {"zero-divisor-free", "no two nonzero elements multiply to zero"},
        {"nonzero-invertible", "every nonzero one-sided element has an inverse"},
        {"bi-invertible",
         "every bielement with nonzero components is a biunit: componentwise inverses "
         "exist and multiply to the biunit"},
        {"module-distributes-vector",
         "the scalar biaction distributes over bielement addition"},
        {"module-distributes-scalar",
         "the scalar biaction distributes over scalar addition"},
        {"module-scalar-compatible",
         "acting twice equals acting once with the scalar product"},
        {"module-unitary", "the biunit acts as the identity"},
        {"biaction-cross-compatible",
         "the biaction of a scalar pair commutes with the cross operation"},
        {"sides-distinct",
         "swapping the right and left scalars of a biaction changes the result"},
    };
    return table;
}

inline bool is_known_law(const std::string& name) {
    for (const auto& row : law_registry())
        if (name == row.name) return true;
    return false;
}

/// Default law lists per structure kind.
inline std::vector<std::string> laws_for(StructureKind kind) {
    switch (kind) {
        case StructureKind::Semigroup: return {"add-associative"};
        case StructureKind::Monoid: return {"add-associative", "add-identity"};
        case StructureKind::Semiring:
            return {"add-associative", "add-commutative", "add-identity",
                    "mul-associative", "mul-identity", "mul-distributive"};
        case StructureKind::Semifield:
            return {"add-associative", "add-commutative", "add-identity",
                    "mul-associative", "mul-identity", "mul-distributive",
                    "mul-commutative", "zero-divisor-free", "nonzero-invertible"};
        case StructureKind::Bisemigroup: return {"cross-expansion", "cross-commutative"};
        case StructureKind::Bimonoid:
            return {"cross-expansion", "cross-commutative", "shared-identity"};
        case StructureKind::Bisemiring:
            return {"cross-expansion", "cross-commutative", "cross-associative",
                    "cross-distributive"};
        case StructureKind::Bisemifield:
            return {"cross-expansion", "cross-commutative", "cross-associative",
                    "cross-distributive", "shared-identity", "bi-invertible"};
        case StructureKind::Bisemimodule:
            return {"module-distributes-vector", "module-distributes-scalar",
                    "module-scalar-compatible", "module-unitary",
                    "biaction-cross-compatible", "sides-distinct"};
        case StructureKind::Bisemialgebra:
        default:
            return {"cross-expansion", "cross-commutative", "cross-associative",
                    "cross-distributive", "module-unitary", "biaction-cross-compatible"};
    }
}

struct StructureSpec {
    StructureKind kind = StructureKind::Bisemigroup;
    std::string backend = "rational";
    std::vector<std::string> laws; // defaulted from the kind when empty
};

struct ConformanceReport {
    std::string structure;
    std::string backend;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;
    bool all_pass() const {
        for (const auto& l : laws)
            if (!l.pass) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

struct IntegerModel {
    static constexpr const char* name = "integer";
    using value = std::int64_t;
    value add(value a, value b) const { return a + b; }
    value mul(value a, value b) const { return a * b; }
    value mul_right(value a, value b) const { return -(a * b); }
    value zero() const { return 0; }
    value one() const { return 1; }
    value right_one() const { return -1; }
    value involute(value a) const { return -a; }
    bool eq(value a, value b) const { return a == b; }
    bool less(value a, value b) const { return a < b; }
    bool invert(value, value&) const { return false; } // integers are not a semifield
    value sample_any(Rng& rng) const {
        static const value boundary[] = {0, 1, -1, 2, 3, 5, 7};
        if (rng.next_u64() % 4 == 0) return boundary[rng.next_u64() % 7];
        return rng.range(-999, 999);
    }
    value sample_left(Rng& rng) const { return std::abs(sample_any(rng)); }
    value sample_right(Rng& rng) const { return -std::abs(sample_any(rng)); }
    std::string show(value v) const { return std::to_string(v); }
};

struct RationalModel {
    static constexpr const char* name = "rational";
    using value = Rational;
    value add(const value& a, const value& b) const { return a + b; }
    value mul(const value& a, const value& b) const { return a * b; }
    value mul_right(const value& a, const value& b) const {
        return RationalBackend::mul_right(a, b);
    }
    value zero() const { return Rational(0); }
    value one() const { return Rational(1); }
    value right_one() const { return Rational(-1); }
    value involute(const value& a) const { return -a; }
    bool eq(const value& a, const value& b) const { return a == b; }
    bool less(const value& a, const value& b) const { return a < b; }
    bool invert(const value& a, value& out) const {
        if (a == 0) return false;
        out = Rational(1) / a;
        return true;
    }
    value sample_any(Rng& rng) const { return ScalarSampler<RationalBackend>::draw(rng); }
    value sample_left(Rng& rng) const { return abs(sample_any(rng)); }
    value sample_right(Rng& rng) const { return -abs(sample_any(rng)); }
    std::string show(const value& v) const { return rational_to_string(v); }
};

struct ComplexModel {
    static constexpr const char* name = "complex";
    using value = Complex;
    value add(const value& a, const value& b) const { return a + b; }
    value mul(const value& a, const value& b) const { return a * b; }
    value mul_right(const value& a, const value& b) const {
        return ComplexBackend::mul_right(a, b);
    }
    value zero() const { return Complex(0, 0); }
    value one() const { return Complex(1, 0); }
    value right_one() const { return Complex(1, 0); }
    value involute(const value& a) const { return std::conj(a); }
    bool eq(const value& a, const value& b) const { return ComplexBackend::eq(a, b); }
    bool less(const value& a, const value& b) const { return ComplexBackend::less(a, b); }
    bool invert(const value& a, value& out) const {
        if (a == Complex(0, 0)) return false;
        out = Complex(1, 0) / a;
        return true;
    }
    value sample_any(Rng& rng) const { return ScalarSampler<ComplexBackend>::draw(rng); }
    value sample_left(Rng& rng) const { return sample_any(rng); }
    value sample_right(Rng& rng) const { return std::conj(sample_any(rng)); }
    std::string show(const value& v) const {
        return std::to_string(v.real()) + (v.imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(v.imag())) + "i";
    }
};

namespace detail {

template <class M>
struct ModelCarrier {
    using value_type = typename M::value;
    const M* model = nullptr;
    value_type add(const value_type& a, const value_type& b) const {
        return model->add(a, b);
    }
    value_type zero() const { return model->zero(); }
    bool eq(const value_type& a, const value_type& b) const { return model->eq(a, b); }
    bool less(const value_type& a, const value_type& b) const { return model->less(a, b); }
    bool compatible(const value_type&, const value_type&) const { return true; }
};

/// Fixed-arity coordinate pair: a right tuple with a left tuple, the sampled
/// stand-in for a bisemimodule element.
template <class M>
struct BiVector {
    std::vector<typename M::value> right, left;
};

template <class M>
class LawEvaluator {
public:
    using V = typename M::value;
    using Carrier = ModelCarrier<M>;
    using Bsg = Bisemigroup<Carrier, Carrier>;
    using Element = typename Bsg::element;

    LawEvaluator(const M& model, int samples, std::uint64_t seed)
        : model_(model), samples_(samples), seed_(seed),
          bsg_(Carrier{&model}, Carrier{&model}) {}

    LawResult evaluate(const std::string& law, std::size_t law_index) const {
        LawResult result;
        result.law = law;
        Rng rng(seed_ + 0x9e3779b97f4a7c15ULL * (law_index + 1));
        for (int i = 0; i < samples_ && result.pass; ++i) {
            ++result.samples_run;
            std::string witness;
            if (!run_one(law, rng, witness)) {
                result.pass = false;
                result.witness = "sample " + std::to_string(i) +
                                 (witness.empty() ? "" : ": " + witness);
            }
        }
        return result;
    }

private:
    bool run_one(const std::string& law, Rng& rng, std::string& witness) const {
        const M& m = model_;
        if (law == "add-associative") {
            const V a = m.sample_left(rng), b = m.sample_left(rng), c = m.sample_left(rng);
            return check3(m.eq(m.add(m.add(a, b), c), m.add(a, m.add(b, c))), a, b, c,
                          witness);
        }
        if (law == "add-commutative") {
            const V a = m.sample_left(rng), b = m.sample_left(rng);
            return check2(m.eq(m.add(a, b), m.add(b, a)), a, b, witness);
        }
        if (law == "add-identity") {
            const V a = m.sample_left(rng);
            return check1(m.eq(m.add(a, m.zero()), a) && m.eq(m.add(m.zero(), a), a), a,
                          witness);
        }
        if (law == "mul-associative") {
            const V a = m.sample_left(rng), b = m.sample_left(rng), c = m.sample_left(rng);
            return check3(m.eq(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c))), a, b, c,
                          witness);
        }
        if (law == "mul-commutative") {
            const V a = m.sample_left(rng), b = m.sample_left(rng);
            return check2(m.eq(m.mul(a, b), m.mul(b, a)), a, b, witness);
        }
        if (law == "mul-identity") {
            const V a = m.sample_left(rng);
            return check1(m.eq(m.mul(a, m.one()), a) && m.eq(m.mul(m.one(), a), a), a,
                          witness);
        }
        if (law == "mul-distributive") {
            const V a = m.sample_left(rng), b = m.sample_left(rng), c = m.sample_left(rng);
            const bool ok =
                m.eq(m.mul(a, m.add(b, c)), m.add(m.mul(a, b), m.mul(a, c))) &&
                m.eq(m.mul(m.add(a, b), c), m.add(m.mul(a, c), m.mul(b, c)));
            return check3(ok, a, b, c, witness);
        }
        if (law == "zero-divisor-free") {
            const V a = m.sample_left(rng), b = m.sample_left(rng);
            if (m.eq(a, m.zero()) || m.eq(b, m.zero())) return true;
            return check2(!m.eq(m.mul(a, b), m.zero()), a, b, witness);
        }
        if (law == "nonzero-invertible") {
            const V a = m.sample_left(rng);
            if (m.eq(a, m.zero())) return true;
            V inv;
            const bool ok = m.invert(a, inv) && m.eq(m.mul(a, inv), m.one());
            return check1(ok, a, witness);
        }
        if (law == "cross-expansion") {
            const Element x = sample_element(rng), y = sample_element(rng);
            const auto raw = bsg_.cross_expand_raw(x, y);
            int diag = 0, cross = 0;
            for (const auto& t : raw.terms)
                (t.elem.tag == Provenance::Diagonal ? diag : cross) += 1;
            if (raw.terms.size() != 4 || diag != 2 || cross != 2) {
                witness = "expansion shape";
                return false;
            }
            const Element combined = bsg_.cross_combine(x, y);
            V right_sum = m.zero(), left_sum = m.zero();
            for (const auto& t : raw.terms)
                if (t.elem.tag == Provenance::Diagonal) {
                    right_sum = m.add(right_sum, t.elem.right);
                    left_sum = m.add(left_sum, t.elem.left);
                }
            if (!m.eq(right_sum, combined.right) || !m.eq(left_sum, combined.left)) {
                witness = "diagonal components do not recompose";
                return false;
            }
            return true;
        }
        if (law == "cross-commutative") {
            const Element x = sample_element(rng), y = sample_element(rng);
            if (!bsg_.check_cross_abelian(x, y)) {
                witness = show_element(x) + " vs " + show_element(y);
                return false;
            }
            return true;
        }
        if (law == "cross-associative") {
            const Element x = sample_element(rng), y = sample_element(rng),
                          z = sample_element(rng);
            if (!bsg_.check_cross_associative(x, y, z)) {
                witness = show_element(x) + ", " + show_element(y) + ", " + show_element(z);
                return false;
            }
            return true;
        }
        if (law == "cross-distributive") {
            const Element x = sample_element(rng), y = sample_element(rng),
                          z = sample_element(rng);
            return bsg_.check_cross_distributive(x, y, z);
        }
        if (law == "shared-identity") {
            if (!m.eq(m.zero(), m.involute(m.zero()))) {
                witness = "carrier identities differ";
                return false;
            }
            const Element x = sample_element(rng);
            const Element fixed = bsg_.cross_combine(x, bsg_.zero_element());
            return bsg_.elements_equal(fixed, x);
        }
        if (law == "bi-invertible") {
            const V r = m.sample_right(rng), l = m.sample_left(rng);
            if (m.eq(r, m.zero()) || m.eq(l, m.zero())) return true;
            V l_inv;
            if (!m.invert(l, l_inv)) {
                witness = "left component " + m.show(l);
                return false;
            }
            V r_mirror_inv;
            if (!m.invert(m.involute(r), r_mirror_inv)) {
                witness = "right component " + m.show(r);
                return false;
            }
            const V r_inv = m.involute(r_mirror_inv);
            const bool ok = m.eq(m.mul(l, l_inv), m.one()) &&
                            m.eq(m.mul_right(r, r_inv), m.right_one());
            return check2(ok, r, l, witness);
        }
        if (law == "module-distributes-vector") {
            const auto x = sample_bivector(rng);
            const auto y = sample_bivector_of(rng, x.right.size());
            const V r = m.sample_right(rng), l = m.sample_left(rng);
            return bivec_eq(act(r, l, add_bivec(x, y)),
                            add_bivec(act(r, l, x), act(r, l, y)));
        }
        if (law == "module-distributes-scalar") {
            const auto x = sample_bivector(rng);
            const V r1 = m.sample_right(rng), r2 = m.sample_right(rng);
            const V l1 = m.sample_left(rng), l2 = m.sample_left(rng);
            return bivec_eq(act(m.add(r1, r2), m.add(l1, l2), x),
                            add_bivec(act(r1, l1, x), act(r2, l2, x)));
        }
        if (law == "module-scalar-compatible") {
            const auto x = sample_bivector(rng);
            const V r1 = m.sample_right(rng), r2 = m.sample_right(rng);
            const V l1 = m.sample_left(rng), l2 = m.sample_left(rng);
            return bivec_eq(act(r1, l1, act(r2, l2, x)),
                            act(m.mul_right(r1, r2), m.mul(l1, l2), x));
        }
        if (law == "module-unitary") {
            const auto x = sample_bivector(rng);
            return bivec_eq(act(m.right_one(), m.one(), x), x);
        }
        if (law == "biaction-cross-compatible") {
            const Element x = sample_element(rng), y = sample_element(rng);
            const V r = m.sample_right(rng), l = m.sample_left(rng);
            const Element lhs = bsg_.make(m.mul_right(bsg_.cross_combine(x, y).right, r),
                                          m.mul(l, bsg_.cross_combine(x, y).left));
            const Element rhs = bsg_.cross_combine(
                bsg_.make(m.mul_right(x.right, r), m.mul(l, x.left)),
                bsg_.make(m.mul_right(y.right, r), m.mul(l, y.left)));
            return bsg_.elements_equal(lhs, rhs);
        }
        if (law == "sides-distinct") {
            const V r = m.sample_right(rng), l = m.sample_left(rng);
            const V gr = m.sample_right(rng), gl = m.sample_left(rng);
            if (m.eq(r, l) || m.eq(gr, m.zero()) || m.eq(gl, m.zero())) return true;
            const bool same = m.eq(m.mul(gr, r), m.mul(gr, l)) &&
                              m.eq(m.mul(l, gl), m.mul(r, gl));
            if (same) {
                witness = "(" + m.show(r) + ", " + m.show(l) + ") on (" + m.show(gr) +
                          ", " + m.show(gl) + ")";
                return false;
            }
            return true;
        }
        throw unknown_law("no evaluator for law \"" + law + "\"");
    }

    Element sample_element(Rng& rng) const {
        return bsg_.make(model_.sample_right(rng), model_.sample_left(rng));
    }
    std::string show_element(const Element& e) const {
        return "(" + model_.show(e.right) + " x " + model_.show(e.left) + ")";
    }

    BiVector<M> sample_bivector(Rng& rng) const {
        return sample_bivector_of(rng, 1 + rng.next_u64() % 4);
    }
    BiVector<M> sample_bivector_of(Rng& rng, std::size_t dim) const {
        BiVector<M> v;
        for (std::size_t i = 0; i < dim; ++i) {
            v.right.push_back(model_.sample_right(rng));
            v.left.push_back(model_.sample_left(rng));
        }
        return v;
    }
    BiVector<M> add_bivec(const BiVector<M>& a, const BiVector<M>& b) const {
        BiVector<M> out;
        for (std::size_t i = 0; i < a.right.size(); ++i) {
            out.right.push_back(model_.add(a.right[i], b.right[i]));
            out.left.push_back(model_.add(a.left[i], b.left[i]));
        }
        return out;
    }
    BiVector<M> act(const typename M::value& r, const typename M::value& l,
                    const BiVector<M>& x) const {
        BiVector<M> out;
        for (std::size_t i = 0; i < x.right.size(); ++i) {
            out.right.push_back(model_.mul_right(x.right[i], r));
            out.left.push_back(model_.mul(l, x.left[i]));
        }
        return out;
    }
    bool bivec_eq(const BiVector<M>& a, const BiVector<M>& b) const {
        if (a.right.size() != b.right.size()) return false;
        for (std::size_t i = 0; i < a.right.size(); ++i)
            if (!model_.eq(a.right[i], b.right[i]) || !model_.eq(a.left[i], b.left[i]))
                return false;
        return true;
    }

    bool check1(bool ok, const V& a, std::string& witness) const {
        if (!ok) witness = model_.show(a);
        return ok;
    }
    bool check2(bool ok, const V& a, const V& b, std::string& witness) const {
        if (!ok) witness = "(" + model_.show(a) + ", " + model_.show(b) + ")";
        return ok;
    }
    bool check3(bool ok, const V& a, const V& b, const V& c, std::string& witness) const {
        if (!ok)
            witness = "(" + model_.show(a) + ", " + model_.show(b) + ", " + model_.show(c) +
                      ")";
        return ok;
    }

    const M& model_;
    int samples_;
    std::uint64_t seed_;
    Bsg bsg_;
};

} // namespace detail

/// Runs the spec's laws against an explicit model. Test doubles plug in here.
template <class M>
ConformanceReport run_conformance_with(const M& model, const StructureSpec& spec,
                                       int samples, std::uint64_t seed) {
    if (samples < 1) throw kit_error("sample count must be >= 1");
    std::vector<std::string> laws = spec.laws.empty() ? laws_for(spec.kind) : spec.laws;
    for (const auto& law : laws)
        if (!is_known_law(law)) throw unknown_law("unknown law identifier \"" + law + "\"");

    ConformanceReport report;
    report.structure = to_string(spec.kind);
    report.backend = M::name;
    report.samples = samples;
    report.seed = seed;
    detail::LawEvaluator<M> evaluator(model, samples, seed);
    for (std::size_t i = 0; i < laws.size(); ++i)
        report.laws.push_back(evaluator.evaluate(laws[i], i));
    return report;
}

/// Dispatches on the spec's backend name.
inline ConformanceReport run_conformance(const StructureSpec& spec, int samples,
                                         std::uint64_t seed) {
    if (spec.backend == "integer")
        return run_conformance_with(IntegerModel{}, spec, samples, seed);
    if (spec.backend == "rational")
        return run_conformance_with(RationalModel{}, spec, samples, seed);
    if (spec.backend == "complex")
        return run_conformance_with(ComplexModel{}, spec, samples, seed);
    throw parse_error("unknown backend \"" + spec.backend + "\"");
}

} // namespace bisemikit
