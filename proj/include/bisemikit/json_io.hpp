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
 * @file json_io.hpp
 *
 * JSON wire formats. Rationals travel as "p/q" strings so exact pipelines
 * never see float drift; complex values as {"re", "im"} objects. Field order
 * is fixed, so serializing the same value twice yields identical bytes.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bisemikit/bilinear_matrix.hpp"
#include "bisemikit/bipoint.hpp"
#include "bisemikit/bisemigroup.hpp"
#include "bisemikit/errors.hpp"
#include "bisemikit/function_space.hpp"
#include "bisemikit/harness.hpp"
#include "bisemikit/hopf.hpp"
#include "bisemikit/linalg.hpp"
#include "bisemikit/scalars.hpp"
#include "bisemikit/tensor.hpp"

namespace bisemikit {

using Json = nlohmann::ordered_json;

// -- scalars -----------------------------------------------------------------

template <class B>
struct JsonScalar;

template <>
struct JsonScalar<RationalBackend> {
    static Json to(const Rational& v) { return rational_to_string(v); }
    static Rational from(const Json& j) {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_number_float()) return parse_rational(std::to_string(j.get<double>()));
        throw parse_error("expected a rational literal");
    }
};

template <>
struct JsonScalar<ComplexBackend> {
    static Json to(const Complex& v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }
    static Complex from(const Json& j) {
        if (j.is_number()) return Complex(j.get<double>(), 0.0);
        if (j.is_object()) return Complex(j.value("re", 0.0), j.value("im", 0.0));
        throw parse_error("expected a complex literal {\"re\", \"im\"}");
    }
};

template <class B>
Json tuple_to_json(const std::vector<typename B::value_type>& t) {
    Json out = Json::array();
    for (const auto& v : t) out.push_back(JsonScalar<B>::to(v));
    return out;
}

template <class B>
std::vector<typename B::value_type> tuple_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("expected an array of scalars");
    std::vector<typename B::value_type> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(JsonScalar<B>::from(v));
    return out;
}

template <class B>
Json matrix_to_json(const Matrix<B>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(JsonScalar<B>::to(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class B>
Matrix<B> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("expected a non-empty matrix");
    const std::size_t n = j.size();
    Matrix<B> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw parse_error("matrix rows must all have length " + std::to_string(n));
        for (std::size_t k = 0; k < n; ++k) m(i, k) = JsonScalar<B>::from(j[i][k]);
    }
    return m;
}

// -- bisemigroup -------------------------------------------------------------

template <class B>
Json formal_sum_to_json(
    const BiformalSum<typename B::value_type, typename B::value_type>& sum) {
    Json out = Json::array();
    for (const auto& t : sum.terms)
        out.push_back(Json{{"coeff", t.coeff},
                           {"right", JsonScalar<B>::to(t.elem.right)},
                           {"left", JsonScalar<B>::to(t.elem.left)},
                           {"tag", to_string(t.elem.tag)}});
    return out;
}

// -- bipoints ----------------------------------------------------------------

template <class B>
Json bipoint_to_json(const AlgebraicBipoint<B>& bp) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < bp.n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < bp.n; ++j) row.push_back(JsonScalar<B>::to(bp.entry(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"n", bp.n},
                {"right", tuple_to_json<B>(bp.source_right)},
                {"left", tuple_to_json<B>(bp.source_left)},
                {"entries", std::move(entries)}};
}

template <class B>
AlgebraicBipoint<B> bipoint_from_json(const Json& j) {
    auto bp = outer_bipoint<B>(tuple_from_json<B>(j.at("right")),
                               tuple_from_json<B>(j.at("left")));
    return bp;
}

// -- decomposition -----------------------------------------------------------

template <class B>
Json gauss_factors_to_json(const GaussFactors<B>& f) {
    return Json{{"xi_R", matrix_to_json<B>(f.lower_unitriangular)},
                {"delta", tuple_to_json<B>(f.delta)},
                {"xi_L", matrix_to_json<B>(f.upper_unitriangular)}};
}

template <class B>
Json pair_to_json(const BilinearMatrixPair<B>& p) {
    return Json{{"T_R", matrix_to_json<B>(p.right_lower)},
                {"T_L", matrix_to_json<B>(p.left_upper)}};
}

// -- vectors -----------------------------------------------------------------

template <class B>
Json vector_to_json(const SemimoduleVector<B>& v) {
    return Json{{"side", to_string(v.side)},
                {"variance", to_string(v.variance)},
                {"projected", v.projected},
                {"coords", tuple_to_json<B>(v.coords)}};
}

template <class B>
SemimoduleVector<B> vector_from_json(const Json& j) {
    SemimoduleVector<B> v;
    const std::string side = j.value("side", "left");
    if (side != "left" && side != "right")
        throw parse_error("vector side must be \"left\" or \"right\"");
    v.side = side == "left" ? Side::Left : Side::Right;
    const std::string variance = j.value("variance", "contravariant");
    if (variance != "covariant" && variance != "contravariant")
        throw parse_error("vector variance must be \"covariant\" or \"contravariant\"");
    v.variance = variance == "covariant" ? Variance::Covariant : Variance::Contravariant;
    v.projected = j.value("projected", false);
    v.coords = tuple_from_json<B>(j.at("coords"));
    return v;
}

// -- reports -----------------------------------------------------------------

inline Json law_result_to_json(const LawResult& r) {
    Json out{{"law", r.law}, {"pass", r.pass}, {"samples_run", r.samples_run}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    return out;
}

inline Json conformance_report_to_json(const ConformanceReport& r) {
    Json laws = Json::array();
    for (const auto& l : r.laws) laws.push_back(law_result_to_json(l));
    return Json{{"structure", r.structure}, {"backend", r.backend},
                {"samples", r.samples},     {"seed", r.seed},
                {"laws", std::move(laws)},  {"all_pass", r.all_pass()}};
}

inline Json hopf_report_to_json(const HopfReport& r) {
    Json laws = Json::array();
    for (const auto& l : r.laws) laws.push_back(law_result_to_json(l));
    return Json{{"carrier", r.carrier},
                {"dim", r.dim},
                {"laws", std::move(laws)},
                {"all_pass", r.all_pass()}};
}

inline Json semifield_report_to_json(const SemifieldReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(law_result_to_json(c));
    return Json{{"backend", r.backend},
                {"samples", r.samples},
                {"seed", r.seed},
                {"checks", std::move(checks)},
                {"all_pass", r.all_pass()}};
}

inline Json star_report_to_json(const StarReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(law_result_to_json(c));
    return Json{{"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
}

inline Json hilbert_report_to_json(const HilbertReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(law_result_to_json(c));
    return Json{{"samples", r.samples},
                {"seed", r.seed},
                {"checks", std::move(checks)},
                {"all_pass", r.all_pass()}};
}

// -- function spaces ----------------------------------------------------------

inline Json sampled_function_to_json(const SampledFunction& f) {
    Json samples = Json::array();
    for (const auto& s : f.samples) samples.push_back(JsonScalar<ComplexBackend>::to(s));
    return Json{{"samples", std::move(samples)},
                {"weights", f.weights},
                {"domain_label", f.domain_label}};
}

inline SampledFunction sampled_function_from_json(const Json& j) {
    std::vector<Complex> samples;
    for (const auto& s : j.at("samples")) samples.push_back(JsonScalar<ComplexBackend>::from(s));
    std::vector<double> weights;
    if (j.contains("weights"))
        weights = j.at("weights").get<std::vector<double>>();
    else
        return SampledFunction::uniform(std::move(samples), j.value("domain_label", "grid"));
    return SampledFunction(std::move(samples), std::move(weights),
                           j.value("domain_label", "grid"));
}

inline Json bifunction_to_json(const Bifunction& bf) {
    return Json{{"phi_R", sampled_function_to_json(bf.phi_right)},
                {"phi_L", sampled_function_to_json(bf.phi_left)}};
}

// -- error envelope -----------------------------------------------------------

inline Json error_to_json(const std::string& kind, const std::string& detail,
                          const std::string& location = "") {
    Json out{{"error", kind}, {"detail", detail}};
    if (!location.empty()) out["location"] = location;
    return out;
}

// -- CSV matrices -------------------------------------------------------------

/// Parses comma-separated rows of "p/q" / integer / decimal tokens.
template <class B>
Matrix<B> matrix_from_csv(const std::string& text) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> row;
    std::string token;
    const auto push_token = [&]() {
        std::size_t a = token.find_first_not_of(" \t\r");
        if (a == std::string::npos) token.clear();
        else token = token.substr(a, token.find_last_not_of(" \t\r") - a + 1);
        row.push_back(token);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') push_token();
        else if (c == '\n') {
            push_token();
            bool blank = true;
            for (const auto& t : row) blank &= t.empty();
            if (!blank) cells.push_back(row);
            row.clear();
        } else token += c;
    }
    if (!token.empty() || !row.empty()) {
        push_token();
        bool blank = true;
        for (const auto& t : row) blank &= t.empty();
        if (!blank) cells.push_back(row);
    }
    if (cells.empty()) throw parse_error("empty CSV matrix");
    const std::size_t n = cells.size();
    Matrix<B> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cells[i].size() != n)
            throw parse_error("CSV matrix rows must all have length " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (std::is_same_v<B, RationalBackend>)
                m(i, j) = parse_rational(cells[i][j]);
            else
                m(i, j) = Complex(std::stod(cells[i][j]), 0.0);
        }
    }
    return m;
}

} // namespace bisemikit
