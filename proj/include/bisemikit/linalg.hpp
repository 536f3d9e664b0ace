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

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "bisemikit/errors.hpp"
#include "bisemikit/scalars.hpp"

namespace bisemikit {

/// Dense square matrix over a backend scalar, row-major.
template <class B>
class Matrix {
public:
    using value_type = typename B::value_type;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, B::zero()) {}
    Matrix(std::size_t n, std::vector<value_type> data) : n_(n), data_(std::move(data)) {
        if (data_.size() != n * n) throw dimension_mismatch("matrix data size != n*n");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = B::one();
        return m;
    }

    std::size_t size() const { return n_; }
    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const {
        return data_[i * n_ + j];
    }
    const std::vector<value_type>& data() const { return data_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same(b);
        Matrix out(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same(b);
        Matrix out(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same(b);
        Matrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const value_type& aik = a(i, k);
                if (B::is_zero(aik)) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    out(i, j) = out(i, j) + aik * b(k, j);
            }
        return out;
    }

    std::vector<value_type> apply(const std::vector<value_type>& v) const {
        if (v.size() != n_) throw dimension_mismatch("matrix/vector dimension mismatch");
        std::vector<value_type> out(n_, B::zero());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    bool equals(const Matrix& other) const {
        if (n_ != other.n_) return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!B::eq(data_[k], other.data_[k])) return false;
        return true;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!B::eq((*this)(i, j), (*this)(j, i))) return false;
        return true;
    }

private:
    void require_same(const Matrix& other) const {
        if (n_ != other.n_) throw dimension_mismatch("matrix dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<value_type> data_;
};

/// Gauss-Jordan inverse with partial pivoting. Used for metric conversion and
/// other plumbing, never for the triangular-semigroup decomposition (which is
/// pivot-free by contract).
template <class B>
Matrix<B> gauss_jordan_inverse(const Matrix<B>& m) {
    const std::size_t n = m.size();
    Matrix<B> a = m;
    Matrix<B> inv = Matrix<B>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && B::is_zero(a(pivot, col))) ++pivot;
        if (pivot == n) throw singular_metric("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const auto d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || B::is_zero(a(i, col))) continue;
            const auto f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(col, j);
                inv(i, j) = inv(i, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Positive-definiteness via pivot signs of plain elimination (no pivoting;
/// valid for symmetric input). Complex matrices must have essentially real
/// positive pivots.
template <class B>
bool symmetric_positive_definite(const Matrix<B>& m) {
    if (!m.is_symmetric()) return false;
    Matrix<B> a = m;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto pivot = a(k, k);
        if constexpr (std::is_same_v<typename B::value_type, Complex>) {
            if (!(pivot.real() > 0.0) ||
                std::abs(pivot.imag()) > ComplexBackend::tolerance *
                                             std::max(1.0, std::abs(pivot)))
                return false;
        } else {
            if (!(pivot > 0)) return false;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto f = a(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    return true;
}

/// Frobenius norm, always as a double.
template <class B>
double frobenius(const Matrix<B>& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            double mag;
            if constexpr (std::is_same_v<typename B::value_type, Complex>)
                mag = std::abs(m(i, j));
            else
                mag = std::abs(B::to_double(m(i, j)));
            sum += mag * mag;
        }
    return std::sqrt(sum);
}

template <class B>
double relative_residual(const Matrix<B>& reconstructed, const Matrix<B>& reference) {
    const double ref = frobenius(reference);
    const double diff = frobenius(reconstructed - reference);
    return ref == 0.0 ? diff : diff / ref;
}

} // namespace bisemikit
