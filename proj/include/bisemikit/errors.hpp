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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bisemikit {

/// Base class for all domain errors thrown by the library.
class kit_error : public std::runtime_error {
public:
    explicit kit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in incompatible carriers (e.g. tuples of different arity).
class carrier_mismatch : public kit_error {
public:
    explicit carrier_mismatch(const std::string& what) : kit_error(what) {}
};

class dimension_mismatch : public kit_error {
public:
    explicit dimension_mismatch(const std::string& what) : kit_error(what) {}
};

/// A value violates the sign/conjugation discipline of its half-space carrier.
class carrier_violation : public kit_error {
public:
    explicit carrier_violation(const std::string& what) : kit_error(what) {}
};

/// Pivot-free elimination hit a zero leading principal minor.
/// `index` is the 1-based order of the offending minor.
class decomposition_undefined : public kit_error {
public:
    decomposition_undefined(std::size_t index, const std::string& what)
        : kit_error(what), index(index) {}
    std::size_t index;
};

class singular_metric : public kit_error {
public:
    explicit singular_metric(const std::string& what) : kit_error(what) {}
};

class sqrt_unavailable : public kit_error {
public:
    explicit sqrt_unavailable(const std::string& what) : kit_error(what) {}
};

/// Bipoint sources are not mirror images of each other, so the projection
/// onto a classical point is undefined.
class asymmetric_sources : public kit_error {
public:
    explicit asymmetric_sources(const std::string& what) : kit_error(what) {}
};

class invalid_group : public kit_error {
public:
    explicit invalid_group(const std::string& what) : kit_error(what) {}
};

class unknown_law : public kit_error {
public:
    explicit unknown_law(const std::string& what) : kit_error(what) {}
};

class parse_error : public kit_error {
public:
    explicit parse_error(const std::string& what) : kit_error(what) {}
};

} // namespace bisemikit
