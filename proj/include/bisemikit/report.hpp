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

#include <string>

namespace bisemikit {

/// Outcome of one named law evaluated over a sample stream. On failure the
/// witness holds the first offending sample; no shrinking is attempted.
struct LawResult {
    std::string law;
    bool pass = true;
    int samples_run = 0;
    std::string witness;
};

} // namespace bisemikit
