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

#include "bisemikit/bilinear_matrix.hpp"
#include "bisemikit/bipoint.hpp"
#include "bisemikit/bisemigroup.hpp"
#include "bisemikit/errors.hpp"
#include "bisemikit/function_space.hpp"
#include "bisemikit/harness.hpp"
#include "bisemikit/hopf.hpp"
#include "bisemikit/json_io.hpp"
#include "bisemikit/linalg.hpp"
#include "bisemikit/scalars.hpp"
#include "bisemikit/tensor.hpp"
