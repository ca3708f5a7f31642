// Copyright 2026 The lopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "lop/linalg.hpp"

namespace lop {

/// Matrix permanent by Ryser's formula with Gray-code updates, O(2^k k).
/// The 0x0 permanent is 1. Throws std::invalid_argument for non-square input
/// or k > 30.
Complex permanent(const Matrix& x);

}  // namespace lop
