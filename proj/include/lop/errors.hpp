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

#include <stdexcept>
#include <string>

namespace lop {

// Precondition violations (bad indices, wrong shapes, out-of-range
// parameters) are reported with std::invalid_argument. The types below cover
// the cases callers usually want to tell apart.

/// Two states or operators live on different Fock bases.
class BasisMismatch : public std::invalid_argument {
 public:
  explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical check failed (non-unitary input, log branch failure, a
/// verification residual above tolerance).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested construction has no solution (e.g. the boundary branch of
/// the unitary completion with non-orthogonal columns).
class InfeasibleError : public NumericalError {
 public:
  explicit InfeasibleError(const std::string& what) : NumericalError(what) {}
};

}  // namespace lop
