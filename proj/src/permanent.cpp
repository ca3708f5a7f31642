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

#include "lop/permanent.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace lop {

Complex permanent(const Matrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("permanent: matrix must be square");
  const int k = static_cast<int>(x.rows());
  if (k == 0) return 1.0;
  if (k > 30) throw std::invalid_argument("permanent: size above 30 is not supported");
  if (k == 1) return x(0, 0);

  // perm(X) = (-1)^k sum_{S} (-1)^{|S|} prod_i sum_{j in S} x_ij, walking the
  // subsets S in Gray-code order so each step adds or removes one column.
  Vector row_sums = Vector::Zero(k);
  Complex total = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int j = std::countr_zero(step);
    gray ^= std::uint64_t{1} << j;
    if (gray & (std::uint64_t{1} << j)) {
      row_sums += x.col(j);
    } else {
      row_sums -= x.col(j);
    }
    Complex prod = row_sums(0);
    for (int i = 1; i < k; ++i) prod *= row_sums(i);
    const bool odd = ((k - std::popcount(gray)) & 1) != 0;
    total += odd ? -prod : prod;
  }
  return total;
}

}  // namespace lop
