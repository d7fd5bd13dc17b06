// Copyright 2026 The stinespring authors
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

#include <cmath>
#include <complex>

#include "stinespring/channel.hpp"
#include "stinespring/complex_matrix.hpp"

namespace stinespring::testing {

inline KrausSet amplitude_damping(double gamma) {
  return KrausSet({ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}},
                   ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}}});
}

inline KrausSet depolarizing_qubit() {
  const cplx i{0.0, 1.0};
  return KrausSet({0.5 * ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
                   0.5 * ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
                   0.5 * ComplexMatrix{{0.0, -i}, {i, 0.0}},
                   0.5 * ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}});
}

inline KrausSet identity_channel(std::size_t n) {
  return KrausSet({ComplexMatrix::identity(n)});
}

// Textbook triple loop with std::complex arithmetic; independent of the
// library's kernels.
inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t p = 0; p < a.cols(); ++p) s += a(i, p) * b(p, j);
      c(i, j) = s;
    }
  return c;
}

}  // namespace stinespring::testing
