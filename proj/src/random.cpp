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

#include "stinespring/random.hpp"

#include <cmath>

#include "stinespring/linalg.hpp"

namespace stinespring {

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (auto& z : g.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = cplx(s * re, s * im);
  }
  return g;
}

ComplexMatrix random_density(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  ComplexMatrix rho = hermitian_part(g * g.adjoint());
  rho *= 1.0 / rho.trace().real();
  return rho;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  return orthonormalize_columns(random_gaussian(n, n, rng));
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  return hermitian_part(random_gaussian(n, n, rng));
}

std::vector<cplx> random_unit_vector(std::size_t n, Rng& rng) {
  std::vector<cplx> v = random_gaussian(n, 1, rng).column(0);
  double norm = 0.0;
  for (const auto& z : v) norm += std::norm(z);
  norm = std::sqrt(norm);
  for (auto& z : v) z /= norm;
  return v;
}

}  // namespace stinespring
