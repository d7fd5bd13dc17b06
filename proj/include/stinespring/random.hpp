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

#include <cstdint>
#include <random>

#include "stinespring/complex_matrix.hpp"

namespace stinespring {

/// Generator used everywhere randomness is needed. Each caller owns its
/// instance; nothing is process-global.
using Rng = std::mt19937_64;

/// Entries (x + iy)/sqrt(2) with x, y standard normal.
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);
/// G G* / tr(G G*) for a square complex Gaussian G (full rank a.s.).
ComplexMatrix random_density(std::size_t n, Rng& rng);
/// Haar-distributed unitary (Gram-Schmidt on a Gaussian matrix).
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);
/// Unit vector, uniform on the sphere.
std::vector<cplx> random_unit_vector(std::size_t n, Rng& rng);

}  // namespace stinespring
