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

#include <complex>
#include <cstddef>
#include <string_view>

namespace stinespring::kernels {

using cplx = std::complex<double>;

// Row-major complex GEMM: c[m x n] = a[m x k] * b[k x n]. c is overwritten.
// Zero entries of a are skipped, so products with sparse left factors (states
// embedded in a larger space) cost only their nonzeros.
using GemmFn = void (*)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                        std::size_t k, std::size_t n);
// y += alpha * x
using AxpyFn = void (*)(cplx alpha, const cplx* x, cplx* y, std::size_t len);
// sum_i conj(x_i) * y_i
using DotcFn = cplx (*)(const cplx* x, const cplx* y, std::size_t len);

struct KernelTable {
  std::string_view name;
  GemmFn gemm;
  AxpyFn axpy;
  DotcFn dotc;
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the binary was built without AVX2 support or the running
/// CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

/// Table used by the library. Chosen once: AVX2 when available, scalar
/// otherwise. STINESPRING_SIMD=scalar in the environment forces the
/// reference kernels.
const KernelTable& active() noexcept;

}  // namespace stinespring::kernels
