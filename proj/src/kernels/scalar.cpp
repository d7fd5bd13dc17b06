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

// Reference kernels. Complex products are written out by hand so the
// compiler never routes them through the Annex G NaN-recovery path.

#include "stinespring/kernels.hpp"

#include <algorithm>

namespace stinespring::kernels {

namespace {

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      const double ar = aip.real();
      const double ai = aip.imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const cplx* bp = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = bp[j].real();
        const double bi = bp[j].imag();
        ci[j] = cplx(ci[j].real() + (ar * br - ai * bi),
                     ci[j].imag() + (ar * bi + ai * br));
      }
    }
  }
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx(y[i].real() + (ar * xr - ai * xi),
                y[i].imag() + (ar * xi + ai * xr));
  }
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t len) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    const double yr = y[i].real();
    const double yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

const KernelTable kScalar{"scalar", gemm_scalar, axpy_scalar, dotc_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace stinespring::kernels
