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

// AVX2/FMA kernels. Each __m256d holds two complex numbers laid out as
// [re0, im0, re1, im1]; a broadcast scalar a times a vector b is
//   fmaddsub(a.re, b, a.im * swap(b)) = [ar*br - ai*bi, ar*bi + ai*br, ...].
// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "stinespring/kernels.hpp"

namespace stinespring::kernels {

namespace {

inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{0.0, 0.0});
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip.real() == 0.0 && aip.imag() == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const double* bp = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j + 4 <= n2; j += 4) {
        __m256d c0 = _mm256_loadu_pd(ci + 2 * j);
        __m256d c1 = _mm256_loadu_pd(ci + 2 * j + 4);
        c0 = _mm256_add_pd(c0, cmul_bcast(ar, ai, _mm256_loadu_pd(bp + 2 * j)));
        c1 = _mm256_add_pd(c1, cmul_bcast(ar, ai, _mm256_loadu_pd(bp + 2 * j + 4)));
        _mm256_storeu_pd(ci + 2 * j, c0);
        _mm256_storeu_pd(ci + 2 * j + 4, c1);
      }
      for (; j < n2; j += 2) {
        __m256d c0 = _mm256_loadu_pd(ci + 2 * j);
        c0 = _mm256_add_pd(c0, cmul_bcast(ar, ai, _mm256_loadu_pd(bp + 2 * j)));
        _mm256_storeu_pd(ci + 2 * j, c0);
      }
      if (j < n) {
        const double br = bp[2 * j];
        const double bi = bp[2 * j + 1];
        ci[2 * j] += aip.real() * br - aip.imag() * bi;
        ci[2 * j + 1] += aip.real() * bi + aip.imag() * br;
      }
    }
  }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    yv = _mm256_add_pd(yv, cmul_bcast(ar, ai, _mm256_loadu_pd(xd + 2 * i)));
    _mm256_storeu_pd(yd + 2 * i, yv);
  }
  if (i < len) {
    const double xr = xd[2 * i];
    const double xi = xd[2 * i + 1];
    yd[2 * i] += alpha.real() * xr - alpha.imag() * xi;
    yd[2 * i + 1] += alpha.real() * xi + alpha.imag() * xr;
  }
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t len) {
  // acc_rr accumulates [xr*yr, xi*yi, ...], acc_ri accumulates
  // [xr*yi, xi*yr, ...] (y swapped).
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_rr = _mm256_fmadd_pd(xv, yv, acc_rr);
    acc_ri = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_ri);
  }
  alignas(32) double rr[4];
  alignas(32) double ri[4];
  _mm256_store_pd(rr, acc_rr);
  _mm256_store_pd(ri, acc_ri);
  double re = (rr[0] + rr[1]) + (rr[2] + rr[3]);
  double im = (ri[0] - ri[1]) + (ri[2] - ri[3]);
  if (i < len) {
    re += xd[2 * i] * yd[2 * i] + xd[2 * i + 1] * yd[2 * i + 1];
    im += xd[2 * i] * yd[2 * i + 1] - xd[2 * i + 1] * yd[2 * i];
  }
  return {re, im};
}

const KernelTable kAvx2{"avx2", gemm_avx2, axpy_avx2, dotc_avx2};

}  // namespace

const KernelTable* avx2_table_unchecked() noexcept { return &kAvx2; }

}  // namespace stinespring::kernels
