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

#include "stinespring/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "stinespring/error.hpp"
#include "stinespring/linalg.hpp"
#include "stinespring/random.hpp"

namespace stinespring {

namespace {

void require_operator(const ComplexMatrix& m, std::size_t dim, const char* op) {
  if (m.rows() != dim || m.cols() != dim) {
    throw ShapeError(std::string(op) + ": expected a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " operator, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

struct ChoiSpectrum {
  HermitianEigen eig;
  double threshold;
};

ChoiSpectrum analyse_choi(const ChoiMatrix& c, double rank_tol) {
  const std::size_t dim = c.dim_in * c.dim_out;
  require_operator(c.matrix, dim, "choi");
  ChoiSpectrum s{hermitian_eig(c.matrix, 1e-10), 0.0};
  double scale = 0.0;
  for (double v : s.eig.values) scale = std::max(scale, std::abs(v));
  s.threshold = rank_tol * scale;
  const double lowest = s.eig.values.back();
  if (lowest < -s.threshold) {
    throw NotCpError("Choi matrix has eigenvalue " + detail::fmt(lowest) +
                     " below -" + detail::fmt(s.threshold));
  }
  return s;
}

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ShapeError("KrausSet needs at least one operator");
  for (const auto& k : ops_) {
    if (k.rows() != ops_.front().rows() || k.cols() != ops_.front().cols()) {
      throw ShapeError("Kraus operators must share one shape");
    }
  }
}

ComplexMatrix KrausSet::gram() const {
  ComplexMatrix g(dim_in(), dim_in());
  for (const auto& k : ops_) g += k.adjoint() * k;
  return g;
}

ComplexMatrix KrausSet::stacked() const {
  const std::size_t m = dim_out();
  ComplexMatrix a(size() * m, dim_in());
  for (std::size_t j = 0; j < size(); ++j) a.set_block(j * m, 0, ops_[j]);
  return a;
}

ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& rho) {
  require_operator(rho, k.dim_in(), "apply");
  ComplexMatrix out(k.dim_out(), k.dim_out());
  for (const auto& op : k) out += op * rho * op.adjoint();
  return out;
}

ComplexMatrix apply_dual(const KrausSet& k, const ComplexMatrix& b) {
  require_operator(b, k.dim_out(), "apply_dual");
  ComplexMatrix out(k.dim_in(), k.dim_in());
  for (const auto& op : k) out += op.adjoint() * b * op;
  return out;
}

VerificationReport is_trace_preserving(const KrausSet& k, double tol) {
  const double residual = max_abs_diff(k.gram(), ComplexMatrix::identity(k.dim_in()));
  auto r = VerificationReport::make("trace_preserving", residual, tol);
  r.details["kraus_count"] = std::to_string(k.size());
  return r;
}

ChoiMatrix choi(const KrausSet& k) {
  const std::size_t n = k.dim_in();
  const std::size_t m = k.dim_out();
  ChoiMatrix c{n, m, ComplexMatrix(n * m, n * m)};
  // C = sum_j vec(K_j) vec(K_j)*, vec(K)[a*m + p] = K(p, a).
  std::vector<cplx> v(n * m);
  for (const auto& op : k) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t p = 0; p < m; ++p) v[a * m + p] = op(p, a);
    for (std::size_t r = 0; r < n * m; ++r) {
      if (v[r] == cplx{0.0, 0.0}) continue;
      for (std::size_t s = 0; s < n * m; ++s) c.matrix(r, s) += v[r] * std::conj(v[s]);
    }
  }
  return c;
}

KrausSet kraus_from_choi(const ChoiMatrix& c, double rank_tol) {
  const ChoiSpectrum s = analyse_choi(c, rank_tol);
  const std::size_t n = c.dim_in;
  const std::size_t m = c.dim_out;
  std::vector<ComplexMatrix> ops;
  for (std::size_t idx = 0; idx < s.eig.values.size(); ++idx) {
    const double lambda = s.eig.values[idx];
    if (!(lambda > s.threshold)) break;
    const double w = std::sqrt(lambda);
    ComplexMatrix op(m, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t p = 0; p < m; ++p) op(p, a) = w * s.eig.vectors(a * m + p, idx);
    ops.push_back(std::move(op));
  }
  if (ops.empty()) throw DomainError("kraus_from_choi: Choi matrix is zero");
  return KrausSet(std::move(ops));
}

std::size_t kraus_rank(const ChoiMatrix& c, double rank_tol) {
  const ChoiSpectrum s = analyse_choi(c, rank_tol);
  return static_cast<std::size_t>(
      std::count_if(s.eig.values.begin(), s.eig.values.end(),
                    [&](double v) { return v > s.threshold; }));
}

KrausSet embed_rectangular(const KrausSet& k, std::size_t psi_prime_index) {
  const std::size_t n = k.dim_in();
  const std::size_t m = k.dim_out();
  if (psi_prime_index >= n) {
    throw DomainError("embed_rectangular: psi' index " + std::to_string(psi_prime_index) +
                      " out of range for dimension " + std::to_string(n));
  }
  // L_{j,a} (x ⊗ y) = <e_a, y> e_psi' ⊗ K_j x
  std::vector<ComplexMatrix> ops;
  ops.reserve(k.size() * m);
  for (const auto& op : k) {
    for (std::size_t a = 0; a < m; ++a) {
      ComplexMatrix l(n * m, n * m);
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t h = 0; h < n; ++h) l(psi_prime_index * m + q, h * m + a) = op(q, h);
      ops.push_back(std::move(l));
    }
  }
  return KrausSet(std::move(ops));
}

KrausSet random_channel(std::size_t n, std::size_t ell, std::uint64_t seed) {
  return random_channel(n, n, ell, seed);
}

KrausSet random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t ell,
                        std::uint64_t seed) {
  if (dim_in == 0 || dim_out == 0 || ell == 0) {
    throw DomainError("random_channel: dimensions and ell must be positive");
  }
  if (ell > dim_in * dim_out) {
    throw DomainError("random_channel: ell = " + std::to_string(ell) +
                      " exceeds the maximal Kraus rank " +
                      std::to_string(dim_in * dim_out));
  }
  Rng rng(seed);
  const ComplexMatrix v =
      orthonormalize_columns(random_gaussian(ell * dim_out, dim_in, rng));
  std::vector<ComplexMatrix> ops;
  ops.reserve(ell);
  for (std::size_t j = 0; j < ell; ++j) ops.push_back(v.block(j * dim_out, 0, dim_out, dim_in));
  return KrausSet(std::move(ops));
}

}  // namespace stinespring
