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

#include "stinespring/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "format.hpp"
#include "stinespring/error.hpp"
#include "stinespring/kernels.hpp"

namespace stinespring {

namespace {

std::atomic<std::size_t> g_max_dimension{std::size_t{1} << 16};

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw ShapeError(std::string(op) + ": expected a square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

using RowMajorXcd =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Projects w onto the orthogonal complement of `basis` (two classical
// Gram-Schmidt passes) and returns the remaining norm.
double project_out(std::vector<cplx>& w, const std::vector<std::vector<cplx>>& basis) {
  const auto& k = kernels::active();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const cplx overlap = k.dotc(b.data(), w.data(), w.size());
      k.axpy(-overlap, b.data(), w.data(), w.size());
    }
  }
  return std::sqrt(std::real(k.dotc(w.data(), w.data(), w.size())));
}

}  // namespace

std::size_t max_dimension() noexcept { return g_max_dimension.load(); }
void set_max_dimension(std::size_t rows) noexcept { g_max_dimension.store(rows); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t limit = max_dimension();
  if (a.rows() > limit / b.rows() || a.cols() > limit / b.cols()) {
    throw SizeError("kron: result " + std::to_string(a.rows()) + "*" +
                    std::to_string(b.rows()) + " x " + std::to_string(a.cols()) +
                    "*" + std::to_string(b.cols()) + " exceeds the limit of " +
                    std::to_string(limit));
  }
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx s = a(ia, ja);
      for (std::size_t ib = 0; ib < br; ++ib) {
        for (std::size_t jb = 0; jb < bc; ++jb) {
          out(ia * br + ib, ja * bc + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace_env(const ComplexMatrix& m, std::size_t sys_dim,
                                std::size_t env_dim) {
  if (!m.is_square() || m.rows() != sys_dim * env_dim) {
    throw ShapeError("partial_trace_env: " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " is not " +
                     std::to_string(sys_dim) + "*" + std::to_string(env_dim) +
                     " square");
  }
  ComplexMatrix out(sys_dim, sys_dim);
  for (std::size_t i = 0; i < sys_dim; ++i) {
    for (std::size_t j = 0; j < sys_dim; ++j) {
      cplx s = 0.0;
      for (std::size_t e = 0; e < env_dim; ++e) s += m(i * env_dim + e, j * env_dim + e);
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t first_dim,
                                  std::size_t second_dim) {
  if (!m.is_square() || m.rows() != first_dim * second_dim) {
    throw ShapeError("partial_trace_first: dimension mismatch");
  }
  ComplexMatrix out(second_dim, second_dim);
  for (std::size_t f = 0; f < first_dim; ++f)
    for (std::size_t i = 0; i < second_dim; ++i)
      for (std::size_t j = 0; j < second_dim; ++j)
        out(i, j) += m(f * second_dim + i, f * second_dim + j);
  return out;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m, double sym_tol) {
  require_square(m, "hermitian_eig");
  const std::size_t n = m.rows();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  if (!(asym <= sym_tol)) {
    throw DomainError("hermitian_eig: symmetry residual " + detail::fmt(asym) +
                      " exceeds " + detail::fmt(sym_tol));
  }

  Eigen::Map<const RowMajorXcd> view(m.data().data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver did not converge");
  }

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  // Eigen sorts ascending.
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(n - 1 - k);
    out.values[k] = vals(src);
    for (std::size_t r = 0; r < n; ++r)
      out.vectors(r, k) = vecs(static_cast<Eigen::Index>(r), src);
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  const std::size_t n = m.rows();
  double sum = 0.0;
  if (m == m.adjoint()) {
    for (double v : hermitian_eig(m, 0.0).values) sum += std::abs(v);
    return sum;
  }
  ComplexMatrix h(2 * n, 2 * n);
  h.set_block(0, n, m);
  h.set_block(n, 0, m.adjoint());
  for (double v : hermitian_eig(h, 0.0).values) sum += std::abs(v);
  return 0.5 * sum;
}

double spectral_norm(const ComplexMatrix& m) {
  const ComplexMatrix gram = m.adjoint() * m;
  const double top = hermitian_eig(hermitian_part(gram), 0.0).values.front();
  return std::sqrt(std::max(top, 0.0));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double zero_tol) {
  require_square(m, "psd_sqrt");
  const std::size_t n = m.rows();
  const HermitianEigen eig = hermitian_eig(hermitian_part(m), 0.0);
  if (zero_tol < 0.0) {
    double scale = 0.0;
    for (double v : eig.values) scale = std::max(scale, std::abs(v));
    zero_tol = 32.0 * static_cast<double>(n) * kMachineEps * scale;
  }
  // V diag(sqrt(lambda)) V*, built as (V sqrt(L)) V*.
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    const double root = lambda > zero_tol ? std::sqrt(lambda) : 0.0;
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= root;
  }
  return hermitian_part(scaled * eig.vectors.adjoint());
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    throw ShapeError("orthonormalize_columns: more columns than rows");
  }
  std::vector<std::vector<cplx>> basis;
  basis.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<cplx> w = m.column(c);
    double before = 0.0;
    for (const auto& z : w) before += std::norm(z);
    before = std::sqrt(before);
    const double norm = project_out(w, basis);
    if (!(norm > 1e-12 * before) || norm == 0.0) {
      throw NumericalError("orthonormalize_columns: column " + std::to_string(c) +
                           " is linearly dependent on its predecessors");
    }
    for (auto& z : w) z /= norm;
    basis.push_back(std::move(w));
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = basis[c][r];
  return out;
}

ComplexMatrix complete_isometry_to_unitary(const ComplexMatrix& v,
                                           double ortho_tol) {
  const std::size_t m = v.rows();
  const std::size_t k = v.cols();
  if (m < k) {
    throw DomainError("complete_isometry_to_unitary: " + std::to_string(m) + "x" +
                      std::to_string(k) + " cannot have orthonormal columns");
  }
  const double residual = isometry_residual(v);
  if (!(residual <= ortho_tol)) {
    throw DomainError("complete_isometry_to_unitary: columns are not orthonormal "
                      "(residual " + detail::fmt(residual) + ")");
  }

  std::vector<std::vector<cplx>> basis;
  basis.reserve(m);
  for (std::size_t c = 0; c < k; ++c) basis.push_back(v.column(c));

  for (std::size_t i = 0; i < m && basis.size() < m; ++i) {
    std::vector<cplx> w(m, cplx{0.0, 0.0});
    w[i] = 1.0;
    const double norm = project_out(w, basis);
    if (norm < 1e-8) continue;
    for (auto& z : w) z /= norm;
    basis.push_back(std::move(w));
  }
  if (basis.size() != m) {
    throw NumericalError("complete_isometry_to_unitary: found only " +
                         std::to_string(basis.size() - k) + " of " +
                         std::to_string(m - k) + " complement vectors");
  }

  ComplexMatrix u(m, m);
  u.set_block(0, 0, v);
  for (std::size_t c = k; c < m; ++c)
    for (std::size_t r = 0; r < m; ++r) u(r, c) = basis[c][r];
  return u;
}

double isometry_residual(const ComplexMatrix& m) {
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.cols()));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  require_square(m, "hermitian_part");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

}  // namespace stinespring
