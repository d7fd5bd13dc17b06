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

#include <cstddef>
#include <vector>

#include "stinespring/complex_matrix.hpp"

namespace stinespring {

inline constexpr double kMachineEps = 2.220446049250313e-16;

/// Cap on the row count produced by kron (and hence on any tensor-product
/// space built by the library). Defaults to 2^16.
std::size_t max_dimension() noexcept;
void set_max_dimension(std::size_t rows) noexcept;

/// Kronecker product. Entry (ia*b.rows + ib, ja*b.cols + jb) is
/// a(ia, ja) * b(ib, jb), so the right factor is the fast index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace over the environment factor of a (sys ⊗ env) operator,
/// environment index fastest.
ComplexMatrix partial_trace_env(const ComplexMatrix& m, std::size_t sys_dim,
                                std::size_t env_dim);
/// Partial trace over the leading (slow) factor.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t first_dim,
                                  std::size_t second_dim);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Eigendecomposition of a Hermitian matrix. Throws DomainError when
/// max|m - m*| exceeds sym_tol. Only the lower triangle is read once the
/// symmetry check passes.
HermitianEigen hermitian_eig(const ComplexMatrix& m, double sym_tol = 1e-10);

/// Sum of singular values, computed from the eigenvalues of the Hermitian
/// dilation [[0, m], [m*, 0]] (they are ± the singular values).
double trace_norm(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues at or
/// below zero_tol (including negative rounding noise) are treated as exact
/// zeros. A negative zero_tol selects 32 * n * eps * (spectral radius).
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double zero_tol = -1.0);

/// Extends a matrix with orthonormal columns to a unitary. The first v.cols()
/// columns of the result are bitwise copies of v. The remaining columns come
/// from projecting e_0, e_1, ... onto the orthogonal complement of everything
/// accepted so far (two Gram-Schmidt passes) and keeping candidates whose
/// norm is at least 1e-8.
ComplexMatrix complete_isometry_to_unitary(const ComplexMatrix& v,
                                           double ortho_tol = 1e-8);

/// Orthonormalises the columns of a tall matrix in order (Gram-Schmidt with
/// re-orthogonalisation). Throws NumericalError on rank deficiency.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& m);

/// max|m*m - I|
double isometry_residual(const ComplexMatrix& m);

/// (m + m*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace stinespring
