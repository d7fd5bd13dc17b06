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
#include <string_view>

#include "stinespring/channel.hpp"
#include "stinespring/complex_matrix.hpp"

namespace stinespring {

enum class DilationMethod { finite, hellwig_kraus, sznagy_catalyst };

/// Basis ordering of a dilation unitary.
///
/// tensor: index = h * env_dim + e, environment fastest. For the catalyst
///   construction the environment itself is l2(J) ⊗ C^2 with the qubit
///   fastest, e = j * 2 + q.
/// paper_block: the environment labels whole n x n blocks, index = e * n + h.
///   The block order is j = 0..l-1 (finite), (s, j = 0..l-1) with s first
///   (hellwig_kraus), and (q, j) with the qubit slowest (sznagy_catalyst).
enum class Layout { tensor, paper_block };

std::string_view to_string(DilationMethod m) noexcept;
std::string_view to_string(Layout l) noexcept;

/// A Stinespring form U of a channel on C^sys_dim. The environment starts in
/// the basis vector psi_index, which is always given in tensor-layout
/// environment coordinates (for the catalyst construction, 2 * j0).
struct Dilation {
  DilationMethod method = DilationMethod::finite;
  ComplexMatrix unitary;
  std::size_t sys_dim = 1;
  std::size_t env_dim = 1;
  std::size_t psi_index = 0;
  bool catalyst_qubit = false;
  Layout layout = Layout::paper_block;

  /// Number of Kraus operators the dilation was built from.
  std::size_t kraus_count() const noexcept {
    switch (method) {
      case DilationMethod::finite: return env_dim;
      case DilationMethod::hellwig_kraus: return env_dim - 1;
      case DilationMethod::sznagy_catalyst: return env_dim / 2;
    }
    return env_dim;
  }
  std::size_t j0() const noexcept {
    return method == DilationMethod::sznagy_catalyst ? psi_index / 2 : 0;
  }
};

inline constexpr double kDefaultTpTol = 1e-8;

/// [[T, sqrt(I - TT*)], [sqrt(I - T*T), -T*]] for a square contraction T.
/// The top-left block is a bitwise copy of t.
ComplexMatrix sznagy_dilation(const ComplexMatrix& t,
                              double contraction_tol = 1e-10);

/// [[V0 P, I - V0 V0*], [I - P, -V0*]], the unitary on H ⊕ H extending an
/// isometry V0 defined on range(P) (given as an n x n matrix vanishing on
/// range(P)-perp).
ComplexMatrix extend_isometry_catalyst(const ComplexMatrix& v0,
                                       const ComplexMatrix& p_m,
                                       double tol = 1e-10);

/// Stacks the Kraus operators into the first block column and completes the
/// rest with complete_isometry_to_unitary. env_dim = l.
Dilation dilate_finite(const KrausSet& k, double tp_tol = kDefaultTpTol);

/// Self-adjoint involution [[0, A*], [A, AA* - I]] with A the stacked Kraus
/// column. env_dim = l + 1, environment starts in the extra slot s.
Dilation dilate_hellwig_kraus(const KrausSet& k, double tp_tol = kDefaultTpTol);

/// Extends V0 = sum_j K_j ⊗ |e_j><e_j0| from H ⊗ e_j0 to a unitary on
/// H ⊗ l2(J) ⊗ C^2. env_dim = 2l, environment starts in e_j0 ⊗ e_1.
Dilation dilate_sznagy(const KrausSet& k, std::size_t j0 = 0,
                       double tp_tol = kDefaultTpTol);

/// Position of paper_block index `i` in the tensor layout.
std::size_t paper_to_tensor_index(const Dilation& d, std::size_t i);

/// Re-expresses a paper_block dilation in the tensor layout (returns d
/// unchanged when it already is).
Dilation to_tensor_layout(const Dilation& d);

}  // namespace stinespring
