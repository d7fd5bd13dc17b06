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
#include <cstdint>
#include <vector>

#include "stinespring/complex_matrix.hpp"
#include "stinespring/report.hpp"

namespace stinespring {

/// Ordered Kraus operators K_0..K_{l-1}, each dim_out x dim_in. Trace
/// preservation is not enforced here; see is_trace_preserving.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> ops);

  std::size_t dim_in() const noexcept { return ops_.front().cols(); }
  std::size_t dim_out() const noexcept { return ops_.front().rows(); }
  std::size_t size() const noexcept { return ops_.size(); }
  bool is_square() const noexcept { return dim_in() == dim_out(); }

  const ComplexMatrix& operator[](std::size_t j) const { return ops_[j]; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }

  auto begin() const noexcept { return ops_.begin(); }
  auto end() const noexcept { return ops_.end(); }

  /// sum_j K_j* K_j
  ComplexMatrix gram() const;
  /// The (l*dim_out) x dim_in column obtained by stacking the operators.
  ComplexMatrix stacked() const;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// Choi matrix sum_{a,b} |a><b| ⊗ Phi(|a><b|), input index slow.
struct ChoiMatrix {
  std::size_t dim_in;
  std::size_t dim_out;
  ComplexMatrix matrix;
};

inline constexpr double kDefaultRankTol = 1e-8;

/// sum_j K_j rho K_j*
ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& rho);
/// sum_j K_j* b K_j
ComplexMatrix apply_dual(const KrausSet& k, const ComplexMatrix& b);

/// Passes iff max|sum K_j*K_j - I| <= tol.
VerificationReport is_trace_preserving(const KrausSet& k, double tol);

ChoiMatrix choi(const KrausSet& k);

/// Eigenvalues are compared against rank_tol * (largest |eigenvalue|).
/// Throws NotCpError when an eigenvalue is below -rank_tol * scale.
KrausSet kraus_from_choi(const ChoiMatrix& c, double rank_tol = kDefaultRankTol);
std::size_t kraus_rank(const ChoiMatrix& c, double rank_tol = kDefaultRankTol);

/// Square Kraus set on C^n ⊗ C^m (n = dim_in, m = dim_out) realising
/// rho -> |e_p><e_p| ⊗ Phi(tr_2 rho), where tr_2 traces out the second factor.
KrausSet embed_rectangular(const KrausSet& k, std::size_t psi_prime_index);

/// Trace-preserving channel with ell Kraus operators on C^n, from the
/// orthonormalised columns of an (ell*n) x n complex Gaussian matrix.
KrausSet random_channel(std::size_t n, std::size_t ell, std::uint64_t seed);
/// Rectangular variant: ell operators of shape dim_out x dim_in,
/// ell <= dim_in * dim_out.
KrausSet random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t ell,
                        std::uint64_t seed);

}  // namespace stinespring
