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
#include <utility>

#include "stinespring/channel.hpp"
#include "stinespring/dilation.hpp"
#include "stinespring/report.hpp"

namespace stinespring {

inline constexpr double kDefaultVerifyTol = 1e-9;
inline constexpr int kDefaultSamples = 20;

/// residual = max(|u*u - I|_max, |uu* - I|_max)
VerificationReport check_unitary(const ComplexMatrix& u, double tol);

/// U (rho ⊗ |psi><psi|) U* for a tensor-layout dilation. Only the columns of
/// U that meet the support of rho ⊗ |psi><psi| are touched.
ComplexMatrix conjugate_with_environment(const Dilation& d,
                                         const ComplexMatrix& rho);

/// Checks tr_env(U (rho ⊗ |psi><psi|) U*) == Phi(rho) in trace norm over
/// `samples` random density matrices drawn from `seed`.
VerificationReport verify_dilation(const KrausSet& k, const Dilation& d,
                                   int samples = kDefaultSamples,
                                   std::uint64_t seed = 0,
                                   double tol = kDefaultVerifyTol);

/// For a catalyst dilation: sigma = U (rho ⊗ |e_j0><e_j0| ⊗ |e_1><e_1|) U*
/// must equal omega ⊗ |e_1><e_1|. Returns the report and omega, an operator
/// on H ⊗ l2(J) in tensor order.
std::pair<VerificationReport, ComplexMatrix> check_catalyst(
    const Dilation& d, const ComplexMatrix& rho, double tol = kDefaultVerifyTol);

/// residual = max(|U - U*|_max, |U^2 - I|_max) for a Hellwig-Kraus dilation.
VerificationReport check_involution(const Dilation& d, double tol = 1e-10);

/// B = sum_{j,j'} K_j rho K_j'* ⊗ |e_j><e_j'| laid out with j as the block
/// index (block (j, j') is K_j rho K_j'*).
ComplexMatrix kraus_block_grid(const KrausSet& k, const ComplexMatrix& rho);

/// Cross-checks the catalyst and Hellwig-Kraus unitaries on rho:
///   U_N (rho ⊗ e_j0 ⊗ e_1) U_N* = B ⊗ |e_1><e_1|
///   U_K (rho ⊗ e_s) U_K*         = 0_n ⊕ B
/// residual is the larger trace-norm mismatch.
VerificationReport compare_constructions(const KrausSet& k,
                                         const ComplexMatrix& rho,
                                         double tol = kDefaultVerifyTol);

}  // namespace stinespring
