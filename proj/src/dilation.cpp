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

#include "stinespring/dilation.hpp"

#include <algorithm>
#include <string>

#include "format.hpp"
#include "stinespring/error.hpp"
#include "stinespring/linalg.hpp"

namespace stinespring {

namespace {

void require_dilatable(const KrausSet& k, double tp_tol, const char* op) {
  if (!k.is_square()) {
    throw ShapeError(std::string(op) + ": channel maps " + std::to_string(k.dim_in()) +
                     " to " + std::to_string(k.dim_out()) +
                     " dimensions; embed it with embed_rectangular first");
  }
  const auto tp = is_trace_preserving(k, tp_tol);
  if (!tp.passed) {
    throw DomainError(std::string(op) +
                      ": Kraus set is not trace-preserving (residual " +
                      detail::fmt(tp.residual) + ", tolerance " +
                      detail::fmt(tp_tol) + ")");
  }
}

}  // namespace

std::string_view to_string(DilationMethod m) noexcept {
  switch (m) {
    case DilationMethod::finite: return "finite";
    case DilationMethod::hellwig_kraus: return "hellwig_kraus";
    case DilationMethod::sznagy_catalyst: return "sznagy_catalyst";
  }
  return "unknown";
}

std::string_view to_string(Layout l) noexcept {
  return l == Layout::tensor ? "tensor" : "paper_block";
}

ComplexMatrix sznagy_dilation(const ComplexMatrix& t, double contraction_tol) {
  if (!t.is_square()) throw ShapeError("sznagy_dilation: contraction must be square");
  const double norm = spectral_norm(t);
  if (norm > 1.0 + contraction_tol) {
    throw DomainError("sznagy_dilation: operator norm " + detail::fmt(norm) +
                      " exceeds 1");
  }
  const std::size_t m = t.rows();
  const ComplexMatrix id = ComplexMatrix::identity(m);
  const ComplexMatrix t_adj = t.adjoint();
  // Defect eigenvalues at rounding level are exact zeros; the two roots must
  // agree on which directions are isometric.
  const double zero_tol = 32.0 * static_cast<double>(m) * kMachineEps;

  ComplexMatrix u(2 * m, 2 * m);
  u.set_block(0, 0, t);
  u.set_block(0, m, psd_sqrt(id - t * t_adj, zero_tol));
  u.set_block(m, 0, psd_sqrt(id - t_adj * t, zero_tol));
  u.set_block(m, m, -t_adj);
  return u;
}

ComplexMatrix extend_isometry_catalyst(const ComplexMatrix& v0,
                                       const ComplexMatrix& p_m, double tol) {
  if (!v0.is_square() || !p_m.is_square() || v0.rows() != p_m.rows()) {
    throw ShapeError("extend_isometry_catalyst: v0 and p_m must be square of equal size");
  }
  const std::size_t n = v0.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix v0_adj = v0.adjoint();
  const ComplexMatrix v0p = v0 * p_m;

  auto fail = [](const char* what, double residual) {
    throw DomainError(std::string("extend_isometry_catalyst: ") + what + " (residual " +
                      detail::fmt(residual) + ")");
  };
  if (double r = max_abs_diff(p_m * p_m, p_m); !(r <= tol)) fail("p_m is not idempotent", r);
  if (double r = max_abs_diff(p_m, p_m.adjoint()); !(r <= tol)) fail("p_m is not self-adjoint", r);
  if (double r = max_abs_diff(v0p, v0); !(r <= tol)) fail("v0 does not vanish off range(p_m)", r);
  if (double r = max_abs_diff(v0_adj * v0, p_m); !(r <= tol)) fail("v0 is not isometric on range(p_m)", r);

  ComplexMatrix u(2 * n, 2 * n);
  u.set_block(0, 0, v0p);
  u.set_block(0, n, id - v0 * v0_adj);
  u.set_block(n, 0, id - p_m);
  u.set_block(n, n, -v0_adj);
  return u;
}

Dilation dilate_finite(const KrausSet& k, double tp_tol) {
  require_dilatable(k, tp_tol, "dilate_finite");
  Dilation d;
  d.method = DilationMethod::finite;
  d.unitary = complete_isometry_to_unitary(k.stacked(), tp_tol);
  d.sys_dim = k.dim_in();
  d.env_dim = k.size();
  d.psi_index = 0;
  d.catalyst_qubit = false;
  d.layout = Layout::paper_block;
  return d;
}

Dilation dilate_hellwig_kraus(const KrausSet& k, double tp_tol) {
  require_dilatable(k, tp_tol, "dilate_hellwig_kraus");
  const std::size_t n = k.dim_in();
  const ComplexMatrix a = k.stacked();
  const ComplexMatrix a_adj = a.adjoint();

  ComplexMatrix u((k.size() + 1) * n, (k.size() + 1) * n);
  u.set_block(0, n, a_adj);
  u.set_block(n, 0, a);
  u.set_block(n, n, a * a_adj - ComplexMatrix::identity(k.size() * n));

  Dilation d;
  d.method = DilationMethod::hellwig_kraus;
  d.unitary = std::move(u);
  d.sys_dim = n;
  d.env_dim = k.size() + 1;
  d.psi_index = 0;
  d.catalyst_qubit = false;
  d.layout = Layout::paper_block;
  return d;
}

Dilation dilate_sznagy(const KrausSet& k, std::size_t j0, double tp_tol) {
  require_dilatable(k, tp_tol, "dilate_sznagy");
  if (j0 >= k.size()) {
    throw DomainError("dilate_sznagy: j0 = " + std::to_string(j0) +
                      " out of range for " + std::to_string(k.size()) +
                      " Kraus operators");
  }
  const std::size_t n = k.dim_in();
  const std::size_t big = k.size() * n;

  // On H ⊗ l2(J) with j labelling n x n blocks: V0 has block (j, j0) = K_j,
  // P_M is the identity on block j0.
  ComplexMatrix v0(big, big);
  ComplexMatrix p_m(big, big);
  for (std::size_t j = 0; j < k.size(); ++j) v0.set_block(j * n, j0 * n, k[j]);
  for (std::size_t h = 0; h < n; ++h) p_m(j0 * n + h, j0 * n + h) = 1.0;

  Dilation d;
  d.method = DilationMethod::sznagy_catalyst;
  d.unitary = extend_isometry_catalyst(v0, p_m, std::max(tp_tol, 1e-10));
  d.sys_dim = n;
  d.env_dim = 2 * k.size();
  d.psi_index = 2 * j0;
  d.catalyst_qubit = true;
  d.layout = Layout::paper_block;
  return d;
}

std::size_t paper_to_tensor_index(const Dilation& d, std::size_t i) {
  const std::size_t n = d.sys_dim;
  const std::size_t e = i / n;
  const std::size_t h = i % n;
  std::size_t env = e;
  if (d.method == DilationMethod::sznagy_catalyst) {
    const std::size_t ell = d.env_dim / 2;
    env = (e % ell) * 2 + e / ell;
  }
  return h * d.env_dim + env;
}

Dilation to_tensor_layout(const Dilation& d) {
  if (d.layout == Layout::tensor) return d;
  const std::size_t dim = d.unitary.rows();
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = paper_to_tensor_index(d, i);

  Dilation out = d;
  out.layout = Layout::tensor;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out.unitary(perm[r], perm[c]) = d.unitary(r, c);
  return out;
}

}  // namespace stinespring
