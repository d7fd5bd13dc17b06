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

#include "stinespring/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "stinespring/error.hpp"
#include "stinespring/linalg.hpp"
#include "stinespring/random.hpp"

namespace stinespring {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

// U restricted to the columns {first_col + stride * h : h < n}, i.e. the
// image of x -> x ⊗ e_psi (tensor layout) or of the psi block (paper_block layout).
ComplexMatrix select_columns(const ComplexMatrix& u, std::size_t n,
                             std::size_t first_col, std::size_t stride) {
  ComplexMatrix w(u.rows(), n);
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t h = 0; h < n; ++h) w(r, h) = u(r, first_col + stride * h);
  return w;
}

ComplexMatrix sandwich(const ComplexMatrix& w, const ComplexMatrix& rho) {
  return w * rho * w.adjoint();
}

void require_state_dim(const ComplexMatrix& rho, std::size_t n, const char* op) {
  if (rho.rows() != n || rho.cols() != n) {
    throw ShapeError(std::string(op) + ": state must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
}

}  // namespace

VerificationReport check_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) throw ShapeError("check_unitary: matrix is not square");
  const ComplexMatrix id = ComplexMatrix::identity(u.rows());
  const ComplexMatrix u_adj = u.adjoint();
  const double left = max_abs_diff(u_adj * u, id);
  const double right = max_abs_diff(u * u_adj, id);
  return VerificationReport::make("unitary", std::max(left, right), tol);
}

ComplexMatrix conjugate_with_environment(const Dilation& d, const ComplexMatrix& rho) {
  require_state_dim(rho, d.sys_dim, "conjugate_with_environment");
  const Dilation t = to_tensor_layout(d);
  return sandwich(select_columns(t.unitary, t.sys_dim, t.psi_index, t.env_dim), rho);
}

VerificationReport verify_dilation(const KrausSet& k, const Dilation& d, int samples,
                                   std::uint64_t seed, double tol) {
  if (!k.is_square() || k.dim_in() != d.sys_dim ||
      d.unitary.rows() != d.sys_dim * d.env_dim || !d.unitary.is_square()) {
    throw ShapeError("verify_dilation: dilation does not match the channel dimensions");
  }
  if (samples < 1) throw DomainError("verify_dilation: samples must be positive");

  const Dilation t = to_tensor_layout(d);
  const std::size_t n = t.sys_dim;
  const ComplexMatrix w = select_columns(t.unitary, n, t.psi_index, t.env_dim);

  Rng rng(seed);
  double worst = 0.0;
  int worst_sample = 0;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix rho = random_density(n, rng);
    const ComplexMatrix reduced = partial_trace_env(sandwich(w, rho), n, t.env_dim);
    const double r = trace_norm(reduced - apply(k, rho));
    if (std::isnan(r) || r > worst) {
      worst = r;
      worst_sample = s;
    }
  }
  auto report = VerificationReport::make(
      "stinespring_identity/" + std::string(to_string(d.method)), worst, tol, samples);
  report.details["seed"] = std::to_string(seed);
  report.details["worst_sample"] = std::to_string(worst_sample);
  report.details["env_dim"] = std::to_string(d.env_dim);
  return report;
}

std::pair<VerificationReport, ComplexMatrix> check_catalyst(const Dilation& d,
                                                            const ComplexMatrix& rho,
                                                            double tol) {
  if (d.method != DilationMethod::sznagy_catalyst) {
    throw UnsupportedMethodError(std::string("check_catalyst: ") +
                                 std::string(to_string(d.method)) +
                                 " dilations have no catalyst qubit");
  }
  require_state_dim(rho, d.sys_dim, "check_catalyst");
  const std::size_t big = d.sys_dim * d.env_dim / 2;

  const ComplexMatrix sigma = conjugate_with_environment(d, rho);
  ComplexMatrix omega = partial_trace_env(sigma, big, 2);
  const ComplexMatrix target = kron(omega, ComplexMatrix::unit(2, 0, 0));
  const double residual = trace_norm(sigma - target);

  auto report = VerificationReport::make("catalyst", residual, tol);
  report.details["omega_trace"] = format_double(omega.trace().real());
  return {std::move(report), std::move(omega)};
}

VerificationReport check_involution(const Dilation& d, double tol) {
  if (d.method != DilationMethod::hellwig_kraus) {
    throw UnsupportedMethodError(std::string("check_involution: only Hellwig-Kraus "
                                             "dilations are involutions, got ") +
                                 std::string(to_string(d.method)));
  }
  const ComplexMatrix& u = d.unitary;
  const double self_adjoint = max_abs_diff(u, u.adjoint());
  const double involutive = max_abs_diff(u * u, ComplexMatrix::identity(u.rows()));
  auto report = VerificationReport::make("involution", std::max(self_adjoint, involutive), tol);
  report.details["self_adjoint_residual"] = format_double(self_adjoint);
  report.details["involution_residual"] = format_double(involutive);
  return report;
}

ComplexMatrix kraus_block_grid(const KrausSet& k, const ComplexMatrix& rho) {
  require_state_dim(rho, k.dim_in(), "kraus_block_grid");
  const std::size_t m = k.dim_out();
  ComplexMatrix b(k.size() * m, k.size() * m);
  for (std::size_t j = 0; j < k.size(); ++j) {
    const ComplexMatrix left = k[j] * rho;
    for (std::size_t jp = 0; jp < k.size(); ++jp)
      b.set_block(j * m, jp * m, left * k[jp].adjoint());
  }
  return b;
}

VerificationReport compare_constructions(const KrausSet& k, const ComplexMatrix& rho,
                                         double tol) {
  if (!k.is_square()) throw ShapeError("compare_constructions: channel must be square");
  require_state_dim(rho, k.dim_in(), "compare_constructions");
  const std::size_t n = k.dim_in();
  const std::size_t ell = k.size();
  const std::size_t j0 = 0;
  const ComplexMatrix grid = kraus_block_grid(k, rho);

  // Both unitaries stay in paper_block layout.
  const Dilation un = dilate_sznagy(k, j0);
  ComplexMatrix expected_n(2 * ell * n, 2 * ell * n);
  expected_n.set_block(0, 0, grid);
  const ComplexMatrix got_n = sandwich(select_columns(un.unitary, n, j0 * n, 1), rho);
  const double residual_n = trace_norm(got_n - expected_n);

  const Dilation uk = dilate_hellwig_kraus(k);
  ComplexMatrix expected_k((ell + 1) * n, (ell + 1) * n);
  expected_k.set_block(n, n, grid);
  const ComplexMatrix got_k = sandwich(select_columns(uk.unitary, n, 0, 1), rho);
  const double residual_k = trace_norm(got_k - expected_k);

  auto report = VerificationReport::make("compare_constructions",
                                         std::max(residual_n, residual_k), tol);
  report.details["catalyst_residual"] = format_double(residual_n);
  report.details["hellwig_kraus_residual"] = format_double(residual_k);
  return report;
}

}  // namespace stinespring
