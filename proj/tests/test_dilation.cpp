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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "stinespring/dilation.hpp"
#include "stinespring/error.hpp"
#include "stinespring/linalg.hpp"
#include "stinespring/random.hpp"
#include "stinespring/verify.hpp"
#include "test_helpers.hpp"

using namespace stinespring;
using testing::amplitude_damping;
using testing::identity_channel;

namespace {

double unitarity_defect(const ComplexMatrix& u) {
  const auto id = ComplexMatrix::identity(u.rows());
  return std::max(max_abs_diff(u.adjoint() * u, id), max_abs_diff(u * u.adjoint(), id));
}

double unitarity_bound(const Dilation& d) {
  return 10.0 * static_cast<double>(d.sys_dim * d.env_dim) * kMachineEps;
}

// Independent restatement of the documented index maps.
std::size_t tensor_index(const Dilation& d, std::size_t i) {
  const std::size_t n = d.sys_dim;
  const std::size_t e_block = i / n;
  const std::size_t h = i % n;
  std::size_t e = e_block;
  if (d.method == DilationMethod::sznagy_catalyst) {
    const std::size_t ell = d.env_dim / 2;
    e = (e_block % ell) * 2 + e_block / ell;
  }
  return h * d.env_dim + e;
}

ComplexMatrix permutation_matrix(const Dilation& d) {
  const std::size_t dim = d.unitary.rows();
  ComplexMatrix p(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) p(tensor_index(d, i), i) = 1.0;
  return p;
}

std::vector<cplx> apply_vec(const ComplexMatrix& m, const std::vector<cplx>& x) {
  std::vector<cplx> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

}  // namespace

TEST_SUITE("sznagy_dilation") {
  TEST_CASE("scalar examples") {
    CHECK(sznagy_dilation(ComplexMatrix{{0.0}}) == ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(sznagy_dilation(ComplexMatrix{{1.0}}) == ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
    const auto u = sznagy_dilation(ComplexMatrix{{0.6}});
    const double d = std::sqrt(1.0 - 0.6 * 0.6);
    CHECK(max_abs_diff(u, ComplexMatrix{{0.6, d}, {d, -0.6}}) <= 2 * kMachineEps);
    CHECK(std::abs(u(0, 1) - 0.8) <= 2 * kMachineEps);
    CHECK(check_unitary(u, 1e-14).passed);
  }

  TEST_CASE("rejects non-contractions and non-square input") {
    CHECK_THROWS_AS(sznagy_dilation(ComplexMatrix{{1.1}}), DomainError);
    CHECK_THROWS_AS(sznagy_dilation(ComplexMatrix(2, 3)), ShapeError);
  }

  TEST_CASE("random contractions") {
    Rng rng(11);
    for (std::size_t m = 1; m <= 8; ++m) {
      auto t = random_gaussian(m, m, rng);
      t *= 0.9 / spectral_norm(t);
      const auto u = sznagy_dilation(t);
      CHECK(u.block(0, 0, m, m) == t);
      CHECK(unitarity_defect(u) <= 1e-10);
      CHECK(max_abs_diff(u.block(m, m, m, m), -1.0 * t.adjoint()) == 0.0);
    }
  }

  TEST_CASE("isometric input has zero bottom-left defect") {
    Rng rng(12);
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto t = random_unitary(m, rng);
      const auto u = sznagy_dilation(t);
      CHECK(max_abs(u.block(m, 0, m, m)) <= 1e-12);
      CHECK(unitarity_defect(u) <= 1e-10);
    }
  }

  TEST_CASE("rank-deficient contraction of norm one") {
    const auto t = ComplexMatrix::diagonal({1.0, 0.5, 0.0});
    const auto u = sznagy_dilation(t);
    CHECK(unitarity_defect(u) <= 1e-12);
  }
}

TEST_SUITE("extend_isometry_catalyst") {
  TEST_CASE("full-space isometry") {
    const auto id = ComplexMatrix::identity(2);
    ComplexMatrix expected(4, 4);
    expected.set_block(0, 0, id);
    expected.set_block(2, 2, -1.0 * id);
    CHECK(extend_isometry_catalyst(id, id) == expected);
  }

  TEST_CASE("trivial subspace gives the swap") {
    const auto z = ComplexMatrix::zeros(2, 2);
    ComplexMatrix expected(4, 4);
    expected.set_block(0, 2, ComplexMatrix::identity(2));
    expected.set_block(2, 0, ComplexMatrix::identity(2));
    CHECK(extend_isometry_catalyst(z, z) == expected);
  }

  TEST_CASE("single-vector subspace") {
    const auto p = ComplexMatrix::diagonal({1.0, 0.0});
    const auto v0 = ComplexMatrix::unit(2, 1, 0);
    const ComplexMatrix expected{{0.0, 0.0, 1.0, 0.0},
                                 {1.0, 0.0, 0.0, 0.0},
                                 {0.0, 0.0, 0.0, -1.0},
                                 {0.0, 1.0, 0.0, 0.0}};
    const auto u = extend_isometry_catalyst(v0, p);
    CHECK(u == expected);
    CHECK(unitarity_defect(u) == 0.0);
    const auto image = apply_vec(u, {1.0, 0.0, 0.0, 0.0});
    CHECK(image == std::vector<cplx>{0.0, 1.0, 0.0, 0.0});
  }

  TEST_CASE("random projectors and isometries") {
    Rng rng(13);
    for (std::size_t n = 1; n <= 8; ++n)
      for (std::size_t r = 0; r <= n; ++r) {
        const auto basis = random_unitary(n, rng);
        const auto target = random_unitary(n, rng);
        ComplexMatrix p(n, n), v0(n, n);
        for (std::size_t c = 0; c < r; ++c) {
          const auto b = basis.column(c);
          const auto t = target.column(c);
          p += ComplexMatrix::outer(b, b);
          v0 += ComplexMatrix::outer(t, b);
        }
        const auto u = extend_isometry_catalyst(v0, p);
        CHECK(unitarity_defect(u) <= 1e-10);
        for (std::size_t c = 0; c < r; ++c) {
          auto x = basis.column(c);
          x.resize(2 * n);
          auto expected = target.column(c);
          expected.resize(2 * n);
          const auto y = apply_vec(u, x);
          double err = 0.0;
          for (std::size_t i = 0; i < 2 * n; ++i) err = std::max(err, std::abs(y[i] - expected[i]));
          CHECK(err <= 1e-10);
        }
      }
  }

  TEST_CASE("precondition violations") {
    const auto p = ComplexMatrix::diagonal({1.0, 0.0});
    CHECK_THROWS_AS(extend_isometry_catalyst(ComplexMatrix::identity(2), p), DomainError);
    CHECK_THROWS_AS(extend_isometry_catalyst(2.0 * ComplexMatrix::unit(2, 1, 0), p), DomainError);
    CHECK_THROWS_AS(
        extend_isometry_catalyst(ComplexMatrix::zeros(2, 2), ComplexMatrix::diagonal({0.5, 0.0})),
        DomainError);
    CHECK_THROWS_AS(extend_isometry_catalyst(ComplexMatrix::zeros(2, 2), ComplexMatrix(3, 3)),
                    ShapeError);
  }
}

TEST_SUITE("dilate_finite") {
  TEST_CASE("single unitary Kraus operator") {
    const auto d = dilate_finite(identity_channel(2));
    CHECK(d.unitary == ComplexMatrix::identity(2));
    CHECK(d.env_dim == 1);
    CHECK(d.psi_index == 0);
    CHECK(d.method == DilationMethod::finite);
    CHECK_FALSE(d.catalyst_qubit);
  }

  TEST_CASE("amplitude damping") {
    const auto k = amplitude_damping(0.3);
    const auto d = dilate_finite(k);
    CHECK(d.unitary.rows() == 4);
    CHECK(d.unitary.block(0, 0, 2, 2) == k[0]);
    CHECK(d.unitary.block(2, 0, 2, 2) == k[1]);
    CHECK(unitarity_defect(d.unitary) <= 1e-14);
    CHECK(verify_dilation(k, d, 20, 0, 1e-10).passed);
  }

  TEST_CASE("rejects non-trace-preserving and rectangular sets") {
    CHECK_THROWS_AS(dilate_finite(KrausSet({0.5 * ComplexMatrix::identity(2)})), DomainError);
    CHECK_THROWS_AS(dilate_finite(random_channel(2, 3, 2, 0)), ShapeError);
  }
}

TEST_SUITE("dilate_hellwig_kraus") {
  TEST_CASE("identity channel gives the block swap") {
    const auto d = dilate_hellwig_kraus(identity_channel(2));
    ComplexMatrix expected(4, 4);
    expected.set_block(0, 2, ComplexMatrix::identity(2));
    expected.set_block(2, 0, ComplexMatrix::identity(2));
    CHECK(d.unitary == expected);
    CHECK(d.env_dim == 2);
    CHECK(d.psi_index == 0);
  }

  TEST_CASE("amplitude damping matches the 3x3 block formula") {
    const auto k = amplitude_damping(0.3);
    const auto& k1 = k[0];
    const auto& k2 = k[1];
    const auto id = ComplexMatrix::identity(2);
    ComplexMatrix expected(6, 6);
    expected.set_block(0, 2, k1.adjoint());
    expected.set_block(0, 4, k2.adjoint());
    expected.set_block(2, 0, k1);
    expected.set_block(2, 2, testing::naive_product(k1, k1.adjoint()) - id);
    expected.set_block(2, 4, testing::naive_product(k1, k2.adjoint()));
    expected.set_block(4, 0, k2);
    expected.set_block(4, 2, testing::naive_product(k2, k1.adjoint()));
    expected.set_block(4, 4, testing::naive_product(k2, k2.adjoint()) - id);
    const auto d = dilate_hellwig_kraus(k);
    CHECK(max_abs_diff(d.unitary, expected) <= 1e-15);
    CHECK(check_involution(d, 1e-12).passed);
  }

  TEST_CASE("random channels are self-adjoint involutions") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto d = dilate_hellwig_kraus(random_channel(2, 2, seed));
      CHECK(max_abs_diff(d.unitary, d.unitary.adjoint()) <= 1e-12);
      CHECK(max_abs_diff(d.unitary * d.unitary, ComplexMatrix::identity(d.unitary.rows())) <=
            1e-11);
    }
  }

  TEST_CASE("the s slot maps to the Kraus column") {
    const auto k = random_channel(3, 4, 5);
    const auto d = dilate_hellwig_kraus(k);
    Rng rng(14);
    const auto x = random_unit_vector(3, rng);
    std::vector<cplx> input(d.unitary.rows());
    for (std::size_t h = 0; h < 3; ++h) input[h] = x[h];
    const auto y = apply_vec(d.unitary, input);
    double err = 0.0;
    for (std::size_t h = 0; h < 3; ++h) err = std::max(err, std::abs(y[h]));
    for (std::size_t j = 0; j < k.size(); ++j) {
      const auto kx = apply_vec(k[j], x);
      for (std::size_t h = 0; h < 3; ++h)
        err = std::max(err, std::abs(y[(j + 1) * 3 + h] - kx[h]));
    }
    CHECK(err <= 1e-12);
  }
}

TEST_SUITE("dilate_sznagy") {
  TEST_CASE("identity channel") {
    const auto d = dilate_sznagy(identity_channel(2));
    ComplexMatrix expected(4, 4);
    expected.set_block(0, 0, ComplexMatrix::identity(2));
    expected.set_block(2, 2, -1.0 * ComplexMatrix::identity(2));
    CHECK(d.unitary == expected);
    CHECK(d.env_dim == 2);
    CHECK(d.catalyst_qubit);
    CHECK(d.psi_index == 0);
  }

  TEST_CASE("amplitude damping matches the 4x4 block formula") {
    const auto k = amplitude_damping(0.3);
    const auto& k1 = k[0];
    const auto& k2 = k[1];
    const auto id = ComplexMatrix::identity(2);
    ComplexMatrix expected(8, 8);
    expected.set_block(0, 0, k1);
    expected.set_block(0, 4, id - testing::naive_product(k1, k1.adjoint()));
    expected.set_block(0, 6, -1.0 * testing::naive_product(k1, k2.adjoint()));
    expected.set_block(2, 0, k2);
    expected.set_block(2, 4, -1.0 * testing::naive_product(k2, k1.adjoint()));
    expected.set_block(2, 6, id - testing::naive_product(k2, k2.adjoint()));
    expected.set_block(4, 4, -1.0 * k1.adjoint());
    expected.set_block(4, 6, -1.0 * k2.adjoint());
    expected.set_block(6, 2, id);
    const auto d = dilate_sznagy(k, 0);
    CHECK(max_abs_diff(d.unitary, expected) <= 1e-15);
    CHECK(max_abs(d.unitary.block(0, 2, 6, 2)) == 0.0);
  }

  TEST_CASE("j0 choice") {
    const auto k = amplitude_damping(0.3);
    for (std::size_t j0 = 0; j0 < 2; ++j0) {
      const auto d = dilate_sznagy(k, j0);
      CHECK(d.psi_index == 2 * j0);
      CHECK(d.j0() == j0);
      CHECK(verify_dilation(k, d, 20, 1, 1e-10).passed);
    }
    CHECK_THROWS_AS(dilate_sznagy(k, 2), DomainError);
  }

  TEST_CASE("extension property and norm preservation") {
    Rng rng(15);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const std::size_t n = 3;
      const auto k = random_channel(n, 4, seed);
      const std::size_t ell = k.size();
      const std::size_t j0 = seed % ell;
      const auto d = to_tensor_layout(dilate_sznagy(k, j0));
      const std::size_t env = d.env_dim;
      const auto x = random_unit_vector(n, rng);
      std::vector<cplx> input(n * env);
      for (std::size_t h = 0; h < n; ++h) input[h * env + 2 * j0] = x[h];
      const auto y = apply_vec(d.unitary, input);
      double err = 0.0;
      double v0_norm2 = 0.0;
      for (std::size_t j = 0; j < ell; ++j) {
        const auto kx = apply_vec(k[j], x);
        v0_norm2 += norm2(kx);
        for (std::size_t h = 0; h < n; ++h) {
          err = std::max(err, std::abs(y[h * env + j * 2] - kx[h]));
          err = std::max(err, std::abs(y[h * env + j * 2 + 1]));
        }
      }
      CHECK(err <= 1e-10);
      CHECK(std::abs(v0_norm2 - norm2(x)) <= 1e-10);
    }
  }
}

TEST_SUITE("random channel dilations") {
  TEST_CASE("unitarity and environment dimensions") {
    for (std::size_t n : {1, 2, 3, 5, 8})
      for (std::size_t ell : {std::size_t{1}, n, std::min<std::size_t>(n * n, 12)}) {
        const auto k = random_channel(n, ell, 7 * n + ell);
        const auto f = dilate_finite(k);
        const auto h = dilate_hellwig_kraus(k);
        const auto s = dilate_sznagy(k);
        CHECK(f.env_dim == ell);
        CHECK(h.env_dim == ell + 1);
        CHECK(s.env_dim == 2 * ell);
        for (const auto* d : {&f, &h, &s}) {
          CHECK(d->sys_dim == n);
          CHECK(d->kraus_count() == ell);
          CHECK(d->unitary.rows() == n * d->env_dim);
          INFO("method " << to_string(d->method) << " n=" << n << " ell=" << ell);
          CHECK(isometry_residual(d->unitary) <= unitarity_bound(*d));
        }
        for (std::size_t j = 0; j < ell; ++j) CHECK(f.unitary.block(j * n, 0, n, n) == k[j]);
      }
  }
}

TEST_SUITE("layouts") {
  TEST_CASE("index maps match the documented ordering") {
    const auto k = random_channel(3, 2, 21);
    for (const auto& d : {dilate_finite(k), dilate_hellwig_kraus(k), dilate_sznagy(k, 1)})
      for (std::size_t i = 0; i < d.unitary.rows(); ++i)
        CHECK(paper_to_tensor_index(d, i) == tensor_index(d, i));
  }

  TEST_CASE("conversion conjugates by the permutation") {
    const auto k = random_channel(2, 2, 22);
    for (const auto& d : {dilate_finite(k), dilate_hellwig_kraus(k), dilate_sznagy(k)}) {
      const auto t = to_tensor_layout(d);
      CHECK(t.layout == Layout::tensor);
      const auto p = permutation_matrix(d);
      CHECK(t.unitary == testing::naive_product(testing::naive_product(p, d.unitary), p.transpose()));
      CHECK(to_tensor_layout(t).unitary == t.unitary);
      const auto a = verify_dilation(k, d, 10, 3);
      const auto b = verify_dilation(k, t, 10, 3);
      CHECK(a.passed);
      CHECK(a.residual == b.residual);
    }
  }

  TEST_CASE("single-environment dilations need no permutation") {
    const auto d = dilate_finite(random_channel(3, 1, 23));
    CHECK(to_tensor_layout(d).unitary == d.unitary);
  }

  TEST_CASE("identity catalyst dilation in tensor order") {
    const auto t = to_tensor_layout(dilate_sznagy(identity_channel(2)));
    CHECK(t.unitary == ComplexMatrix::diagonal({1.0, -1.0, 1.0, -1.0}));
  }
}
