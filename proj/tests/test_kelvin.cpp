#include "halfbem/kelvin.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "halfbem/errors.hpp"
#include "test_util.hpp"

using namespace halfbem;

namespace {

const ElasticModuli kM = moduli_from_lame(1.0, 1.0);  // nu = 1/4

// 4th-order central differences of the Kelvin matrix.
Tensor333 kelvin_grad_fd(const Vec3& x, const ElasticModuli& m, double h) {
  Tensor333 g;
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = h;
    g[k] = (-kelvin(x + 2.0 * e, m) + 8.0 * kelvin(x + e, m) - 8.0 * kelvin(x - e, m) +
            kelvin(x - 2.0 * e, m)) /
           (12.0 * h);
  }
  return g;
}

// Second-order FD residual of the Lame operator applied to column k of a
// matrix kernel: mu lap u + (lambda + mu) grad div u.
double lame_residual(const std::function<Mat3(const Vec3&)>& kernel, const Vec3& x, int col,
                     const ElasticModuli& m, double h) {
  auto u = [&](const Vec3& p) { return Vec3(kernel(p).col(col)); };

  Vec3 lap = -6.0 * u(x);
  Mat3 jac_p[3], jac_m[3];
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = h;
    lap += u(x + e) + u(x - e);
  }
  lap /= h * h;

  // grad div by nested central differences
  Vec3 grad_div;
  auto div_at = [&](const Vec3& p) {
    double d = 0.0;
    for (int k = 0; k < 3; ++k) {
      Vec3 e = Vec3::Zero();
      e[k] = h;
      d += (u(p + e)[k] - u(p - e)[k]) / (2.0 * h);
    }
    return d;
  };
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = h;
    grad_div[k] = (div_at(x + e) - div_at(x - e)) / (2.0 * h);
  }

  const Vec3 residual = m.mu * lap + (m.lambda + m.mu) * grad_div;
  // scale: magnitude of the individual second-derivative contributions
  const double scale = m.mu * (std::abs(lap[0]) + std::abs(lap[1]) + std::abs(lap[2])) +
                       (m.lambda + m.mu) * grad_div.cwiseAbs().sum() +
                       m.mu * u(x).norm() / (x.norm() * x.norm());
  return residual.norm() / scale;
}

}  // namespace

TEST_CASE("kelvin matrix hand values") {
  const Mat3 g = kelvin(Vec3(1, 0, 0), kM);
  CHECK(g(0, 0) == doctest::Approx(-1.0 / (4.0 * M_PI)).epsilon(1e-14));
  CHECK(g(0, 1) == 0.0);
  CHECK(g(0, 2) == 0.0);
  CHECK(g(1, 2) == 0.0);
  // diagonal entries w/o the x_i x_j part: -(3-4nu) Cmn = -2/(12 pi)
  CHECK(g(1, 1) == doctest::Approx(-1.0 / (6.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("kelvin symmetry, evenness, homogeneity") {
  testutil::BoxSampler rng(7);
  for (int t = 0; t < 20; ++t) {
    const Vec3 x = rng.point(Vec3(-2, -2, -2), Vec3(2, 2, 2));
    if (x.norm() < 0.1) continue;
    const Mat3 g = kelvin(x, kM);
    CHECK((g - g.transpose()).norm() <= 1e-15 * g.norm());
    CHECK((g - kelvin(-x, kM)).norm() == 0.0);
    CHECK(testutil::rel_err(kelvin(2.0 * x, kM), Mat3(0.5 * g)) <= 1e-14);
  }
  CHECK_THROWS_AS(kelvin(Vec3(0, 0, 0), kM), SingularPoint);
}

TEST_CASE("kelvin gradient matches finite differences") {
  const Vec3 x(0.3, -0.7, 0.2);
  const Tensor333 g = kelvin_grad(x, kM);
  const Tensor333 fd = kelvin_grad_fd(x, kM, 1e-5);
  for (int k = 0; k < 3; ++k) {
    CHECK((g[k] - fd[k]).norm() / fd[k].norm() <= 1e-8);
  }
}

TEST_CASE("kelvin gradient homogeneity of degree -2") {
  testutil::BoxSampler rng(11);
  for (int t = 0; t < 10; ++t) {
    const Vec3 x = rng.point(Vec3(-1, -1, -1), Vec3(1, 1, 1));
    if (x.norm() < 0.2) continue;
    const Tensor333 g1 = kelvin_grad(x, kM);
    const Tensor333 g2 = kelvin_grad(2.0 * x, kM);
    for (int k = 0; k < 3; ++k) {
      CHECK(testutil::rel_err(g2[k], Mat3(0.25 * g1[k])) <= 1e-13);
    }
  }
}

TEST_CASE("kelvin gradient decay slope is -2") {
  std::vector<double> radii, values;
  const Vec3 dir = Vec3(0.4, -0.5, 0.75).normalized();
  for (double r = 1.0; r <= 64.0; r *= 2.0) {
    const Tensor333 g = kelvin_grad(r * dir, kM);
    double norm2 = 0.0;
    for (int k = 0; k < 3; ++k) norm2 += g[k].squaredNorm();
    radii.push_back(r);
    values.push_back(std::sqrt(norm2));
  }
  CHECK(std::abs(testutil::loglog_slope(radii, values) + 2.0) <= 0.01);
}

TEST_CASE("traction closed form equals stiffness contraction of the gradient") {
  testutil::BoxSampler rng(13);
  for (const ElasticModuli& m :
       {kM, moduli_from_poisson(0.33, 2.0), moduli_from_poisson(0.49, 0.5)}) {
    for (int t = 0; t < 20; ++t) {
      const Vec3 x = rng.point(Vec3(-2, -2, -2), Vec3(2, 2, 2));
      if (x.norm() < 0.1) continue;
      const Vec3 n = rng.unit();
      const Mat3 a = kelvin_traction(x, n, m);
      const Mat3 b = kelvin_traction_from_grad(x, n, m);
      CHECK((a - b).norm() / b.norm() <= 1e-12);
    }
  }
}

TEST_CASE("traction homogeneity of degree -2") {
  testutil::BoxSampler rng(17);
  const Vec3 x = rng.point(Vec3(-1, -1, -1), Vec3(-0.3, -0.3, -0.3));
  const Vec3 n = rng.unit();
  for (double eps : {0.5, 0.1, 0.01}) {
    const Mat3 scaled = kelvin_traction(eps * x, n, kM);
    const Mat3 base = kelvin_traction(x, n, kM);
    CHECK(testutil::rel_err(scaled, Mat3(base / (eps * eps))) <= 1e-12);
  }
}

TEST_CASE("traction axial symmetry block structure") {
  const Mat3 t = kelvin_traction(Vec3(0, 0, -1), Vec3(0, 0, 1), kM);
  CHECK(t(0, 1) == 0.0);
  CHECK(t(1, 0) == 0.0);
  CHECK(t(0, 2) == 0.0);
  CHECK(t(2, 0) == 0.0);
  CHECK(t(0, 0) == t(1, 1));
}

TEST_CASE("kelvin columns annihilate the lame operator away from the pole") {
  auto kernel = [&](const Vec3& p) { return kelvin(p, kM); };
  testutil::BoxSampler rng(19);
  for (int t = 0; t < 5; ++t) {
    Vec3 x = rng.point(Vec3(-2, -2, -2), Vec3(2, 2, 2));
    if (x.norm() < 0.5) x += Vec3(1, 1, 1);
    for (int col = 0; col < 3; ++col) {
      CHECK(lame_residual(kernel, x, col, kM, 1e-3 * x.norm()) <= 1e-5);
    }
  }
}
