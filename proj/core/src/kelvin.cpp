#include "halfbem/kelvin.hpp"

#include <cmath>

#include "halfbem/errors.hpp"

namespace halfbem {

namespace {

inline void check_not_singular(double r) {
  if (r < 1e-300) throw SingularPoint("kernel evaluated at the singular point");
}

}  // namespace

Mat3 kelvin(const Vec3& x, const ElasticModuli& m) {
  const double r = x.norm();
  check_not_singular(r);
  const double inv_r = 1.0 / r;
  const double inv_r3 = inv_r * inv_r * inv_r;
  const double k = 3.0 - 4.0 * m.nu;
  Mat3 g = -m.cmn * inv_r3 * (x * x.transpose());
  const double diag = -m.cmn * k * inv_r;
  g(0, 0) += diag;
  g(1, 1) += diag;
  g(2, 2) += diag;
  return g;
}

Tensor333 kelvin_grad(const Vec3& x, const ElasticModuli& m) {
  const double r = x.norm();
  check_not_singular(r);
  const double inv_r = 1.0 / r;
  const double inv_r3 = inv_r * inv_r * inv_r;
  const double inv_r5 = inv_r3 * inv_r * inv_r;
  const double k = 3.0 - 4.0 * m.nu;

  Tensor333 g;
  for (int kk = 0; kk < 3; ++kk) {
    Mat3& gk = g[kk];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double dij = i == j ? 1.0 : 0.0;
        const double dik = i == kk ? 1.0 : 0.0;
        const double djk = j == kk ? 1.0 : 0.0;
        gk(i, j) = m.cmn * ((k * dij * x[kk] - dik * x[j] - djk * x[i]) * inv_r3 +
                            3.0 * x[i] * x[j] * x[kk] * inv_r5);
      }
    }
  }
  return g;
}

Mat3 kelvin_traction(const Vec3& x, const Vec3& n, const ElasticModuli& m) {
  const double r = x.norm();
  check_not_singular(r);
  const double inv_r = 1.0 / r;
  const double inv_r3 = inv_r * inv_r * inv_r;
  const double ndotx = n.dot(x);
  const double c1 = m.cpnu * inv_r3;
  // cpnu * 3/(1-2nu) stays finite as nu -> 1/2
  const double c2 = 3.0 / (8.0 * M_PI * (1.0 - m.nu)) * inv_r3 * inv_r * inv_r;

  // T_hk = cpnu { n_k x_h - n_h x_k + d_hk (n.x) } / r^3
  //        + 3/(8 pi (1-nu)) x_h x_k (n.x) / r^5
  Mat3 t;
  for (int h = 0; h < 3; ++h) {
    for (int k = 0; k < 3; ++k) {
      const double dhk = h == k ? 1.0 : 0.0;
      t(h, k) = c1 * (n[k] * x[h] - n[h] * x[k] + dhk * ndotx) +
                c2 * x[h] * x[k] * ndotx;
    }
  }
  return t;
}

Mat3 kelvin_traction_from_grad(const Vec3& x, const Vec3& n, const ElasticModuli& m) {
  const Tensor333 g = kelvin_grad(x, m);
  Mat3 t;
  for (int k = 0; k < 3; ++k) {
    t.col(k) = m.traction(g.column_jacobian(k), n);
  }
  return t;
}

}  // namespace halfbem
