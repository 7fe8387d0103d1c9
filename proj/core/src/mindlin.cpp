#include "halfbem/mindlin.hpp"

#include <cmath>

#include "halfbem/errors.hpp"
#include "halfbem/kelvin.hpp"

namespace halfbem {

namespace {

inline double kd(int a, int b) { return a == b ? 1.0 : 0.0; }

inline void check_halfspace(const Vec3& x, const Vec3& y) {
  // Both arguments in the closed half-space; the eta = 0 singularity is
  // guarded separately (it needs both points on the surface plane).
  if (x.z() > 0.0 || y.z() > 0.0) {
    throw InvalidHalfSpacePoint("regular part requires x3 <= 0 and y3 <= 0");
  }
}

}  // namespace

RegularParts regular_components(const Vec3& eta, const ElasticModuli& m) {
  const double q = eta.norm();
  if (q < 1e-300) throw SingularPoint("regular part evaluated at eta = 0");
  const double f = 1.0 / q;
  const double g = 1.0 / (q - eta.z());
  const double f3 = f * f * f;
  const double f5 = f3 * f * f;
  const double fg = f * g;
  const double fg2 = fg * g;
  const double k34 = 3.0 - 4.0 * m.nu;
  const double C = m.cmn;
  const double cn = m.cnu;

  RegularParts out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double dij = kd(i, j);
      const double d3i = kd(i, 2);
      const double d3j = kd(j, 2);
      const double s_j = 1.0 - 2.0 * d3j;

      out.r1(i, j) =
          C * (-(f + cn * g) * dij - k34 * eta[i] * eta[j] * f3 +
               cn * (d3i * eta[j] - d3j * (1.0 - d3i) * eta[i]) * fg +
               cn * (1.0 - d3i) * (1.0 - d3j) * eta[i] * eta[j] * fg2);

      out.r2(i, j) =
          2.0 * C *
          (k34 * (d3i * (1.0 - d3j) * eta[j] + d3j * (1.0 - d3i) * eta[i]) * f3 -
           s_j * dij * eta.z() * f3 + 3.0 * s_j * eta[i] * eta[j] * eta.z() * f5);

      out.r3(i, j) = 2.0 * C * s_j * (dij * f3 - 3.0 * eta[i] * eta[j] * f5);
    }
  }
  return out;
}

RegularPartsGrad regular_components_grad(const Vec3& eta, const ElasticModuli& m) {
  const double q = eta.norm();
  if (q < 1e-300) throw SingularPoint("regular part gradient evaluated at eta = 0");
  const double f = 1.0 / q;
  const double g = 1.0 / (q - eta.z());
  const double f3 = f * f * f;
  const double f5 = f3 * f * f;
  const double f7 = f5 * f * f;
  const double fg = f * g;
  const double fg2 = fg * g;
  const double k34 = 3.0 - 4.0 * m.nu;
  const double C = m.cmn;
  const double cn = m.cnu;

  // d_m of the elementary scalars
  Vec3 df, dg, df3, df5, dfg, dfg2;
  for (int mm = 0; mm < 3; ++mm) {
    const double d3m = kd(mm, 2);
    df[mm] = -eta[mm] * f3;
    dg[mm] = -(eta[mm] * f - d3m) * g * g;
    df3[mm] = -3.0 * eta[mm] * f5;
    df5[mm] = -5.0 * eta[mm] * f7;
    dfg[mm] = df[mm] * g + f * dg[mm];
    dfg2[mm] = df[mm] * g * g + 2.0 * fg * dg[mm];
  }

  RegularPartsGrad out;
  for (int mm = 0; mm < 3; ++mm) {
    const double d3m = kd(mm, 2);
    for (int i = 0; i < 3; ++i) {
      const double d3i = kd(i, 2);
      const double dmi = kd(mm, i);
      for (int j = 0; j < 3; ++j) {
        const double dij = kd(i, j);
        const double d3j = kd(j, 2);
        const double dmj = kd(mm, j);
        const double s_j = 1.0 - 2.0 * d3j;
        const double pair = dmi * eta[j] + dmj * eta[i];

        out.r1[mm](i, j) =
            C * (-(df[mm] + cn * dg[mm]) * dij -
                 k34 * (pair * f3 + eta[i] * eta[j] * df3[mm]) +
                 cn * ((d3i * dmj - d3j * (1.0 - d3i) * dmi) * fg +
                       (d3i * eta[j] - d3j * (1.0 - d3i) * eta[i]) * dfg[mm]) +
                 cn * (1.0 - d3i) * (1.0 - d3j) *
                     (pair * fg2 + eta[i] * eta[j] * dfg2[mm]));

        out.r2[mm](i, j) =
            2.0 * C *
            (k34 * ((d3i * (1.0 - d3j) * dmj + d3j * (1.0 - d3i) * dmi) * f3 +
                    (d3i * (1.0 - d3j) * eta[j] + d3j * (1.0 - d3i) * eta[i]) * df3[mm]) -
             s_j * dij * (d3m * f3 + eta.z() * df3[mm]) +
             3.0 * s_j *
                 ((pair * eta.z() + d3m * eta[i] * eta[j]) * f5 +
                  eta[i] * eta[j] * eta.z() * df5[mm]));

        out.r3[mm](i, j) =
            2.0 * C * s_j *
            (dij * df3[mm] - 3.0 * (pair * f5 + eta[i] * eta[j] * df5[mm]));
      }
    }
  }
  return out;
}

Mat3 regular_part(const Vec3& x, const Vec3& y, const ElasticModuli& m) {
  check_halfspace(x, y);
  const Vec3 eta(x.x() - y.x(), x.y() - y.y(), x.z() + y.z());
  const RegularParts p = regular_components(eta, m);
  return p.r1 + y.z() * p.r2 + (y.z() * y.z()) * p.r3;
}

Tensor333 regular_part_grad(const Vec3& x, const Vec3& y, const ElasticModuli& m) {
  check_halfspace(x, y);
  const Vec3 eta(x.x() - y.x(), x.y() - y.y(), x.z() + y.z());
  const RegularPartsGrad g = regular_components_grad(eta, m);
  Tensor333 out;
  for (int k = 0; k < 3; ++k) {
    out[k] = g.r1[k] + y.z() * g.r2[k] + (y.z() * y.z()) * g.r3[k];
  }
  return out;
}

Mat3 regular_traction(const Vec3& x, const Vec3& n, const Vec3& y, const ElasticModuli& m) {
  const Tensor333 g = regular_part_grad(x, y, m);
  Mat3 t;
  for (int k = 0; k < 3; ++k) {
    t.col(k) = m.traction(g.column_jacobian(k), n);
  }
  return t;
}

Mat3 neumann(const Vec3& x, const Vec3& y, const ElasticModuli& m) {
  return kelvin(x - y, m) + regular_part(x, y, m);
}

Tensor333 neumann_grad(const Vec3& x, const Vec3& y, const ElasticModuli& m) {
  const Tensor333 gk = kelvin_grad(x - y, m);
  const Tensor333 gr = regular_part_grad(x, y, m);
  Tensor333 out;
  for (int k = 0; k < 3; ++k) out[k] = gk[k] + gr[k];
  return out;
}

Mat3 neumann_traction(const Vec3& x, const Vec3& n, const Vec3& y, const ElasticModuli& m) {
  return kelvin_traction(x - y, n, m) + regular_traction(x, n, y, m);
}

Mat3 neumann_unit_source(const Vec3& x, const ElasticModuli& m) {
  if (x.z() > 0.0) throw InvalidHalfSpacePoint("field point must satisfy x3 <= 0");
  const Vec3 xs = x + Vec3(0, 0, 1);   // towards the source at -e3
  const Vec3 xi = x - Vec3(0, 0, 1);   // towards the image at +e3
  const double rs = xs.norm();
  const double ri = xi.norm();
  if (rs < 1e-300) throw SingularPoint("field point coincides with the source");
  const double ph = 1.0 / rs;
  const double pt = 1.0 / ri;
  const double st = 1.0 / (ri - (x.z() - 1.0));
  const double ph3 = ph * ph * ph;
  const double pt3 = pt * pt * pt;
  const double pt5 = pt3 * pt * pt;
  const double k34 = 3.0 - 4.0 * m.nu;
  const double C = m.cmn;
  const double cn = m.cnu;
  const double x3 = x.z();

  Mat3 N;
  for (int a = 0; a < 2; ++a) {
    // diagonal horizontal entries
    const double xa2 = x[a] * x[a];
    N(a, a) = -C * (k34 * ph + xa2 * ph3 + pt + (k34 * xa2 - 2.0 * x3) * pt3 +
                    6.0 * xa2 * x3 * pt5 + cn * (st - xa2 * pt * st * st));
    // vertical couplings
    N(2, a) = -C * x[a] *
              ((x3 + 1.0) * ph3 + k34 * (x3 + 1.0) * pt3 +
               6.0 * x3 * (x3 - 1.0) * pt5 - cn * pt * st);
    N(a, 2) = -C * x[a] *
              ((x3 + 1.0) * ph3 + k34 * (x3 + 1.0) * pt3 -
               6.0 * x3 * (x3 - 1.0) * pt5 + cn * pt * st);
  }
  const double x1x2 = x[0] * x[1];
  const double offd = -C * x1x2 * (ph3 + k34 * pt3 + 6.0 * x3 * pt5 - cn * pt * st * st);
  N(0, 1) = offd;
  N(1, 0) = offd;
  N(2, 2) = -C * (k34 * ph + (x3 + 1.0) * (x3 + 1.0) * ph3 + (1.0 + cn) * pt +
                  (k34 * (x3 - 1.0) * (x3 - 1.0) + 2.0 * x3) * pt3 -
                  6.0 * x3 * (x3 - 1.0) * (x3 - 1.0) * pt5);
  return N;
}

}  // namespace halfbem
