#ifndef HALFBEM_ASYMPTOTICS_HPP_
#define HALFBEM_ASYMPTOTICS_HPP_

#include <array>
#include <vector>

#include "halfbem/field.hpp"
#include "halfbem/mesh.hpp"
#include "halfbem/moduli.hpp"
#include "halfbem/types.hpp"

namespace halfbem {

/// Fourth-order elastic moment tensor with minor symmetry in (i, j).
/// component(i,j,q,r) contracts against the strain of the Neumann columns.
struct MomentTensor {
  // m[q][r] holds the 3x3 block in (i, j).
  std::array<std::array<Mat3, 3>, 3> m;

  double operator()(int i, int j, int q, int r) const { return m[q][r](i, j); }

  /// Second-order tensor M I = sum_q M(.,.,q,q).
  Mat3 contract_identity() const {
    Mat3 out = Mat3::Zero();
    for (int q = 0; q < 3; ++q) out += m[q][q];
    return out;
  }

  /// Largest |M(i,j,q,r) - M(j,i,q,r)| over all entries.
  double minor_symmetry_defect() const;

  /// Exact closed form for the unit sphere: M I = 3(lambda+2mu)/(4mu) I.
  static Mat3 sphere_identity_contraction(const ElasticModuli& m);
};

/// Traces of the nine exterior auxiliary fields theta^qr on the shape
/// boundary, solved with a single-layer ansatz for the exterior Neumann
/// problem div(C grad theta) = 0, traction -C n / (3 lambda + 2 mu).
/// Symmetric in (q, r).
struct ThetaTraces {
  std::array<std::array<BoundaryField, 3>, 3> trace;

  const BoundaryField& operator()(int q, int r) const { return trace[q][r]; }
};

ThetaTraces solve_theta(const TriangleMesh& shape, const ElasticModuli& m);

/// M = I4 + (1/|Omega|) sum over panels of C (theta^qr x n) area.
MomentTensor moment_tensor(const TriangleMesh& shape, const ElasticModuli& m,
                           const ThetaTraces& theta);

/// Symmetrized z-gradient of the Neumann columns at a surface point:
/// result[k] = sym grad_z N^(k)(z, y), y3 = 0. Finite differences of the
/// closed-form kernel with step 1e-6 |z3|.
Tensor333 grad_n_surface(const Vec3& z, const Eigen::Vector2d& y, const ElasticModuli& m);

/// Leading-order point-source field u^k = eps^3 |Omega| p grad_z N^(k) : MI.
std::vector<Vec3> point_source_displacement(const Vec3& z, double epsilon, double pressure,
                                            const Mat3& moment_identity, double shape_volume,
                                            const ElasticModuli& m,
                                            const std::vector<Eigen::Vector2d>& points);

/// Closed-form Mogi field of a small spherical cavity:
/// u_alpha = (1-nu)/mu eps^3 p (z_a - y_a)/|z-y|^3, u_3 likewise with z3.
std::vector<Vec3> mogi(const Vec3& z, double epsilon, double pressure, const ElasticModuli& m,
                       const std::vector<Eigen::Vector2d>& points);

}  // namespace halfbem

#endif  // HALFBEM_ASYMPTOTICS_HPP_
