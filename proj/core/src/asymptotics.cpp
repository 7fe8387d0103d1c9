#include "halfbem/asymptotics.hpp"

#include <cmath>

#include "halfbem/dense.hpp"
#include "halfbem/errors.hpp"
#include "halfbem/layers.hpp"
#include "halfbem/mindlin.hpp"

namespace halfbem {

double MomentTensor::minor_symmetry_defect() const {
  double defect = 0.0;
  for (int q = 0; q < 3; ++q)
    for (int r = 0; r < 3; ++r)
      defect = std::max(defect, (m[q][r] - m[q][r].transpose()).cwiseAbs().maxCoeff());
  return defect;
}

Mat3 MomentTensor::sphere_identity_contraction(const ElasticModuli& m) {
  return 3.0 * (m.lambda + 2.0 * m.mu) / (4.0 * m.mu) * Mat3::Identity();
}

ThetaTraces solve_theta(const TriangleMesh& shape, const ElasticModuli& m) {
  const int n = shape.face_count();

  // Boundary data g^qr_i = -C_ijqr n_j / (3 lambda + 2 mu) for the six
  // distinct (q, r) pairs.
  const double denom = 3.0 * m.lambda + 2.0 * m.mu;
  Eigen::MatrixXd rhs(3 * n, 6);
  int col = 0;
  std::array<std::array<int, 3>, 3> col_of{};
  for (int q = 0; q < 3; ++q) {
    for (int r = q; r < 3; ++r, ++col) {
      col_of[q][r] = col_of[r][q] = col;
      for (int i = 0; i < n; ++i) {
        const Vec3 nv = shape.normal(i);
        Vec3 g;
        for (int a = 0; a < 3; ++a) {
          g[a] = -(m.lambda * (q == r ? 1.0 : 0.0) * nv[a] +
                   m.mu * ((a == q ? 1.0 : 0.0) * nv[r] + (a == r ? 1.0 : 0.0) * nv[q])) /
                 denom;
        }
        rhs.col(col).segment<3>(3 * i) = g;
      }
    }
  }

  // One operator at a time: the dense blocks dominate memory at fine meshes.
  Eigen::MatrixXd densities;
  {
    Eigen::MatrixXd op = assemble_adjoint_double_layer(shape, m);
    op.diagonal().array() += 0.5;  // exterior traction trace of the single layer
    densities = lu_solve_in_place(op, rhs);
  }
  Eigen::MatrixXd traces;
  {
    const Eigen::MatrixXd single = assemble_single_layer(shape, m);
    traces = single * densities;
  }

  ThetaTraces out;
  for (int q = 0; q < 3; ++q) {
    for (int r = 0; r < 3; ++r) {
      out.trace[q][r] = BoundaryField::from_stacked(shape, traces.col(col_of[q][r]));
    }
  }
  return out;
}

MomentTensor moment_tensor(const TriangleMesh& shape, const ElasticModuli& m,
                           const ThetaTraces& theta) {
  const int n = shape.face_count();
  for (int q = 0; q < 3; ++q) {
    for (int r = 0; r < 3; ++r) {
      if (theta(q, r).mesh != &shape || theta(q, r).size() != n) {
        throw MeshMismatch("theta traces were computed on a different mesh");
      }
    }
  }
  const double volume = shape.signed_volume();

  MomentTensor out;
  for (int q = 0; q < 3; ++q) {
    for (int r = 0; r < 3; ++r) {
      Mat3 acc = Mat3::Zero();
      for (int f = 0; f < n; ++f) {
        const Vec3& th = theta(q, r)[f];
        const Vec3& nv = shape.normal(f);
        acc += shape.area(f) * m.apply_stiffness(th * nv.transpose());
      }
      Mat3 block = acc / volume;
      // fourth-order symmetric identity: I_ijqr = (d_iq d_jr + d_ir d_jq)/2
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          block(i, j) += 0.5 * ((i == q && j == r ? 1.0 : 0.0) + (i == r && j == q ? 1.0 : 0.0));
        }
      }
      out.m[q][r] = block;
    }
  }
  return out;
}

Tensor333 grad_n_surface(const Vec3& z, const Eigen::Vector2d& y, const ElasticModuli& m) {
  if (!(z.z() < 0.0)) throw InvalidHalfSpacePoint("source must satisfy z3 < 0");
  const Vec3 ys(y.x(), y.y(), 0.0);

  // With the observation point on the plane only the depth-independent image
  // piece survives, and the z-gradient is the field-point gradient of N.
  const Tensor333 grad = neumann_grad(z, ys, m);

  // Symmetrize per column: result[k] = sym of the Jacobian of column k.
  Tensor333 out;
  for (int k = 0; k < 3; ++k) {
    Mat3 jac;
    for (int i = 0; i < 3; ++i)
      for (int mm = 0; mm < 3; ++mm) jac(i, mm) = grad[mm](i, k);
    out[k] = 0.5 * (jac + jac.transpose());
  }
  return out;
}

std::vector<Vec3> point_source_displacement(const Vec3& z, double epsilon, double pressure,
                                            const Mat3& moment_identity, double shape_volume,
                                            const ElasticModuli& m,
                                            const std::vector<Eigen::Vector2d>& points) {
  if (!(z.z() < 0.0)) throw InvalidHalfSpacePoint("source must satisfy z3 < 0");
  const double amp = epsilon * epsilon * epsilon * shape_volume * pressure;
  std::vector<Vec3> out(points.size());
  for (size_t p = 0; p < points.size(); ++p) {
    const Tensor333 grad = grad_n_surface(z, points[p], m);
    Vec3 u;
    for (int k = 0; k < 3; ++k) {
      u[k] = amp * grad[k].cwiseProduct(moment_identity).sum();
    }
    out[p] = u;
  }
  return out;
}

std::vector<Vec3> mogi(const Vec3& z, double epsilon, double pressure, const ElasticModuli& m,
                       const std::vector<Eigen::Vector2d>& points) {
  if (!(z.z() < 0.0)) throw InvalidHalfSpacePoint("source must satisfy z3 < 0");
  const double amp = (1.0 - m.nu) / m.mu * epsilon * epsilon * epsilon * pressure;
  std::vector<Vec3> out(points.size());
  for (size_t p = 0; p < points.size(); ++p) {
    const Vec3 d(z.x() - points[p].x(), z.y() - points[p].y(), z.z());
    const double r3 = std::pow(d.norm(), 3);
    out[p] = Vec3(amp * d.x() / r3, amp * d.y() / r3, amp * z.z() / r3);
  }
  return out;
}

}  // namespace halfbem
