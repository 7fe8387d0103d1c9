#include "halfbem/solver.hpp"

#include <charconv>
#include <cmath>

#include "halfbem/asymptotics.hpp"
#include "halfbem/errors.hpp"

namespace halfbem {

namespace {

BoundaryField normals_field(const TriangleMesh& mesh) {
  BoundaryField n(mesh);
  for (int f = 0; f < mesh.face_count(); ++f) n[f] = mesh.normal(f);
  return n;
}

std::string format17(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

DenseOperator assemble_trace_system(const TriangleMesh& cavity, const ElasticModuli& m,
                                    double pressure) {
  const int n = cavity.face_count();
  auto [sr, dr] = assemble_regular_ops(cavity, m);

  DenseOperator op;
  op.faces = n;
  op.matrix = assemble_double_layer(cavity, m);
  op.matrix += dr;
  op.matrix.diagonal().array() += 0.5;

  const Eigen::VectorXd nvec = normals_field(cavity).stacked();
  op.rhs = pressure * (assemble_single_layer(cavity, m) * nvec + sr * nvec);
  return op;
}

BoundaryField solve_trace(const TriangleMesh& cavity, const ElasticModuli& m, double pressure) {
  if (!std::isfinite(pressure)) throw SingularSystem("pressure must be finite");
  if (pressure == 0.0) return BoundaryField(cavity);  // homogeneous system

  DenseOperator op = assemble_trace_system(cavity, m, pressure);
  const Eigen::VectorXd b = op.rhs;
  const Eigen::MatrixXd a = op.matrix;
  const Eigen::VectorXd x = lu_solve_in_place(op.matrix, op.rhs);

  const double residual = (a * x - b).norm() / b.norm();
  if (!(residual <= 1e-10)) {
    throw SingularSystem("trace solve residual " + format17(residual) + " exceeds 1e-10");
  }
  return BoundaryField::from_stacked(cavity, x);
}

Vec3 displacement_at(const TriangleMesh& cavity, const ElasticModuli& m, double pressure,
                     const BoundaryField& f, const Vec3& x) {
  if (point_inside(cavity, x)) {
    throw PointInsideCavity("observation point lies inside the cavity");
  }
  const BoundaryField n = normals_field(cavity);
  Vec3 u = Vec3::Zero();
  u += pressure * eval_potential(PotentialKind::SingleKelvin, x, cavity, n, m);
  u -= eval_potential(PotentialKind::DoubleKelvin, x, cavity, f, m);
  u += pressure * eval_potential(PotentialKind::SingleRegular, x, cavity, n, m);
  u -= eval_potential(PotentialKind::DoubleRegular, x, cavity, f, m);
  return u;
}

std::vector<Vec3> surface_displacement(const TriangleMesh& cavity, const ElasticModuli& m,
                                       double pressure, const BoundaryField& f,
                                       const SurfacePointSet& points) {
  std::vector<Vec3> out(points.size());
  for (int p = 0; p < points.size(); ++p) {
    const Vec3 x(points.points[p].x(), points.points[p].y(), 0.0);
    out[p] = displacement_at(cavity, m, pressure, f, x);
  }
  return out;
}

ConvergenceReport convergence_report(const TriangleMesh& shape, const std::vector<double>& epsilons,
                                     const ElasticModuli& m, double pressure, const Vec3& z) {
  for (size_t k = 1; k < epsilons.size(); ++k) {
    if (!(epsilons[k] < epsilons[k - 1])) {
      throw MeshInvalid("epsilon list must be strictly decreasing");
    }
  }

  // Leading-order engine for this shape.
  const ThetaTraces theta = solve_theta(shape, m);
  const Mat3 mi = moment_tensor(shape, m, theta).contract_identity();
  const double volume = shape.signed_volume();

  // 21 x 21 grid spanning +-5 |z3| around (z1, z2).
  SurfacePointSet grid;
  const double extent = 5.0 * std::abs(z.z());
  for (int iy = 0; iy < 21; ++iy) {
    for (int ix = 0; ix < 21; ++ix) {
      grid.points.emplace_back(z.x() + extent * (ix / 10.0 - 1.0),
                               z.y() + extent * (iy / 10.0 - 1.0));
    }
  }
  const std::vector<Vec3> leading_unit =
      point_source_displacement(z, 1.0, pressure, mi, volume, m, grid.points);

  ConvergenceReport report;
  report.table =
      "epsilon sup_bem sup_gap rel_gap gap_over_eps4\n";
  for (double eps : epsilons) {
    const TriangleMesh cavity = place_cavity(shape, eps, z);
    const BoundaryField f = solve_trace(cavity, m, pressure);
    const std::vector<Vec3> u = surface_displacement(cavity, m, pressure, f, grid);

    ConvergenceRow row;
    row.epsilon = eps;
    const double eps3 = eps * eps * eps;
    double sup_lead = 0.0;
    for (size_t p = 0; p < u.size(); ++p) {
      const Vec3 lead = eps3 * leading_unit[p];
      row.sup_bem = std::max(row.sup_bem, u[p].norm());
      row.sup_gap = std::max(row.sup_gap, (u[p] - lead).norm());
      sup_lead = std::max(sup_lead, lead.norm());
    }
    row.rel_gap = row.sup_gap / sup_lead;
    row.gap_over_eps4 = row.sup_gap / (eps3 * eps);
    report.rows.push_back(row);

    report.table += format17(row.epsilon) + " " + format17(row.sup_bem) + " " +
                    format17(row.sup_gap) + " " + format17(row.rel_gap) + " " +
                    format17(row.gap_over_eps4) + "\n";
  }
  return report;
}

}  // namespace halfbem
