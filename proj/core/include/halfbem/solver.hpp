#ifndef HALFBEM_SOLVER_HPP_
#define HALFBEM_SOLVER_HPP_

#include <string>
#include <vector>

#include "halfbem/dense.hpp"
#include "halfbem/field.hpp"
#include "halfbem/layers.hpp"
#include "halfbem/mesh.hpp"
#include "halfbem/moduli.hpp"

namespace halfbem {

/// Observation points on the free surface, x3 = 0 implied.
struct SurfacePointSet {
  std::vector<Eigen::Vector2d> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// Assembles the trace system (I/2 + K + D^R) f = p (S^Gamma + S^R) n
/// for a cavity strictly inside the half-space.
DenseOperator assemble_trace_system(const TriangleMesh& cavity, const ElasticModuli& m,
                                    double pressure);

/// Solves the trace equation for the cavity-wall displacement f.
/// The returned field satisfies ||A f - b|| <= 1e-10 ||b||.
BoundaryField solve_trace(const TriangleMesh& cavity, const ElasticModuli& m, double pressure);

/// Representation formula u = p S^Gamma n - D^Gamma f + p S^R n - D^R f,
/// evaluated at surface points (y1, y2, 0).
std::vector<Vec3> surface_displacement(const TriangleMesh& cavity, const ElasticModuli& m,
                                       double pressure, const BoundaryField& f,
                                       const SurfacePointSet& points);

/// Same formula at arbitrary half-space points outside the cavity.
Vec3 displacement_at(const TriangleMesh& cavity, const ElasticModuli& m, double pressure,
                     const BoundaryField& f, const Vec3& x);

struct ConvergenceRow {
  double epsilon = 0.0;
  double sup_bem = 0.0;        ///< sup |u_bem| over the grid
  double sup_gap = 0.0;        ///< sup |u_bem - u_asym|
  double rel_gap = 0.0;        ///< sup_gap / sup |u_asym|
  double gap_over_eps4 = 0.0;  ///< sup_gap / eps^4
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::string table;  ///< deterministic text rendering, one line per epsilon
};

/// For each epsilon, solves the full BEM problem for the cavity z + eps*shape
/// and compares the surface field with the leading-order point-source term.
ConvergenceReport convergence_report(const TriangleMesh& shape, const std::vector<double>& epsilons,
                                     const ElasticModuli& m, double pressure,
                                     const Vec3& z = Vec3(0, 0, -1));

}  // namespace halfbem

#endif  // HALFBEM_SOLVER_HPP_
