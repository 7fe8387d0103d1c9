#include "halfbem/layers.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

#include "halfbem/errors.hpp"
#include "halfbem/kelvin.hpp"
#include "halfbem/mindlin.hpp"
#include "halfbem/quadrature.hpp"

namespace halfbem {

namespace {

constexpr int kDuffyPoints = 12;     // tensor Gauss points per direction on self-blocks
constexpr double kNearFactor = 3.0;  // refine when target-to-panel distance < 3 diameters
constexpr int kEvalMaxDepth = 24;

struct PanelQuadrature {
  std::vector<Vec3> points;
  std::vector<double> weights;  // include the panel area
};

// 7-point rule mapped to a physical triangle.
void push_rule(const std::array<Vec3, 3>& tri, PanelQuadrature& q) {
  const TriangleRule& rule = triangle_rule_7();
  const double area = 0.5 * (tri[1] - tri[0]).cross(tri[2] - tri[0]).norm();
  for (int k = 0; k < rule.size(); ++k) {
    const Vec3& b = rule.bary[k];
    q.points.push_back(b[0] * tri[0] + b[1] * tri[1] + b[2] * tri[2]);
    q.weights.push_back(rule.weights[k] * area);
  }
}

PanelQuadrature panel_rule(const TriangleMesh& mesh, int f) {
  PanelQuadrature q;
  push_rule(mesh.corners(f), q);
  return q;
}

PanelQuadrature panel_rule_refined(const TriangleMesh& mesh, int f) {
  PanelQuadrature q;
  for (const auto& child : split4(mesh.corners(f))) push_rule(child, q);
  return q;
}

double panel_distance(const TriangleMesh& mesh, int f, const Vec3& x) {
  const auto c = mesh.corners(f);
  return (x - closest_point_on_triangle(x, c[0], c[1], c[2])).norm();
}

bool is_near(const TriangleMesh& mesh, int f, const Vec3& x) {
  const double diam = mesh.diameter(f);
  if ((x - mesh.centroid(f)).norm() >= (kNearFactor + 1.0) * diam) return false;
  return panel_distance(mesh, f, x) < kNearFactor * diam;
}

void parallel_rows(int n, const std::function<void(int)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || n < 64) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int nthreads = static_cast<int>(std::min<unsigned>(hw, 16));
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Double-layer kernel block: transposed Kelvin traction at the source point.
inline Mat3 double_layer_kernel(const Vec3& target, const Vec3& y, const Vec3& ny,
                                const ElasticModuli& m) {
  return kelvin_traction(y - target, ny, m).transpose();
}

// D^R kernel block: transposed traction (at the source point y, panel
// normal ny) of the image-part columns generated by a source at the target.
inline Mat3 regular_double_kernel(const Vec3& target, const Vec3& y, const Vec3& ny,
                                  const ElasticModuli& m) {
  return regular_traction(y, ny, target, m).transpose();
}

}  // namespace

Eigen::MatrixXd assemble_single_layer(const TriangleMesh& mesh, const ElasticModuli& m) {
  mesh_validate(mesh);
  const int n = mesh.face_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3 * n, 3 * n);

  std::vector<PanelQuadrature> base(n);
  for (int j = 0; j < n; ++j) base[j] = panel_rule(mesh, j);

  parallel_rows(n, [&](int i) {
    const Vec3 ci = mesh.centroid(i);
    for (int j = 0; j < n; ++j) {
      Mat3 block = Mat3::Zero();
      if (j == i) {
        integrate_singular(mesh.corners(j), ci, kDuffyPoints,
                           [&](const Vec3& x, double w) { block += w * kelvin(ci - x, m); });
      } else if (is_near(mesh, j, ci)) {
        const PanelQuadrature q = panel_rule_refined(mesh, j);
        for (size_t k = 0; k < q.points.size(); ++k) {
          block += q.weights[k] * kelvin(ci - q.points[k], m);
        }
      } else {
        const PanelQuadrature& q = base[j];
        for (size_t k = 0; k < q.points.size(); ++k) {
          block += q.weights[k] * kelvin(ci - q.points[k], m);
        }
      }
      a.block<3, 3>(3 * i, 3 * j) = block;
    }
  });
  return a;
}

Eigen::MatrixXd assemble_double_layer(const TriangleMesh& mesh, const ElasticModuli& m) {
  mesh_validate(mesh);
  const int n = mesh.face_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3 * n, 3 * n);

  std::vector<PanelQuadrature> base(n);
  for (int j = 0; j < n; ++j) base[j] = panel_rule(mesh, j);

  parallel_rows(n, [&](int i) {
    const Vec3 ci = mesh.centroid(i);
    Mat3 row_sum = Mat3::Zero();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Mat3 block = Mat3::Zero();
      const Vec3 nj = mesh.normal(j);
      if (is_near(mesh, j, ci)) {
        const PanelQuadrature q = panel_rule_refined(mesh, j);
        for (size_t k = 0; k < q.points.size(); ++k) {
          block += q.weights[k] * double_layer_kernel(ci, q.points[k], nj, m);
        }
      } else {
        const PanelQuadrature& q = base[j];
        for (size_t k = 0; k < q.points.size(); ++k) {
          block += q.weights[k] * double_layer_kernel(ci, q.points[k], nj, m);
        }
      }
      a.block<3, 3>(3 * i, 3 * j) = block;
      row_sum += block;
    }
    // K maps rigid translations to half of themselves.
    a.block<3, 3>(3 * i, 3 * i) = 0.5 * Mat3::Identity() - row_sum;
  });
  return a;
}

Eigen::MatrixXd assemble_adjoint_double_layer(const TriangleMesh& mesh, const ElasticModuli& m) {
  mesh_validate(mesh);
  const int n = mesh.face_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3 * n, 3 * n);

  std::vector<PanelQuadrature> base(n);
  for (int j = 0; j < n; ++j) base[j] = panel_rule(mesh, j);

  parallel_rows(n, [&](int i) {
    const Vec3 ci = mesh.centroid(i);
    const Vec3 ni = mesh.normal(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Mat3 block = Mat3::Zero();
      if (is_near(mesh, j, ci)) {
        const PanelQuadrature q = panel_rule_refined(mesh, j);
        for (size_t k = 0; k < q.points.size(); ++k) {
          block += q.weights[k] * kelvin_traction(ci - q.points[k], ni, m);
        }
      } else {
        const PanelQuadrature& q = base[j];
        for (size_t k = 0; k < q.points.size(); ++k) {
          block += q.weights[k] * kelvin_traction(ci - q.points[k], ni, m);
        }
      }
      a.block<3, 3>(3 * i, 3 * j) = block;
    }
  });

  // Exterior force balance: area-weighted column sums equal area_j/2 * I.
  for (int j = 0; j < n; ++j) {
    Mat3 col_sum = Mat3::Zero();
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      col_sum += mesh.area(i) * a.block<3, 3>(3 * i, 3 * j);
    }
    a.block<3, 3>(3 * j, 3 * j) =
        (0.5 * mesh.area(j) * Mat3::Identity() - col_sum) / mesh.area(j);
  }
  return a;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> assemble_regular_ops(const TriangleMesh& cavity,
                                                                 const ElasticModuli& m) {
  mesh_validate(cavity);
  const int n = cavity.face_count();
  for (const auto& v : cavity.vertices()) {
    if (!(v.z() < 0.0)) throw CavityTouchesSurface("cavity must lie strictly below x3 = 0");
  }

  Eigen::MatrixXd sr = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  Eigen::MatrixXd dr = Eigen::MatrixXd::Zero(3 * n, 3 * n);

  std::vector<PanelQuadrature> base(n);
  for (int j = 0; j < n; ++j) base[j] = panel_rule(cavity, j);

  parallel_rows(n, [&](int i) {
    const Vec3 ci = cavity.centroid(i);
    for (int j = 0; j < n; ++j) {
      Mat3 sblock = Mat3::Zero();
      Mat3 dblock = Mat3::Zero();
      const Vec3 nj = cavity.normal(j);
      const PanelQuadrature& q = base[j];  // image kernels stay smooth on the cavity
      for (size_t k = 0; k < q.points.size(); ++k) {
        sblock += q.weights[k] * regular_part(ci, q.points[k], m);
        dblock += q.weights[k] * regular_double_kernel(ci, q.points[k], nj, m);
      }
      sr.block<3, 3>(3 * i, 3 * j) = sblock;
      dr.block<3, 3>(3 * i, 3 * j) = dblock;
    }
  });
  return {std::move(sr), std::move(dr)};
}

namespace {

Mat3 potential_kernel(PotentialKind kind, const Vec3& x, const Vec3& y, const Vec3& ny,
                      const ElasticModuli& m) {
  switch (kind) {
    case PotentialKind::SingleKelvin:
      return kelvin(x - y, m);
    case PotentialKind::DoubleKelvin:
      return double_layer_kernel(x, y, ny, m);
    case PotentialKind::SingleRegular:
      return regular_part(x, y, m);
    case PotentialKind::DoubleRegular:
      return regular_double_kernel(x, y, ny, m);
  }
  return Mat3::Zero();
}

void eval_recursive(PotentialKind kind, const Vec3& x, const std::array<Vec3, 3>& tri,
                    const Vec3& ny, const Vec3& phi, const ElasticModuli& m, int depth,
                    Vec3& acc) {
  const double diam = std::max(
      {(tri[1] - tri[0]).norm(), (tri[2] - tri[1]).norm(), (tri[0] - tri[2]).norm()});
  const double dist = (x - closest_point_on_triangle(x, tri[0], tri[1], tri[2])).norm();
  const bool singular_kernel =
      kind == PotentialKind::SingleKelvin || kind == PotentialKind::DoubleKelvin;
  if (singular_kernel && dist < kNearFactor * diam && depth < kEvalMaxDepth) {
    for (const auto& child : split4(tri)) {
      eval_recursive(kind, x, child, ny, phi, m, depth + 1, acc);
    }
    return;
  }
  const TriangleRule& rule = triangle_rule_7();
  const double area = 0.5 * (tri[1] - tri[0]).cross(tri[2] - tri[0]).norm();
  for (int k = 0; k < rule.size(); ++k) {
    const Vec3& b = rule.bary[k];
    const Vec3 y = b[0] * tri[0] + b[1] * tri[1] + b[2] * tri[2];
    acc += (rule.weights[k] * area) * (potential_kernel(kind, x, y, ny, m) * phi);
  }
}

}  // namespace

Vec3 eval_potential(PotentialKind kind, const Vec3& x, const TriangleMesh& mesh,
                    const BoundaryField& density, const ElasticModuli& m) {
  if (density.mesh != &mesh || density.size() != mesh.face_count()) {
    throw MeshMismatch("density does not match the mesh");
  }
  const double scale = std::max(mesh.bounding_box_scale(), 1e-30);
  const double dist = distance_to_surface(mesh, x);
  if (dist < 1e-12 * scale) {
    throw PointOnBoundary("potential evaluated on the boundary");
  }
  Vec3 acc = Vec3::Zero();
  for (int j = 0; j < mesh.face_count(); ++j) {
    eval_recursive(kind, x, mesh.corners(j), mesh.normal(j), density[j], m, 0, acc);
  }
  return acc;
}

}  // namespace halfbem
