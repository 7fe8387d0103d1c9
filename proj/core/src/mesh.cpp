#include "halfbem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "halfbem/errors.hpp"

namespace halfbem {

TriangleMesh::TriangleMesh(std::vector<Vec3> vertices,
                           std::vector<std::array<int, 3>> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int nf = static_cast<int>(faces_.size());
  const int nv = static_cast<int>(vertices_.size());
  for (const auto& f : faces_) {
    for (int k = 0; k < 3; ++k) {
      if (f[k] < 0 || f[k] >= nv) throw MeshInvalid("face index out of range");
    }
  }

  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (const auto& v : vertices_) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  bbox_scale_ = nv > 0 ? (hi - lo).norm() : 0.0;

  centroids_.resize(nf);
  normals_.resize(nf);
  areas_.resize(nf);
  diameters_.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const Vec3& a = vertices_[faces_[f][0]];
    const Vec3& b = vertices_[faces_[f][1]];
    const Vec3& c = vertices_[faces_[f][2]];
    const Vec3 cross = (b - a).cross(c - a);
    const double doubled = cross.norm();
    areas_[f] = 0.5 * doubled;
    centroids_[f] = (a + b + c) / 3.0;
    normals_[f] = doubled > 0.0 ? Vec3(cross / doubled) : Vec3::Zero();
    diameters_[f] = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
    total_area_ += areas_[f];
    signed_volume_ += areas_[f] * normals_[f].dot(centroids_[f]) / 3.0;
    max_diameter_ = std::max(max_diameter_, diameters_[f]);
  }
}

std::array<Vec3, 3> TriangleMesh::corners(int f) const {
  return {vertices_[faces_[f][0]], vertices_[faces_[f][1]], vertices_[faces_[f][2]]};
}

namespace {

void subdivide_faces(std::vector<Vec3>& verts, std::vector<std::array<int, 3>>& faces) {
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const Vec3 m = (verts[a] + verts[b]).normalized();
    verts.push_back(m);
    const int idx = static_cast<int>(verts.size()) - 1;
    midpoint.emplace(key, idx);
    return idx;
  };

  std::vector<std::array<int, 3>> next;
  next.reserve(faces.size() * 4);
  for (const auto& f : faces) {
    const int ab = mid(f[0], f[1]);
    const int bc = mid(f[1], f[2]);
    const int ca = mid(f[2], f[0]);
    next.push_back({f[0], ab, ca});
    next.push_back({f[1], bc, ab});
    next.push_back({f[2], ca, bc});
    next.push_back({ab, bc, ca});
  }
  faces.swap(next);
}

}  // namespace

TriangleMesh icosphere(int subdivisions) {
  if (subdivisions < 0 || subdivisions > 7) {
    throw MeshInvalid("icosphere subdivisions must be in [0, 7], got " +
                      std::to_string(subdivisions));
  }

  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
  };
  for (auto& v : verts) v.normalize();

  // Outward (counter-clockwise seen from outside) icosahedron faces.
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };

  for (int s = 0; s < subdivisions; ++s) subdivide_faces(verts, faces);
  return TriangleMesh(std::move(verts), std::move(faces));
}

MeshReport mesh_diagnose(const TriangleMesh& mesh) {
  MeshReport rep;
  const int nf = mesh.face_count();

  // Edge bookkeeping: a closed oriented surface has every directed edge
  // matched by exactly one reverse edge.
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : mesh.faces()) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[k];
      const int b = f[(k + 1) % 3];
      ++directed[{a, b}];
    }
  }
  for (const auto& [edge, count] : directed) {
    const auto rev = directed.find({edge.second, edge.first});
    const int rev_count = rev == directed.end() ? 0 : rev->second;
    if (count + rev_count != 2) ++rep.open_edges;
    if (count > 1) ++rep.misoriented_edges;
  }
  rep.open_edges /= 2;  // counted from both endpoints when the partner is missing

  const double area_floor = 1e-14 * mesh.bounding_box_scale() * mesh.bounding_box_scale();
  double min_area = std::numeric_limits<double>::infinity();
  double max_area = 0.0;
  Vec3 weighted_normals = Vec3::Zero();
  for (int f = 0; f < nf; ++f) {
    min_area = std::min(min_area, mesh.area(f));
    max_area = std::max(max_area, mesh.area(f));
    if (mesh.area(f) <= area_floor) ++rep.degenerate_faces;
    weighted_normals += mesh.area(f) * mesh.normal(f);
  }
  rep.min_area = nf > 0 ? min_area : 0.0;
  rep.max_area = max_area;
  rep.normal_area_sum = weighted_normals.norm();
  rep.signed_volume = mesh.signed_volume();
  rep.closed = rep.open_edges == 0 && rep.misoriented_edges == 0;
  rep.oriented = rep.signed_volume > 0.0;
  return rep;
}

MeshReport mesh_validate(const TriangleMesh& mesh) {
  const MeshReport rep = mesh_diagnose(mesh);
  if (rep.degenerate_faces > 0) {
    throw MeshDegenerateFace(std::to_string(rep.degenerate_faces) + " degenerate face(s)");
  }
  if (!rep.closed) {
    throw MeshOpen("mesh is not closed: " + std::to_string(rep.open_edges) +
                   " unmatched edge(s), " + std::to_string(rep.misoriented_edges) +
                   " misoriented edge(s)");
  }
  if (!rep.oriented) {
    throw MeshInverted("mesh normals point inward (signed volume " +
                       std::to_string(rep.signed_volume) + ")");
  }
  return rep;
}

TriangleMesh place_cavity(const TriangleMesh& shape, double epsilon, const Vec3& z) {
  if (!(epsilon > 0.0)) throw MeshInvalid("epsilon must be positive");
  if (!(z.z() < 0.0)) {
    throw CavityTouchesSurface("cavity center must satisfy z3 < 0, got z3 = " +
                               std::to_string(z.z()));
  }
  std::vector<Vec3> verts;
  verts.reserve(shape.vertex_count());
  double max_x3 = -std::numeric_limits<double>::infinity();
  for (const auto& v : shape.vertices()) {
    const Vec3 w = z + epsilon * v;
    max_x3 = std::max(max_x3, w.z());
    verts.push_back(w);
  }
  if (!(max_x3 < 0.0)) {
    throw CavityTouchesSurface("cavity reaches the free surface (max vertex x3 = " +
                               std::to_string(max_x3) + ")");
  }
  return TriangleMesh(std::move(verts), shape.faces());
}

bool point_inside(const TriangleMesh& mesh, const Vec3& x) {
  // Generalized winding number: sum of signed solid angles / 4 pi.
  double omega = 0.0;
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto c = mesh.corners(f);
    const Vec3 a = c[0] - x;
    const Vec3 b = c[1] - x;
    const Vec3 d = c[2] - x;
    const double la = a.norm(), lb = b.norm(), ld = d.norm();
    const double num = a.dot(b.cross(d));
    const double den = la * lb * ld + a.dot(b) * ld + b.dot(d) * la + d.dot(a) * lb;
    omega += 2.0 * std::atan2(num, den);
  }
  return std::abs(omega) > 2.0 * M_PI;  // winding 1 gives 4 pi, outside gives 0
}

// Closest point on triangle abc (Ericson, Real-Time Collision Detection 5.1.5).
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
  }

  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

double distance_to_surface(const TriangleMesh& mesh, const Vec3& x) {
  double best = std::numeric_limits<double>::infinity();
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto c = mesh.corners(f);
    best = std::min(best, (x - closest_point_on_triangle(x, c[0], c[1], c[2])).norm());
  }
  return best;
}

}  // namespace halfbem
