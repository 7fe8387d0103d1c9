#ifndef HALFBEM_MESH_HPP_
#define HALFBEM_MESH_HPP_

#include <array>
#include <string>
#include <vector>

#include "halfbem/types.hpp"

namespace halfbem {

/// Closed, outward-oriented triangulation of a cavity boundary.
///
/// Per-face centroids, unit normals and areas are derived once at
/// construction; instances are immutable afterwards and safe to share
/// across threads.
class TriangleMesh {
 public:
  TriangleMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  const Vec3& centroid(int f) const { return centroids_[f]; }
  const Vec3& normal(int f) const { return normals_[f]; }
  double area(int f) const { return areas_[f]; }
  /// Longest edge of face f.
  double diameter(int f) const { return diameters_[f]; }

  std::array<Vec3, 3> corners(int f) const;

  double total_area() const { return total_area_; }
  /// Volume by the divergence theorem; positive for outward orientation.
  double signed_volume() const { return signed_volume_; }
  double bounding_box_scale() const { return bbox_scale_; }
  double max_diameter() const { return max_diameter_; }

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<Vec3> centroids_;
  std::vector<Vec3> normals_;
  std::vector<double> areas_;
  std::vector<double> diameters_;
  double total_area_ = 0.0;
  double signed_volume_ = 0.0;
  double bbox_scale_ = 0.0;
  double max_diameter_ = 0.0;
};

/// Unit-radius sphere mesh with 20 * 4^subdivisions faces.
TriangleMesh icosphere(int subdivisions);

struct MeshReport {
  bool closed = false;
  bool oriented = false;
  double signed_volume = 0.0;
  double min_area = 0.0;
  double max_area = 0.0;
  double normal_area_sum = 0.0;  ///< |sum_i area_i n_i|, zero for closed meshes
  int open_edges = 0;
  int misoriented_edges = 0;
  int degenerate_faces = 0;
};

/// Runs the closedness/orientation/degeneracy checks.
/// Throws MeshOpen, MeshInverted or MeshDegenerateFace on violations.
MeshReport mesh_validate(const TriangleMesh& mesh);

/// Same checks, reported without throwing.
MeshReport mesh_diagnose(const TriangleMesh& mesh);

/// Maps a unit-scale shape to the cavity z + epsilon * Omega.
/// Throws CavityTouchesSurface unless every vertex stays strictly below
/// the plane x3 = 0.
TriangleMesh place_cavity(const TriangleMesh& shape, double epsilon, const Vec3& z);

/// True if x lies inside the closed surface (winding number by solid angles).
bool point_inside(const TriangleMesh& mesh, const Vec3& x);

/// Distance from x to the nearest point of the triangulated surface.
double distance_to_surface(const TriangleMesh& mesh, const Vec3& x);

/// Closest point of triangle abc to p.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace halfbem

#endif  // HALFBEM_MESH_HPP_
