#ifndef HALFBEM_FIELD_HPP_
#define HALFBEM_FIELD_HPP_

#include <vector>

#include "halfbem/errors.hpp"
#include "halfbem/mesh.hpp"
#include "halfbem/types.hpp"

namespace halfbem {

/// One 3-vector per panel of a mesh (traces, tractions, layer densities).
struct BoundaryField {
  const TriangleMesh* mesh = nullptr;
  std::vector<Vec3> values;

  BoundaryField() = default;
  explicit BoundaryField(const TriangleMesh& m)
      : mesh(&m), values(m.face_count(), Vec3::Zero()) {}
  BoundaryField(const TriangleMesh& m, std::vector<Vec3> vals)
      : mesh(&m), values(std::move(vals)) {
    if (static_cast<int>(values.size()) != m.face_count()) {
      throw MeshMismatch("boundary field length differs from face count");
    }
    for (const Vec3& v : values) {
      if (!v.allFinite()) throw MeshMismatch("boundary field has non-finite entries");
    }
  }

  int size() const { return static_cast<int>(values.size()); }
  Vec3& operator[](int i) { return values[i]; }
  const Vec3& operator[](int i) const { return values[i]; }

  Eigen::VectorXd stacked() const {
    Eigen::VectorXd v(3 * values.size());
    for (size_t i = 0; i < values.size(); ++i) v.segment<3>(3 * i) = values[i];
    return v;
  }

  static BoundaryField from_stacked(const TriangleMesh& m, const Eigen::VectorXd& v) {
    if (v.size() != 3 * m.face_count()) {
      throw MeshMismatch("stacked vector length differs from 3 * face count");
    }
    if (!v.allFinite()) throw MeshMismatch("boundary field has non-finite entries");
    BoundaryField f(m);
    for (int i = 0; i < m.face_count(); ++i) f.values[i] = v.segment<3>(3 * i);
    return f;
  }
};

}  // namespace halfbem

#endif  // HALFBEM_FIELD_HPP_
