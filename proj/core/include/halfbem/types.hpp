#ifndef HALFBEM_TYPES_HPP_
#define HALFBEM_TYPES_HPP_

#include <Eigen/Dense>
#include <array>

namespace halfbem {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Gradient of a 3x3 matrix field: comp[k](i,j) = d M_ij / d x_k.
struct Tensor333 {
  std::array<Mat3, 3> comp;

  const Mat3& operator[](int k) const { return comp[k]; }
  Mat3& operator[](int k) { return comp[k]; }

  double operator()(int i, int j, int k) const { return comp[k](i, j); }

  /// Column-k slice as a Jacobian: J(i,m) = d M_ik / d x_m.
  Mat3 column_jacobian(int k) const {
    Mat3 J;
    for (int i = 0; i < 3; ++i)
      for (int m = 0; m < 3; ++m) J(i, m) = comp[m](i, k);
    return J;
  }

  static Tensor333 Zero() {
    Tensor333 t;
    t.comp = {Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
    return t;
  }
};

}  // namespace halfbem

#endif  // HALFBEM_TYPES_HPP_
