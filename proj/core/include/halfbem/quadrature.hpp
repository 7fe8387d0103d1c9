#ifndef HALFBEM_QUADRATURE_HPP_
#define HALFBEM_QUADRATURE_HPP_

#include <array>
#include <functional>
#include <vector>

#include "halfbem/types.hpp"

namespace halfbem {

/// Quadrature rule on the reference triangle in barycentric coordinates;
/// weights sum to one (scale by the physical area).
struct TriangleRule {
  std::vector<Vec3> bary;
  std::vector<double> weights;
  int size() const { return static_cast<int>(weights.size()); }
};

/// Degree-5 symmetric 7-point rule.
const TriangleRule& triangle_rule_7();

/// Gauss-Legendre nodes and weights on [0, 1].
struct LineRule {
  std::vector<double> x;
  std::vector<double> w;
};
const LineRule& gauss_legendre_01(int n);

/// Splits a triangle into its 4 midpoint children.
std::array<std::array<Vec3, 3>, 4> split4(const std::array<Vec3, 3>& tri);

/// Integrates f over the triangle with a kernel that is O(1/|x - pole|)
/// at an interior pole: the triangle is fanned into three sub-triangles at
/// the pole and each is mapped to the unit square, where the Jacobian
/// cancels the singularity. n1d Gauss points per direction.
void integrate_singular(const std::array<Vec3, 3>& tri, const Vec3& pole, int n1d,
                        const std::function<void(const Vec3& x, double w)>& accumulate);

}  // namespace halfbem

#endif  // HALFBEM_QUADRATURE_HPP_
