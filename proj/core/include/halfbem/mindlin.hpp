#ifndef HALFBEM_MINDLIN_HPP_
#define HALFBEM_MINDLIN_HPP_

#include "halfbem/moduli.hpp"
#include "halfbem/types.hpp"

namespace halfbem {

/// Homogeneous pieces of the Mindlin image correction, evaluated at
/// eta = x - (y1, y2, -y3). The full correction is
/// R(x, y) = R1(eta) + y3 R2(eta) + y3^2 R3(eta).
struct RegularParts {
  Mat3 r1, r2, r3;
};

RegularParts regular_components(const Vec3& eta, const ElasticModuli& m);

/// Gradients of the pieces with respect to eta.
struct RegularPartsGrad {
  Tensor333 r1, r2, r3;
};

RegularPartsGrad regular_components_grad(const Vec3& eta, const ElasticModuli& m);

/// Smooth part of the half-space Neumann function. x is the field point
/// (x3 <= 0), y the source (y3 < 0). Finite for all valid inputs,
/// including x == y.
Mat3 regular_part(const Vec3& x, const Vec3& y, const ElasticModuli& m);

/// Gradient of regular_part in the field point x.
Tensor333 regular_part_grad(const Vec3& x, const Vec3& y, const ElasticModuli& m);

/// Traction (in x, normal n) of the columns of regular_part.
Mat3 regular_traction(const Vec3& x, const Vec3& n, const Vec3& y, const ElasticModuli& m);

/// Half-space Neumann function N = Gamma(x - y) + R(x, y): zero traction
/// on the plane x3 = 0, Dirac source at y.
Mat3 neumann(const Vec3& x, const Vec3& y, const ElasticModuli& m);

/// Gradient of the Neumann function in the field point x.
Tensor333 neumann_grad(const Vec3& x, const Vec3& y, const ElasticModuli& m);

/// Traction (in x, normal n) of the Neumann columns. Vanishes on x3 = 0.
Mat3 neumann_traction(const Vec3& x, const Vec3& n, const Vec3& y, const ElasticModuli& m);

/// Neumann matrix of a unit-depth point source at (0, 0, -1), from the
/// Papkovich-Neuber closed forms. Kept as an independent evaluation path:
/// N(x, y) = (1/|y3|) * neumann_unit_source((x1-y1, x2-y2, x3) / |y3|).
Mat3 neumann_unit_source(const Vec3& x, const ElasticModuli& m);

}  // namespace halfbem

#endif  // HALFBEM_MINDLIN_HPP_
