#ifndef HALFBEM_KELVIN_HPP_
#define HALFBEM_KELVIN_HPP_

#include "halfbem/moduli.hpp"
#include "halfbem/types.hpp"

namespace halfbem {

/// Kelvin matrix: fundamental solution of the isotropic elastostatic
/// operator, Gamma_ij(x) = -Cmn { (3-4nu) d_ij / |x| + x_i x_j / |x|^3 }.
/// Symmetric, even, homogeneous of degree -1.
Mat3 kelvin(const Vec3& x, const ElasticModuli& m);

/// Gradient of the Kelvin matrix, [k](i,j) = d Gamma_ij / d x_k.
Tensor333 kelvin_grad(const Vec3& x, const ElasticModuli& m);

/// Traction matrix of the Kelvin columns: column k equals
/// (C sym(grad Gamma^(k)))(x) n. Homogeneous of degree -2.
Mat3 kelvin_traction(const Vec3& x, const Vec3& n, const ElasticModuli& m);

/// Same traction assembled from kelvin_grad and the stiffness tensor;
/// independent route kept for cross-checking the closed form.
Mat3 kelvin_traction_from_grad(const Vec3& x, const Vec3& n, const ElasticModuli& m);

}  // namespace halfbem

#endif  // HALFBEM_KELVIN_HPP_
