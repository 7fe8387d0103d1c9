#ifndef HALFBEM_MODULI_HPP_
#define HALFBEM_MODULI_HPP_

#include "halfbem/types.hpp"

namespace halfbem {

/// Isotropic elastic constants plus the derived kernel coefficients that
/// appear throughout the Kelvin and Mindlin kernels.
///
/// Valid range: mu > 0 and 3*lambda + 2*mu > 0 (positive definite stiffness).
struct ElasticModuli {
  double lambda;  ///< first Lame parameter
  double mu;      ///< shear modulus
  double nu;      ///< Poisson ratio, nu = lambda / (2 (lambda + mu))
  double cmn;     ///< 1 / (16 pi mu (1 - nu))
  double cnu;     ///< 4 (1 - nu) (1 - 2 nu)
  double cpnu;    ///< (1 - 2 nu) / (8 pi (1 - nu))
  double kmu;     ///< 1 / (4 pi mu)

  /// Applies the isotropic stiffness tensor to a (not necessarily symmetric)
  /// matrix: C A = lambda tr(A) I + 2 mu sym(A).
  Mat3 apply_stiffness(const Mat3& a) const;

  /// Traction of a displacement gradient: (C sym(grad)) n.
  Vec3 traction(const Mat3& grad, const Vec3& n) const;

  /// Component C_ijqr of the isotropic stiffness tensor.
  double stiffness(int i, int j, int q, int r) const;
};

ElasticModuli moduli_from_lame(double lambda, double mu);
ElasticModuli moduli_from_poisson(double nu, double mu);

}  // namespace halfbem

#endif  // HALFBEM_MODULI_HPP_
