#ifndef HALFBEM_LAYERS_HPP_
#define HALFBEM_LAYERS_HPP_

#include <utility>

#include "halfbem/field.hpp"
#include "halfbem/mesh.hpp"
#include "halfbem/moduli.hpp"

namespace halfbem {

/// Collocation discretization of the boundary operators over a closed
/// cavity mesh: piecewise-constant vector densities, collocation at panel
/// centroids, 3x3 blocks per panel pair stored in a dense 3N x 3N
/// column-major matrix.
///
/// Kernel placement follows the Somigliana identity: the double-layer
/// block applies the transposed Kelvin traction taken at the source panel,
/// so that the discrete operator reproduces rigid motions (K r = r/2) and
/// the adjoint below is the plain traction of the single layer.

/// Single layer: block(i,j) = integral over panel j of Gamma(c_i - y).
/// Self-blocks use the singularity-cancelling fan quadrature.
Eigen::MatrixXd assemble_single_layer(const TriangleMesh& mesh, const ElasticModuli& m);

/// Principal-value double layer K. Off-diagonal blocks by quadrature of
/// the transposed source-point traction; diagonal blocks enforce the
/// rigid-translation identity K r = r/2 row by row.
Eigen::MatrixXd assemble_double_layer(const TriangleMesh& mesh, const ElasticModuli& m);

/// Adjoint K*: traction of the single layer at the collocation point.
/// Diagonal blocks enforce the force balance of the exterior field
/// (area-weighted column sums equal half the identity).
Eigen::MatrixXd assemble_adjoint_double_layer(const TriangleMesh& mesh, const ElasticModuli& m);

/// Smooth image-part operators S^R and D^R of a cavity strictly inside
/// the half-space.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> assemble_regular_ops(const TriangleMesh& cavity,
                                                                 const ElasticModuli& m);

enum class PotentialKind {
  SingleKelvin,
  DoubleKelvin,
  SingleRegular,
  DoubleRegular,
};

/// Evaluates a layer potential off the boundary. Panels closer than three
/// diameters to the target are split recursively before quadrature.
/// Throws PointOnBoundary when the target touches the surface.
Vec3 eval_potential(PotentialKind kind, const Vec3& x, const TriangleMesh& mesh,
                    const BoundaryField& density, const ElasticModuli& m);

}  // namespace halfbem

#endif  // HALFBEM_LAYERS_HPP_
