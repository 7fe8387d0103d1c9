#ifndef HALFBEM_DENSE_HPP_
#define HALFBEM_DENSE_HPP_

#include <Eigen/Dense>

namespace halfbem {

/// Assembled boundary operator (3N x 3N, column-major) and right-hand side.
struct DenseOperator {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  int faces = 0;
};

/// Partial-pivot LU solve, in place on a copy of the matrix.
/// Throws SingularSystem when a pivot falls below 1e-13 * max|A|.
Eigen::VectorXd lu_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// Same, factoring the given matrix in place (the contents are destroyed).
/// b may have several columns.
Eigen::MatrixXd lu_solve_in_place(Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace halfbem

#endif  // HALFBEM_DENSE_HPP_
