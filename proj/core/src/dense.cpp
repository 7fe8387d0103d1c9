#include "halfbem/dense.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "halfbem/errors.hpp"

// LAPACK partial-pivot LU on column-major storage.
extern "C" {
void dgetrf_(const int* m, const int* n, double* a, const int* lda, int* ipiv, int* info);
void dgetrs_(const char* trans, const int* n, const int* nrhs, const double* a, const int* lda,
             const int* ipiv, double* b, const int* ldb, int* info);
}

namespace halfbem {

Eigen::MatrixXd lu_solve_in_place(Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.rows() != n) throw SingularSystem("dimension mismatch in lu_solve");

  const double scale = a.cwiseAbs().maxCoeff();
  std::vector<int> ipiv(n);
  int info = 0;
  dgetrf_(&n, &n, a.data(), &n, ipiv.data(), &info);
  if (info < 0) throw SingularSystem("dgetrf: illegal argument " + std::to_string(-info));

  const double pivot_floor = 1e-13 * scale;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) min_pivot = std::min(min_pivot, std::abs(a(i, i)));
  if (info > 0 || min_pivot < pivot_floor) {
    throw SingularSystem("singular boundary operator: smallest LU pivot " +
                         std::to_string(min_pivot) + " below " + std::to_string(pivot_floor));
  }

  Eigen::MatrixXd x = b;
  const int nrhs = static_cast<int>(b.cols());
  const char trans = 'N';
  dgetrs_(&trans, &n, &nrhs, a.data(), &n, ipiv.data(), x.data(), &n, &info);
  if (info != 0) throw SingularSystem("dgetrs failed: info " + std::to_string(info));
  return x;
}

Eigen::VectorXd lu_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::MatrixXd work = a;
  return lu_solve_in_place(work, b);
}

}  // namespace halfbem
