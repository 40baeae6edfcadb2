#ifndef LCPKIT_LINEAR_MAP_HPP_
#define LCPKIT_LINEAR_MAP_HPP_

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <vector>

namespace lcpkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Sparse linear map R^cols -> R^rows stored in compressed-row form.
// Spectrahedron operators are represented the same way: each row is the
// vectorization of a sparse symmetric matrix, acting on vec(x) by the
// Frobenius inner product.
class SparseLinearMap {
 public:
  SparseLinearMap(int rows, int cols,
                  const std::vector<Eigen::Triplet<double>>& triplets);

  Vector apply(const Vector& x) const { return matrix_ * x; }
  Vector apply_adjoint(const Vector& r) const {
    return matrix_.transpose() * r;
  }

  int rows() const { return static_cast<int>(matrix_.rows()); }
  int cols() const { return static_cast<int>(matrix_.cols()); }
  long long nonzeros() const { return matrix_.nonZeros(); }

  // Largest singular value, estimated by power iteration on A^T A
  // (relative tolerance 1e-8, at most 1000 iterations). Cached.
  double operator_norm() const;

  const Eigen::SparseMatrix<double, Eigen::RowMajor>& matrix() const {
    return matrix_;
  }

 private:
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix_;
  mutable double operator_norm_ = -1.0;
};

}  // namespace lcpkit

#endif  // LCPKIT_LINEAR_MAP_HPP_
