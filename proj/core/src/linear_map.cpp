#include "lcpkit/linear_map.hpp"

#include <cmath>
#include <stdexcept>

namespace lcpkit {

SparseLinearMap::SparseLinearMap(
    int rows, int cols, const std::vector<Eigen::Triplet<double>>& triplets)
    : matrix_(rows, cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("SparseLinearMap: dimensions must be positive");
  }
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();
}

double SparseLinearMap::operator_norm() const {
  if (operator_norm_ >= 0.0) return operator_norm_;
  const int n = cols();
  // Deterministic start with a mild ramp so it is not orthogonal to the
  // dominant eigenvector for structured matrices.
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / n;
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 1000; ++it) {
    Vector w = apply_adjoint(apply(v));
    double norm = w.norm();
    if (norm == 0.0) {
      operator_norm_ = 0.0;
      return operator_norm_;
    }
    double next = v.dot(w);
    v = w / norm;
    if (it > 0 && std::abs(next - lambda) <= 1e-8 * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  operator_norm_ = std::sqrt(std::max(lambda, 0.0));
  return operator_norm_;
}

}  // namespace lcpkit
