#include "lcpkit/objective.hpp"

#include <stdexcept>

namespace lcpkit {

QuadraticObjective::QuadraticObjective(
    std::shared_ptr<const SparseLinearMap> a, Vector b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (!a_) throw std::invalid_argument("QuadraticObjective: null operator");
  if (a_->rows() != b_.size()) {
    throw std::invalid_argument("QuadraticObjective: rhs dimension mismatch");
  }
}

double QuadraticObjective::value(const Vector& x) const {
  return (a_->apply(x) - b_).squaredNorm();
}

Vector QuadraticObjective::grad(const Vector& x) const {
  return 2.0 * a_->apply_adjoint(a_->apply(x) - b_);
}

double QuadraticObjective::linesearch(const Vector& y, const Vector& x) const {
  // f(y + alpha d) with d = x - y; stationary point
  // alpha* = <A y - b, A(y - x)> / ||A(y - x)||^2, clamped to [0,1].
  Vector ad = a_->apply(y - x);
  double denom = ad.squaredNorm();
  if (denom == 0.0) return 0.0;
  double alpha = (a_->apply(y) - b_).dot(ad) / denom;
  return std::min(1.0, std::max(0.0, alpha));
}

SmoothObjective QuadraticObjective::as_smooth() const {
  auto self = std::make_shared<QuadraticObjective>(*this);
  SmoothObjective f;
  f.value = [self](const Vector& x) { return self->value(x); };
  f.grad = [self](const Vector& x) { return self->grad(x); };
  f.lipschitz = lipschitz();
  f.exact_linesearch = [self](const Vector& y, const Vector& x) {
    return self->linesearch(y, x);
  };
  return f;
}

}  // namespace lcpkit
