#ifndef LCPKIT_OBJECTIVE_HPP_
#define LCPKIT_OBJECTIVE_HPP_

#include <functional>
#include <memory>

#include "lcpkit/linear_map.hpp"

namespace lcpkit {

// Smooth convex objective with a known gradient Lipschitz constant.
// `exact_linesearch(y, x)`, when present, returns
// argmin_{alpha in [0,1]} f((1-alpha) y + alpha x).
struct SmoothObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> grad;
  double lipschitz = 0.0;
  double strong_convexity = 0.0;
  std::function<double(const Vector&, const Vector&)> exact_linesearch;
};

// Nonsmooth convex objective |f(x) - f(y)| <= lipschitz * ||x - y||_2.
struct NonsmoothObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> subgrad;
  double lipschitz = 0.0;
};

// f(x) = ||A x - b||_2^2 with a sparse operator A.
class QuadraticObjective {
 public:
  QuadraticObjective(std::shared_ptr<const SparseLinearMap> a, Vector b);

  double value(const Vector& x) const;
  Vector grad(const Vector& x) const;  // 2 A^T (A x - b)

  // 2 ||A||_2^2, with ||A||_2 from power iteration on A^T A.
  double lipschitz() const { return 2.0 * a_->operator_norm() * a_->operator_norm(); }

  // Minimizer of alpha -> f(y + alpha (x - y)) over [0,1], closed form.
  double linesearch(const Vector& y, const Vector& x) const;

  const SparseLinearMap& op() const { return *a_; }
  std::shared_ptr<const SparseLinearMap> op_ptr() const { return a_; }
  const Vector& rhs() const { return b_; }

  SmoothObjective as_smooth() const;

 private:
  std::shared_ptr<const SparseLinearMap> a_;
  Vector b_;
};

}  // namespace lcpkit

#endif  // LCPKIT_OBJECTIVE_HPP_
