#ifndef LCPKIT_SMOOTHING_HPP_
#define LCPKIT_SMOOTHING_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lcpkit/linear_map.hpp"
#include "lcpkit/objective.hpp"
#include "lcpkit/rng.hpp"

namespace lcpkit {

// Dual prox setup for a bilinear saddle objective. Two closed-form
// variants are supported: negative entropy over the standard simplex
// (strongly convex modulus 1 w.r.t. l1) and half squared norm over a
// Euclidean ball (modulus 1 w.r.t. l2).
class ProxSetup {
 public:
  static ProxSetup entropy_simplex(int m);
  static ProxSetup half_squared_ball(Vector center, double radius);

  enum class Kind { EntropySimplex, HalfSquaredBall };

  Kind kind() const { return kind_; }
  int dual_dim() const { return m_; }
  double radius() const { return radius_; }
  const Vector& center() const { return center_; }

  // Prox center: uniform distribution or the ball center.
  Vector prox_center() const;
  double sigma() const { return 1.0; }
  // Max Bregman distance over the dual set: log m, or radius^2 / 2.
  double d_squared() const;
  // Bregman distance V(y) from the prox center.
  double bregman(const Vector& y) const;

 private:
  Kind kind_ = Kind::EntropySimplex;
  int m_ = 0;
  double radius_ = 0.0;
  Vector center_;
};

struct SmoothedEval {
  double value = 0.0;
  Vector grad;
  Vector maximizer;
};

// f(x) = max_{y in Y} <A x, y> over a prox-capable dual set Y. The simple
// dual term of the saddle class is fixed to zero here; a nonzero term
// would slot into ProxSetup alongside the Bregman machinery.
class SaddleObjective {
 public:
  SaddleObjective(Matrix a, ProxSetup prox);

  const Matrix& a() const { return a_; }
  const ProxSetup& prox() const { return prox_; }
  int primal_dim() const { return static_cast<int>(a_.cols()); }
  // Spectral norm of A, the conservative pairing for both prox setups.
  double a_norm() const { return a_norm_; }

  // Exact f(x) by linear maximization over Y.
  double value_exact(const Vector& x) const;

  // Smoothed value, gradient and exact dual maximizer at parameter eta:
  // f_eta(x) = max_y { <Ax, y> - eta [V(y) - D^2] }. The maximizer has a
  // closed form for both setups (overflow-safe softmax, or a clipped
  // scaling onto the ball).
  SmoothedEval smoothed(const Vector& x, double eta) const;

 private:
  Matrix a_;
  ProxSetup prox_;
  double a_norm_ = 0.0;
};

// Smoothed value and gradient; declared as the module operation.
SmoothedEval smoothed_value_grad(const SaddleObjective& s, const Vector& x,
                                 double eta);

// Returns (f(x), f_eta(x)); the caller asserts f <= f_eta <= f + eta D^2.
std::pair<double, double> sandwich_check(const SaddleObjective& s,
                                         const Vector& x, double eta);

// eta_k = a_norm * d_x / (d_yv * sqrt(sigma_v * k)), nonincreasing in k.
double eta_schedule(int k, double a_norm, double d_x, double d_yv,
                    double sigma_v);

// (T_k, u_k) = (k, n^{1/4} d_x / sqrt(k)).
std::pair<int, double> u_schedule(int k, int n, double d_x);

// Uniform draw from the unit l2 ball: normalized Gaussian direction
// scaled by U^{1/n}.
Vector sample_ball(int n, RngStream& rng);

// Cache of unit-ball samples shared across iterations; the first T
// samples of a stream are reused (recycled) by every caller unless
// fresh-sample mode is requested.
class RandomizedSmoother {
 public:
  RandomizedSmoother(int n, std::uint64_t seed, bool recycle = true);

  const Vector& sample(int t);  // grows the cache on demand
  int cached() const { return static_cast<int>(cache_.size()); }
  bool recycling() const { return recycle_; }

  // Average of subgradients at y + u * xi_t over t = 1..T.
  Vector average_gradient(
      const std::function<Vector(const Vector&)>& subgrad, const Vector& y,
      double u, int T);

 private:
  int n_;
  bool recycle_;
  RngStream rng_;
  std::vector<Vector> cache_;
};

// Module-level wrapper around RandomizedSmoother::average_gradient.
Vector randomized_grad(const std::function<Vector(const Vector&)>& subgrad,
                       const Vector& y, double u, int T,
                       RandomizedSmoother& smoother);

}  // namespace lcpkit

#endif  // LCPKIT_SMOOTHING_HPP_
