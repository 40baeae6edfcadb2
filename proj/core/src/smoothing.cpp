#include "lcpkit/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace lcpkit {

ProxSetup ProxSetup::entropy_simplex(int m) {
  if (m < 1) throw std::invalid_argument("entropy_simplex: m must be >= 1");
  ProxSetup p;
  p.kind_ = Kind::EntropySimplex;
  p.m_ = m;
  return p;
}

ProxSetup ProxSetup::half_squared_ball(Vector center, double radius) {
  if (center.size() == 0) {
    throw std::invalid_argument("half_squared_ball: empty center");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("half_squared_ball: radius must be positive");
  }
  ProxSetup p;
  p.kind_ = Kind::HalfSquaredBall;
  p.m_ = static_cast<int>(center.size());
  p.center_ = std::move(center);
  p.radius_ = radius;
  return p;
}

Vector ProxSetup::prox_center() const {
  if (kind_ == Kind::EntropySimplex) {
    return Vector::Constant(m_, 1.0 / m_);
  }
  return center_;
}

double ProxSetup::d_squared() const {
  if (kind_ == Kind::EntropySimplex) return std::log(static_cast<double>(m_));
  return 0.5 * radius_ * radius_;
}

double ProxSetup::bregman(const Vector& y) const {
  if (y.size() != m_) throw std::invalid_argument("bregman: dimension mismatch");
  if (kind_ == Kind::EntropySimplex) {
    double v = std::log(static_cast<double>(m_));
    for (int i = 0; i < m_; ++i) {
      if (y[i] > 0.0) v += y[i] * std::log(y[i]);
    }
    return v;
  }
  return 0.5 * (y - center_).squaredNorm();
}

SaddleObjective::SaddleObjective(Matrix a, ProxSetup prox)
    : a_(std::move(a)), prox_(std::move(prox)) {
  if (a_.rows() != prox_.dual_dim()) {
    throw std::invalid_argument("SaddleObjective: A rows must match dual dim");
  }
  // Power iteration on A^T A; deterministic ramp start as elsewhere.
  const int n = static_cast<int>(a_.cols());
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / n;
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 2000; ++it) {
    Vector w = a_.transpose() * (a_ * v);
    double norm = w.norm();
    if (norm == 0.0) {
      a_norm_ = 0.0;
      return;
    }
    double next = v.dot(w);
    v = w / norm;
    if (it > 0 && std::abs(next - lambda) <= 1e-12 * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  a_norm_ = std::sqrt(std::max(lambda, 0.0));
}

double SaddleObjective::value_exact(const Vector& x) const {
  Vector ax = a_ * x;
  if (prox_.kind() == ProxSetup::Kind::EntropySimplex) {
    return ax.maxCoeff();
  }
  return ax.dot(prox_.center()) + prox_.radius() * ax.norm();
}

SmoothedEval SaddleObjective::smoothed(const Vector& x, double eta) const {
  if (!(eta > 0.0)) {
    throw std::invalid_argument("smoothed: eta must be positive");
  }
  Vector ax = a_ * x;
  SmoothedEval out;
  const double d2 = prox_.d_squared();
  if (prox_.kind() == ProxSetup::Kind::EntropySimplex) {
    // y* proportional to exp((Ax)_i / eta); shift by the max for safety.
    const double amax = ax.maxCoeff();
    Vector y = ((ax.array() - amax) / eta).exp();
    const double z = y.sum();
    y /= z;
    // sum_i y_i log y_i = (<y, ax> - amax)/eta - log z, computed stably.
    const double entropy_term = (y.dot(ax) - amax) / eta - std::log(z);
    const double breg = entropy_term + std::log(static_cast<double>(prox_.dual_dim()));
    out.value = y.dot(ax) - eta * (breg - d2);
    out.maximizer = std::move(y);
  } else {
    Vector z = ax / eta;
    const double zn = z.norm();
    Vector y = prox_.center();
    if (zn <= prox_.radius()) {
      y += z;
    } else {
      y += (prox_.radius() / zn) * z;
    }
    const double breg = 0.5 * (y - prox_.center()).squaredNorm();
    out.value = y.dot(ax) - eta * (breg - d2);
    out.maximizer = std::move(y);
  }
  out.grad = a_.transpose() * out.maximizer;
  return out;
}

SmoothedEval smoothed_value_grad(const SaddleObjective& s, const Vector& x,
                                 double eta) {
  return s.smoothed(x, eta);
}

std::pair<double, double> sandwich_check(const SaddleObjective& s,
                                         const Vector& x, double eta) {
  return {s.value_exact(x), s.smoothed(x, eta).value};
}

double eta_schedule(int k, double a_norm, double d_x, double d_yv,
                    double sigma_v) {
  if (k < 1) throw std::invalid_argument("eta_schedule: k must be >= 1");
  if (!(a_norm > 0.0) || !(d_x > 0.0) || !(sigma_v > 0.0)) {
    throw std::invalid_argument("eta_schedule: parameters must be positive");
  }
  if (!(d_yv > 0.0)) {
    throw std::invalid_argument("eta_schedule: d_yv must be positive");
  }
  return a_norm * d_x / (d_yv * std::sqrt(sigma_v * k));
}

std::pair<int, double> u_schedule(int k, int n, double d_x) {
  if (k < 1 || n < 1 || !(d_x > 0.0)) {
    throw std::invalid_argument("u_schedule: parameters must be positive");
  }
  double u = std::pow(static_cast<double>(n), 0.25) * d_x / std::sqrt(k);
  return {k, u};
}

Vector sample_ball(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_ball: n must be >= 1");
  Vector dir(n);
  for (int i = 0; i < n; ++i) dir[i] = rng.normal();
  double norm = dir.norm();
  if (norm == 0.0) return Vector::Zero(n);
  double r = std::pow(rng.uniform(), 1.0 / n);
  return (r / norm) * dir;
}

RandomizedSmoother::RandomizedSmoother(int n, std::uint64_t seed, bool recycle)
    : n_(n), recycle_(recycle), rng_(seed) {
  if (n < 1) throw std::invalid_argument("RandomizedSmoother: n must be >= 1");
}

const Vector& RandomizedSmoother::sample(int t) {
  if (t < 0) throw std::invalid_argument("RandomizedSmoother: bad index");
  while (static_cast<int>(cache_.size()) <= t) {
    cache_.push_back(sample_ball(n_, rng_));
  }
  return cache_[static_cast<std::size_t>(t)];
}

Vector RandomizedSmoother::average_gradient(
    const std::function<Vector(const Vector&)>& subgrad, const Vector& y,
    double u, int T) {
  if (T < 1) throw std::invalid_argument("average_gradient: T must be >= 1");
  if (!(u > 0.0)) throw std::invalid_argument("average_gradient: u must be > 0");
  Vector acc = Vector::Zero(y.size());
  for (int t = 0; t < T; ++t) {
    const Vector xi = recycle_ ? sample(t) : sample_ball(n_, rng_);
    acc += subgrad(y + u * xi);
  }
  return acc / T;
}

Vector randomized_grad(const std::function<Vector(const Vector&)>& subgrad,
                       const Vector& y, double u, int T,
                       RandomizedSmoother& smoother) {
  return smoother.average_gradient(subgrad, y, u, T);
}

}  // namespace lcpkit
