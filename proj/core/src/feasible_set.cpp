#include "lcpkit/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace lcpkit {

namespace {

void require_finite(const Vector& p, const char* who) {
  if (!p.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

Eigen::Map<const Matrix> as_matrix(const Vector& x, int side) {
  return Eigen::Map<const Matrix>(x.data(), side, side);
}

}  // namespace

Vector lmo_simplex(const Vector& p, double scale) {
  if (p.size() == 0) throw std::invalid_argument("lmo_simplex: empty vector");
  if (!(scale > 0.0)) {
    throw std::invalid_argument("lmo_simplex: scale must be positive");
  }
  require_finite(p, "lmo_simplex");
  int best = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p[i] < p[best]) best = i;
  }
  Vector x = Vector::Zero(p.size());
  x[best] = scale;
  return x;
}

Vector lmo_hypercube(const Vector& p) {
  if (p.size() == 0) throw std::invalid_argument("lmo_hypercube: empty vector");
  require_finite(p, "lmo_hypercube");
  Vector x = Vector::Zero(p.size());
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) x[i] = 1.0;
  }
  return x;
}

Vector lmo_knapsack_box(const Vector& p, double ratio) {
  if (p.size() == 0) {
    throw std::invalid_argument("lmo_knapsack_box: empty vector");
  }
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw std::invalid_argument("lmo_knapsack_box: ratio outside (0,1]");
  }
  require_finite(p, "lmo_knapsack_box");
  const int n = static_cast<int>(p.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&p](int a, int b) { return p[a] < p[b]; });
  Vector x = Vector::Zero(n);
  double budget = ratio * n;
  for (int idx : order) {
    if (p[idx] >= 0.0 || budget <= 0.0) break;
    double take = std::min(1.0, budget);
    x[idx] = take;
    budget -= take;
  }
  return x;
}

Matrix lmo_spectrahedron(const Matrix& p) {
  if (p.rows() == 0 || p.rows() != p.cols()) {
    throw std::invalid_argument("lmo_spectrahedron: matrix must be square");
  }
  if (!p.allFinite()) {
    throw std::invalid_argument("lmo_spectrahedron: non-finite entries");
  }
  Matrix sym = 0.5 * (p + p.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("lmo_spectrahedron: eigendecomposition failed");
  }
  Vector v = eig.eigenvectors().col(0);  // eigenvalues sorted ascending
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  return v * v.transpose();
}

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::ScaledSimplex: return "simplex";
    case SetKind::Spectrahedron: return "spectrahedron";
    case SetKind::Hypercube: return "hypercube";
    case SetKind::KnapsackBox: return "knapsack_box";
    case SetKind::EuclideanBall: return "euclidean_ball";
  }
  return "unknown";
}

FeasibleSet FeasibleSet::scaled_simplex(int n, double scale) {
  if (n < 1) throw std::invalid_argument("scaled_simplex: n must be >= 1");
  if (!(scale > 0.0)) {
    throw std::invalid_argument("scaled_simplex: scale must be positive");
  }
  FeasibleSet s;
  s.kind_ = SetKind::ScaledSimplex;
  s.dim_ = n;
  s.scale_ = scale;
  return s;
}

FeasibleSet FeasibleSet::spectrahedron(int side) {
  if (side < 1) throw std::invalid_argument("spectrahedron: side must be >= 1");
  FeasibleSet s;
  s.kind_ = SetKind::Spectrahedron;
  s.side_ = side;
  s.dim_ = side * side;
  return s;
}

FeasibleSet FeasibleSet::hypercube(int n) {
  if (n < 1) throw std::invalid_argument("hypercube: n must be >= 1");
  FeasibleSet s;
  s.kind_ = SetKind::Hypercube;
  s.dim_ = n;
  return s;
}

FeasibleSet FeasibleSet::knapsack_box(int n, double ratio) {
  if (n < 1) throw std::invalid_argument("knapsack_box: n must be >= 1");
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw std::invalid_argument("knapsack_box: ratio outside (0,1]");
  }
  FeasibleSet s;
  s.kind_ = SetKind::KnapsackBox;
  s.dim_ = n;
  s.ratio_ = ratio;
  return s;
}

FeasibleSet FeasibleSet::euclidean_ball(Vector center, double radius) {
  if (center.size() == 0) {
    throw std::invalid_argument("euclidean_ball: empty center");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("euclidean_ball: radius must be positive");
  }
  FeasibleSet s;
  s.kind_ = SetKind::EuclideanBall;
  s.dim_ = static_cast<int>(center.size());
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

Vector FeasibleSet::lmo(const Vector& p) const {
  if (p.size() != dim_) {
    throw std::invalid_argument("FeasibleSet::lmo: dimension mismatch");
  }
  switch (kind_) {
    case SetKind::ScaledSimplex:
      return lmo_simplex(p, scale_);
    case SetKind::Hypercube:
      return lmo_hypercube(p);
    case SetKind::KnapsackBox:
      return lmo_knapsack_box(p, ratio_);
    case SetKind::Spectrahedron: {
      Matrix x = lmo_spectrahedron(as_matrix(p, side_));
      return Eigen::Map<const Vector>(x.data(), dim_);
    }
    case SetKind::EuclideanBall: {
      require_finite(p, "FeasibleSet::lmo");
      double norm = p.norm();
      if (norm == 0.0) {
        Vector x = center_;
        x[0] += radius_;
        return x;
      }
      return center_ - (radius_ / norm) * p;
    }
  }
  throw std::logic_error("FeasibleSet::lmo: unknown kind");
}

double FeasibleSet::diameter() const {
  switch (kind_) {
    case SetKind::ScaledSimplex:
      return scale_ * std::sqrt(2.0);
    case SetKind::Spectrahedron:
      return std::sqrt(2.0);
    case SetKind::Hypercube:
      return std::sqrt(static_cast<double>(dim_));
    case SetKind::KnapsackBox: {
      double budget = ratio_ * dim_;
      if (budget <= 0.5 * dim_) {
        return std::min(std::sqrt(static_cast<double>(dim_)),
                        std::sqrt(2.0 * budget));
      }
      return std::sqrt(static_cast<double>(dim_));
    }
    case SetKind::EuclideanBall:
      return 2.0 * radius_;
  }
  throw std::logic_error("FeasibleSet::diameter: unknown kind");
}

double FeasibleSet::linf_diameter() const {
  switch (kind_) {
    case SetKind::Hypercube:
      return 1.0;
    case SetKind::KnapsackBox:
      return std::min(1.0, ratio_ * dim_);
    default:
      throw UnsupportedDomainError(
          "linf_diameter: only box-like sets are supported");
  }
}

double FeasibleSet::feasibility_residual(const Vector& x) const {
  if (x.size() != dim_) {
    return std::numeric_limits<double>::infinity();
  }
  switch (kind_) {
    case SetKind::ScaledSimplex: {
      double res = std::abs(x.sum() - scale_);
      for (int i = 0; i < x.size(); ++i) res = std::max(res, -x[i]);
      return res;
    }
    case SetKind::Hypercube: {
      double res = 0.0;
      for (int i = 0; i < x.size(); ++i) {
        res = std::max({res, -x[i], x[i] - 1.0});
      }
      return res;
    }
    case SetKind::KnapsackBox: {
      double res = std::max(0.0, x.sum() - ratio_ * dim_);
      for (int i = 0; i < x.size(); ++i) {
        res = std::max({res, -x[i], x[i] - 1.0});
      }
      return res;
    }
    case SetKind::Spectrahedron: {
      auto m = as_matrix(x, side_);
      double res = std::abs(m.trace() - 1.0);
      res = std::max(res, (m - m.transpose()).cwiseAbs().maxCoeff());
      Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.transpose()));
      res = std::max(res, -eig.eigenvalues().minCoeff());
      return res;
    }
    case SetKind::EuclideanBall:
      return std::max(0.0, (x - center_).norm() - radius_);
  }
  throw std::logic_error("FeasibleSet::feasibility_residual: unknown kind");
}

Vector FeasibleSet::sample(RngStream& rng) const {
  switch (kind_) {
    case SetKind::ScaledSimplex: {
      Vector x(dim_);
      for (int i = 0; i < dim_; ++i) x[i] = rng.exponential();
      double total = x.sum();
      if (total == 0.0) {
        x.setConstant(scale_ / dim_);
        return x;
      }
      return x * (scale_ / total);
    }
    case SetKind::Hypercube: {
      Vector x(dim_);
      for (int i = 0; i < dim_; ++i) x[i] = rng.uniform();
      return x;
    }
    case SetKind::KnapsackBox: {
      Vector x(dim_);
      for (int i = 0; i < dim_; ++i) x[i] = rng.uniform();
      double budget = ratio_ * dim_;
      double total = x.sum();
      if (total > budget) x *= budget / total;
      return x;
    }
    case SetKind::Spectrahedron: {
      Matrix b(side_, side_);
      for (int j = 0; j < side_; ++j) {
        for (int i = 0; i < side_; ++i) b(i, j) = rng.normal();
      }
      Matrix g = b * b.transpose();
      g /= g.trace();
      return Eigen::Map<const Vector>(g.data(), dim_);
    }
    case SetKind::EuclideanBall: {
      Vector dir(dim_);
      for (int i = 0; i < dim_; ++i) dir[i] = rng.normal();
      double norm = dir.norm();
      if (norm == 0.0) return center_;
      double r = radius_ * std::pow(rng.uniform(), 1.0 / dim_);
      return center_ + (r / norm) * dir;
    }
  }
  throw std::logic_error("FeasibleSet::sample: unknown kind");
}

Vector enhanced_lmo(const Vector& p, const Vector& x0, double radius,
                    const FeasibleSet& set) {
  if (!set.has_enhanced_lmo()) {
    throw UnsupportedDomainError(
        "enhanced_lmo: only hypercube and knapsack-box domains are supported");
  }
  if (p.size() != set.dim() || x0.size() != set.dim()) {
    throw std::invalid_argument("enhanced_lmo: dimension mismatch");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("enhanced_lmo: radius must be positive");
  }
  if (!set.contains(x0, 1e-9)) {
    throw std::invalid_argument("enhanced_lmo: reference point infeasible");
  }
  require_finite(p, "enhanced_lmo");
  const int n = set.dim();
  Vector lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = std::max(0.0, x0[i] - radius);
    hi[i] = std::min(1.0, x0[i] + radius);
  }
  if (set.kind() == SetKind::Hypercube) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = p[i] < 0.0 ? hi[i] : lo[i];
    return x;
  }
  // Knapsack box: fractional greedy over the shrunken box. The baseline
  // sum(lo) never exceeds the budget because lo <= x0 coordinatewise.
  Vector x = lo;
  double capacity = set.ratio() * n - lo.sum();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&p](int a, int b) { return p[a] < p[b]; });
  for (int idx : order) {
    if (p[idx] >= 0.0 || capacity <= 0.0) break;
    double inc = std::min(hi[idx] - lo[idx], capacity);
    x[idx] = lo[idx] + inc;
    capacity -= inc;
  }
  return x;
}

}  // namespace lcpkit
