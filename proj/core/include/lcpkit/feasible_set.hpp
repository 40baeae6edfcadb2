#ifndef LCPKIT_FEASIBLE_SET_HPP_
#define LCPKIT_FEASIBLE_SET_HPP_

#include <stdexcept>
#include <string>

#include "lcpkit/linear_map.hpp"
#include "lcpkit/rng.hpp"

namespace lcpkit {

// Thrown when an operation is asked for a set variant it does not support
// (for example the enhanced ball-constrained oracle over a simplex).
class UnsupportedDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact linear minimization oracles. Tie-breaking is deterministic: the
// lowest feasible index wins, and a zero hypercube coordinate stays at 0.

// argmin <p, x> over {sum x = scale, x >= 0}; returns scale * e_{i*}.
Vector lmo_simplex(const Vector& p, double scale);

// argmin <p, x> over [0,1]^n; x_i = 1 iff p_i < 0.
Vector lmo_hypercube(const Vector& p);

// argmin <p, x> over {sum x <= ratio * n, x in [0,1]^n}; fractional
// knapsack greedy. A fractional budget yields one fractional coordinate.
Vector lmo_knapsack_box(const Vector& p, double ratio);

// argmin <P, X> over {Tr X = 1, X >= 0} (PSD); input is symmetrized first.
// Returns v v^T for a unit eigenvector v of the smallest eigenvalue, with
// the first nonzero component of v taken positive.
Matrix lmo_spectrahedron(const Matrix& p);

enum class SetKind {
  ScaledSimplex,
  Spectrahedron,
  Hypercube,
  KnapsackBox,
  EuclideanBall,
};

std::string to_string(SetKind kind);

// Tagged union over the supported domains. Spectrahedron points are the
// vectorizations of n x n symmetric matrices, so every iterate is a plain
// vector and inner products coincide with the Frobenius pairing.
class FeasibleSet {
 public:
  static FeasibleSet scaled_simplex(int n, double scale);
  static FeasibleSet standard_simplex(int n) { return scaled_simplex(n, 1.0); }
  static FeasibleSet spectrahedron(int side);
  static FeasibleSet hypercube(int n);
  static FeasibleSet knapsack_box(int n, double ratio);
  static FeasibleSet euclidean_ball(Vector center, double radius);

  SetKind kind() const { return kind_; }
  // Ambient dimension of iterates (side^2 for the spectrahedron).
  int dim() const { return dim_; }
  int side() const { return side_; }
  double scale() const { return scale_; }
  double ratio() const { return ratio_; }
  double radius() const { return radius_; }
  const Vector& center() const { return center_; }

  Vector lmo(const Vector& p) const;

  // l2 diameter (Frobenius for the spectrahedron).
  double diameter() const;
  // l-infinity diameter; available for the box-like sets used by the
  // enhanced oracle.
  double linf_diameter() const;

  bool has_enhanced_lmo() const {
    return kind_ == SetKind::Hypercube || kind_ == SetKind::KnapsackBox;
  }

  double feasibility_residual(const Vector& x) const;
  bool contains(const Vector& x, double tol = 1e-9) const {
    return feasibility_residual(x) <= tol;
  }

  // Uniform-style feasible draw (simplex: normalized exponentials;
  // boxes: per-coordinate uniforms, rescaled into the knapsack budget;
  // spectrahedron: trace-normalized Gram matrix of a Gaussian square).
  Vector sample(RngStream& rng) const;

 private:
  FeasibleSet() = default;
  SetKind kind_ = SetKind::Hypercube;
  int dim_ = 0;
  int side_ = 0;       // spectrahedron only
  double scale_ = 1.0;  // simplex mass
  double ratio_ = 1.0;  // knapsack ratio r
  double radius_ = 1.0;
  Vector center_;
};

// argmin <p, x> over set intersected with {||x - x0||_inf <= radius}.
// Supported for Hypercube and KnapsackBox; other variants throw
// UnsupportedDomainError.
Vector enhanced_lmo(const Vector& p, const Vector& x0, double radius,
                    const FeasibleSet& set);

}  // namespace lcpkit

#endif  // LCPKIT_FEASIBLE_SET_HPP_
