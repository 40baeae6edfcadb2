#ifndef LCPKIT_LOWER_BOUNDS_HPP_
#define LCPKIT_LOWER_BOUNDS_HPP_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcpkit/objective.hpp"
#include "lcpkit/solvers.hpp"

namespace lcpkit {

// Worst-case instances over the scaled simplex {sum x = D, x >= 0}:
//   SmoothQuadratic: f(x) = (L/2) sum x_i^2
//   NonsmoothNorm:   f(x) = M ||x||_2
//   SaddleScaled:    min_x max_{||y|| <= dual_radius} M <x, y>,
//                    certified through its norm form M * dual_radius * ||x||_2.
// The optimum is the uniform point (D/n, ..., D/n). Note the quadratic
// optimal value is L D^2 / (2n) and the face minima are L D^2 / (2q);
// both follow from direct evaluation and are verified against a
// brute-force oracle in the tests.
class HardInstance {
 public:
  enum class Family { SmoothQuadratic, NonsmoothNorm, SaddleScaled };

  static HardInstance smooth_quadratic(int n, double lipschitz, double scale);
  static HardInstance nonsmooth_norm(int n, double lipschitz, double scale);
  static HardInstance saddle_scaled(int n, double lipschitz, double scale,
                                    double dual_radius);

  Family family() const { return family_; }
  int dim() const { return n_; }
  double lipschitz() const { return lipschitz_; }
  double scale() const { return scale_; }
  double dual_radius() const { return dual_radius_; }

  // M, or M * dual_radius for the saddle family.
  double effective_lipschitz() const;

  Vector optimum() const { return Vector::Constant(n_, scale_ / n_); }
  double optimal_value() const;
  double objective(const Vector& x) const;

  FeasibleSet domain() const {
    return FeasibleSet::scaled_simplex(n_, scale_);
  }
  // Smooth interface (SmoothQuadratic only).
  SmoothObjective smooth() const;
  // Subgradient interface (all families).
  NonsmoothObjective nonsmooth() const;

 private:
  HardInstance(Family family, int n, double lipschitz, double scale,
               double dual_radius);
  Family family_;
  int n_;
  double lipschitz_;
  double scale_;
  double dual_radius_;
};

std::string to_string(HardInstance::Family family);

// Exact minimum of the instance objective over scale * conv{e_i : i in S}
// for any support of size q; the uniform weights are optimal by symmetry.
double face_minimum(const HardInstance& inst, int support_size);

// face_minimum(k+1) - f*: no LCP method can beat this gap after k oracle
// calls against the resisting oracle. Defined for 1 <= k <= n-1.
double gap_floor(const HardInstance& inst, int k);

struct FloorReport {
  std::string algorithm;
  std::string family;
  int n = 0;
  double lipschitz = 0.0;
  double scale = 0.0;
  std::uint64_t seed = 0;

  struct Row {
    int k = 0;
    double gap = 0.0;
    double floor = 0.0;
    // Iteration count implied by the worst-case bound at eps = gap:
    // ceil(min(n/2, L D_X^2 / (4 eps))) - 1.
    long long lower_bound_iterations = 0;
  };
  std::vector<Row> rows;
  bool all_hold = false;
  double max_violation = 0.0;

  nlohmann::json to_json() const;
};

// Runs the given solver through the resisting oracle from y_0 = D e_1 and
// checks f(y_k) - f* >= gap_floor(k) at every k <= iterations (tolerance
// 1e-10). Supported: Cndg / PaCndg / PdaCndg on the smooth family, and
// RandomizedCndg on any family.
FloorReport certify_floor(Algorithm alg, const HardInstance& inst,
                          int iterations, const SolverConfig& cfg = {});

}  // namespace lcpkit

#endif  // LCPKIT_LOWER_BOUNDS_HPP_
