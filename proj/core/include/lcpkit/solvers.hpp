#ifndef LCPKIT_SOLVERS_HPP_
#define LCPKIT_SOLVERS_HPP_

#include <optional>
#include <string>

#include "lcpkit/feasible_set.hpp"
#include "lcpkit/lmo.hpp"
#include "lcpkit/objective.hpp"
#include "lcpkit/schedule.hpp"
#include "lcpkit/smoothing.hpp"
#include "lcpkit/trace.hpp"

namespace lcpkit {

enum class Algorithm {
  Cndg,
  PaCndg,
  PdaCndg,
  SmoothingCndg,
  RandomizedCndg,
  ShrinkingCndg,
};

std::string to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& name);

struct SolverConfig {
  int max_iterations = 1000;
  StepRule step = StepRule::OpenLoop;
  // Wolfe-gap stopping; off by default since each check costs an extra
  // LMO call (tallied as a gap probe).
  std::optional<double> stop_tolerance;
  bool record_wolfe_gap = false;
  int record_every = 1;
  std::uint64_t seed = 0;
  // Start selection: explicit point, else a seeded feasible draw when
  // random_start is set, else the vertex returned by the LMO of the
  // all-ones direction.
  std::optional<Vector> start;
  bool random_start = false;
  bool retain_oracle_pairs = false;
};

// Wolfe gap max_{x in X} <f'(y), y - x>, one LMO call.
double wolfe_gap(const SmoothObjective& f, const FeasibleSet& set,
                 const Vector& y);

// Running aggregate behind the primal-dual averaging bound
// Psi_k(x) = Theta_k^{-1} sum_i theta_i l_f(z_{i-1}; x), kept as
// (Theta_k, sum theta_i f'(z_{i-1}), sum theta_i [f(z_{i-1}) - <f'(z_{i-1}), z_{i-1}>]).
struct PdaState {
  double theta_sum = 0.0;
  Vector grad_sum;
  double scalar_sum = 0.0;

  void accumulate(double theta, double fz, const Vector& gz, const Vector& z);
  double psi(const Vector& x) const;
  Vector direction() const { return grad_sum / theta_sum; }
};

// Classic conditional gradient (open-loop or exact line-search steps).
IterationTrace cndg(const SmoothObjective& f, const FeasibleSet& set,
                    const SolverConfig& cfg);
IterationTrace cndg(const SmoothObjective& f, const FeasibleSet& set,
                    Lmo& oracle, const SolverConfig& cfg);

// Primal averaging: the gradient is taken at
// z_{k-1} = (k-1)/(k+1) y_{k-1} + 2/(k+1) x_{k-1}, with x_0 = y_0.
IterationTrace pa_cndg(const SmoothObjective& f, const FeasibleSet& set,
                       const SolverConfig& cfg);
IterationTrace pa_cndg(const SmoothObjective& f, const FeasibleSet& set,
                       Lmo& oracle, const SolverConfig& cfg);

// Primal-dual averaging with theta_k = k; the trace carries the online
// lower bound Psi_k(x_k) at every recorded iteration.
IterationTrace pda_cndg(const SmoothObjective& f, const FeasibleSet& set,
                        const SolverConfig& cfg);
IterationTrace pda_cndg(const SmoothObjective& f, const FeasibleSet& set,
                        Lmo& oracle, const SolverConfig& cfg);

// Conditional gradient on the Nesterov-smoothed saddle objective with the
// nonincreasing parameter schedule eta_k. The recorded objective is the
// exact f(y_k); line search, when selected, minimizes the smoothed
// objective at the current eta.
IterationTrace smoothing_cndg(const SaddleObjective& s,
                              const FeasibleSet& set, const SolverConfig& cfg);
// Custom eta schedule (k -> eta_k); used for misspecified-constant runs.
IterationTrace smoothing_cndg(const SaddleObjective& s,
                              const FeasibleSet& set,
                              const std::function<double(int)>& eta_of_k,
                              const SolverConfig& cfg);

// Randomized-smoothing conditional gradient: the gradient is the average
// of T_k = k sampled subgradients at y_{k-1} + u_k xi, u_k from the
// u-schedule. Samples are recycled across iterations.
IterationTrace randomized_cndg(const NonsmoothObjective& f,
                               const FeasibleSet& set, const SolverConfig& cfg);
IterationTrace randomized_cndg(const NonsmoothObjective& f,
                               const FeasibleSet& set, Lmo& oracle,
                               const SolverConfig& cfg);

// Shrinking conditional gradient for strongly convex objectives over
// box-like sets. Runs ceil(8 L / mu) inner iterations per phase against
// the enhanced oracle with an l-infinity ball of radius R_{t-1} around
// the phase center, then halves R^2. Stops once mu R_t^2 / 2 <= epsilon.
IterationTrace shrinking_cndg(const SmoothObjective& f, const FeasibleSet& set,
                              double epsilon, const SolverConfig& cfg);

// Empirical Hoelder ratios ||x_k - x_{k-1}|| / ||p_k - p_{k-1}||^rho for
// a trace that retained its oracle pairs; infinity when the denominator
// vanishes while the numerator does not.
std::vector<double> holder_diagnostic(const IterationTrace& trace, double rho);

}  // namespace lcpkit

#endif  // LCPKIT_SOLVERS_HPP_
