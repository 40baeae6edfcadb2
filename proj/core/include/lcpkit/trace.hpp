#ifndef LCPKIT_TRACE_HPP_
#define LCPKIT_TRACE_HPP_

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcpkit/linear_map.hpp"

namespace lcpkit {

struct TraceRecord {
  int k = 0;
  double objective = 0.0;
  // Realized stepsize; recorded as a diagnostic under both policies.
  double alpha = 0.0;
  std::optional<double> wolfe_gap;
  std::optional<double> dual_bound;
  // Running certificate accumulator. Meaning depends on the solver:
  // classic CndG sums ||x_i - y_{i-1}||^2, the averaging variants sum
  // ||x_i - x_{i-1}||^2, the smoothing variant sums
  // i eta_i D^2 + (||A||^2 / (sigma eta_i)) ||x_i - y_{i-1}||^2.
  double cert_sum = 0.0;
  long long oracle_calls = 0;
  double elapsed_seconds = 0.0;
};

struct IterationTrace {
  std::vector<TraceRecord> records;
  Vector final_iterate;
  long long oracle_calls = 0;      // solver-path LMO calls
  long long gap_probe_calls = 0;   // extra LMO calls spent on Wolfe gaps
  long long gradient_evals = 0;    // (sub)gradient evaluations

  // Oracle input/output pairs, retained when requested by the config.
  std::vector<Vector> oracle_inputs;
  std::vector<Vector> oracle_outputs;

  // Outer phases of the shrinking method.
  struct Phase {
    int t = 0;
    double radius = 0.0;
    double objective = 0.0;
    long long oracle_calls = 0;
    Vector center;  // p_t
  };
  std::vector<Phase> phases;

  const TraceRecord& at_iteration(int k) const;
  nlohmann::json to_json() const;
};

}  // namespace lcpkit

#endif  // LCPKIT_TRACE_HPP_
