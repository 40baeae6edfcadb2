#ifndef LCPKIT_BENCH_HPP_
#define LCPKIT_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcpkit/objective.hpp"
#include "lcpkit/solvers.hpp"

namespace lcpkit {

// One row of the benchmark catalog: a seeded random least-squares
// instance min ||A x - b||^2 over the named domain, planted so the
// optimal value is exactly zero.
struct InstanceSpec {
  std::string name;
  SetKind domain = SetKind::Hypercube;
  int n = 0;          // primal dimension (matrix side for the spectrahedron)
  int m = 0;          // operator rows
  double density = 1.0;
  double ratio = 0.5;  // knapsack budget ratio, unused elsewhere
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static InstanceSpec from_json(const nlohmann::json& j);
};

struct GeneratedInstance {
  QuadraticObjective objective;
  FeasibleSet set;
  Vector planted;  // s_0 with A s_0 = b
};

// Deterministic in the spec seed: identical specs produce bit-identical
// instances. The planted point is drawn first, then the operator entries
// (each nonzero independently with probability `density`, value U[0,1]),
// then b = A s_0.
GeneratedInstance generate_instance(const InstanceSpec& spec);

// Shared seeded start used for every algorithm on the instance.
Vector starting_point(const InstanceSpec& spec, const FeasibleSet& set);

// Instance dump round-trip (spec + operator triplets + b + s0).
nlohmann::json instance_to_json(const InstanceSpec& spec,
                                const GeneratedInstance& inst);
std::pair<InstanceSpec, GeneratedInstance> instance_from_json(
    const nlohmann::json& j);

struct RunResult {
  std::string instance;
  std::string algorithm;
  double f_y0 = 0.0;
  double f_y100 = 0.0;
  double f_y1000 = 0.0;
  double time_s = 0.0;
  long long oracle_calls = 0;
  std::string error;  // nonempty when the cell failed; run continues
  IterationTrace trace;
};

struct ExperimentOptions {
  int iterations = 1000;
  StepRule step = StepRule::OpenLoop;
  bool certify = false;  // assert the per-algorithm bound with f* = 0
  int threads = 0;       // 0: hardware default, capped by LCPKIT_THREADS
};

// Runs every (instance, algorithm) cell; the start y_0 is drawn once per
// instance and shared across algorithms. Results are ordered by
// (instance, algorithm) regardless of completion order.
std::vector<RunResult> run_experiment(const std::vector<InstanceSpec>& specs,
                                      const std::vector<Algorithm>& algorithms,
                                      const ExperimentOptions& opts = {});

// CSV table view (3 significant digits, scientific) and full-precision
// JSON mirror.
void export_csv(const std::vector<RunResult>& results, const std::string& path);
void export_json(const std::vector<RunResult>& results,
                 const std::string& path);
std::vector<RunResult> import_results_json(const std::string& path);

enum class Suite { Sim, Spe, Cub, Hyb };
enum class BenchScale { Desk, Full };

Suite suite_from_string(const std::string& name);
std::string to_string(Suite suite);

// Catalog rows for a suite. Desk scale divides the published sizes by 8;
// full scale restores them. Seeds derive from `seed_base` and the row
// name, so a fixed base pins the whole instance set.
std::vector<InstanceSpec> suite_specs(Suite suite, BenchScale scale,
                                      std::uint64_t seed_base);
// Lookup of a single named row (e.g. "CUB11").
InstanceSpec catalog_spec(const std::string& name, BenchScale scale,
                          std::uint64_t seed_base);

}  // namespace lcpkit

#endif  // LCPKIT_BENCH_HPP_
