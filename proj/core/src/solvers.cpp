#include "lcpkit/solvers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcpkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Vector initial_point(const FeasibleSet& set, const SolverConfig& cfg) {
  if (cfg.start) {
    if (!set.contains(*cfg.start, 1e-9)) {
      throw std::invalid_argument("solver: start point infeasible");
    }
    return *cfg.start;
  }
  if (cfg.random_start) {
    RngStream rng(RngStream::derive(cfg.seed, 0x59300001ULL));
    return set.sample(rng);
  }
  return set.lmo(Vector::Ones(set.dim()));
}

void validate(const SolverConfig& cfg) {
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("solver: max_iterations must be >= 1");
  }
  if (cfg.record_every < 1) {
    throw std::invalid_argument("solver: record_every must be >= 1");
  }
}

double pick_step(const SmoothObjective& f, StepRule rule, int k,
                 const Vector& y, const Vector& x) {
  if (rule == StepRule::OpenLoop) return gamma(k);
  if (f.exact_linesearch) return f.exact_linesearch(y, x);
  return golden_section(
      [&](double a) { return f.value((1.0 - a) * y + a * x); }, 0.0, 1.0,
      1e-10);
}

// Shared recording plumbing for the gradient-driven variants.
struct Recorder {
  IterationTrace trace;
  Clock::time_point start = Clock::now();
  const SolverConfig* cfg = nullptr;
  const FeasibleSet* set = nullptr;

  void base_record(double objective) {
    TraceRecord r;
    r.k = 0;
    r.objective = objective;
    trace.records.push_back(r);
  }

  bool due(int k) const {
    return k % cfg->record_every == 0 || k == cfg->max_iterations;
  }

  TraceRecord& add(int k, double objective, double alpha, double cert,
                   long long calls) {
    TraceRecord r;
    r.k = k;
    r.objective = objective;
    r.alpha = alpha;
    r.cert_sum = cert;
    r.oracle_calls = calls;
    r.elapsed_seconds = seconds_since(start);
    trace.records.push_back(r);
    return trace.records.back();
  }
};

}  // namespace

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::Cndg: return "cndg";
    case Algorithm::PaCndg: return "pa";
    case Algorithm::PdaCndg: return "pda";
    case Algorithm::SmoothingCndg: return "smooth";
    case Algorithm::RandomizedCndg: return "rand";
    case Algorithm::ShrinkingCndg: return "shrink";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "cndg") return Algorithm::Cndg;
  if (name == "pa") return Algorithm::PaCndg;
  if (name == "pda") return Algorithm::PdaCndg;
  if (name == "smooth") return Algorithm::SmoothingCndg;
  if (name == "rand") return Algorithm::RandomizedCndg;
  if (name == "shrink") return Algorithm::ShrinkingCndg;
  throw std::invalid_argument("unknown algorithm: " + name);
}

double wolfe_gap(const SmoothObjective& f, const FeasibleSet& set,
                 const Vector& y) {
  if (y.size() != set.dim()) {
    throw std::invalid_argument("wolfe_gap: dimension mismatch");
  }
  Vector g = f.grad(y);
  Vector x = set.lmo(g);
  return g.dot(y - x);
}

void PdaState::accumulate(double theta, double fz, const Vector& gz,
                          const Vector& z) {
  if (grad_sum.size() == 0) grad_sum = Vector::Zero(z.size());
  theta_sum += theta;
  grad_sum += theta * gz;
  scalar_sum += theta * (fz - gz.dot(z));
}

double PdaState::psi(const Vector& x) const {
  if (theta_sum <= 0.0) {
    throw std::logic_error("PdaState::psi: empty aggregate");
  }
  return (scalar_sum + grad_sum.dot(x)) / theta_sum;
}

namespace {

enum class AveragingMode { None, Primal, PrimalDual };

IterationTrace run_gradient_cndg(const SmoothObjective& f,
                                 const FeasibleSet& set, Lmo& oracle,
                                 const SolverConfig& cfg, AveragingMode mode) {
  validate(cfg);
  Recorder rec;
  rec.cfg = &cfg;
  rec.set = &set;

  Vector y = initial_point(set, cfg);
  Vector x_prev = y;  // x_0 = y_0 for the averaging variants
  PdaState pda;
  double cert = 0.0;
  rec.base_record(f.value(y));

  const long long base_calls = oracle.calls();
  for (int k = 1; k <= cfg.max_iterations; ++k) {
    Vector query;
    Vector p;
    switch (mode) {
      case AveragingMode::None:
        p = f.grad(y);
        break;
      case AveragingMode::Primal: {
        query = ((k - 1.0) * y + 2.0 * x_prev) / (k + 1.0);
        p = f.grad(query);
        break;
      }
      case AveragingMode::PrimalDual: {
        query = ((k - 1.0) * y + 2.0 * x_prev) / (k + 1.0);
        Vector gz = f.grad(query);
        pda.accumulate(static_cast<double>(k), f.value(query), gz, query);
        p = pda.direction();
        break;
      }
    }
    ++rec.trace.gradient_evals;

    Vector x = oracle.minimize(p);
    if (cfg.retain_oracle_pairs) {
      rec.trace.oracle_inputs.push_back(p);
      rec.trace.oracle_outputs.push_back(x);
    }
    cert += mode == AveragingMode::None ? (x - y).squaredNorm()
                                        : (x - x_prev).squaredNorm();

    double alpha = pick_step(f, cfg.step, k, y, x);
    y = (1.0 - alpha) * y + alpha * x;
    if (!std::isfinite(y[0])) {
      throw std::runtime_error("solver: non-finite iterate");
    }
    x_prev = x;

    if (rec.due(k)) {
      double fy = f.value(y);
      if (!std::isfinite(fy)) {
        throw std::runtime_error("solver: non-finite objective");
      }
      TraceRecord& r =
          rec.add(k, fy, alpha, cert, oracle.calls() - base_calls);
      if (mode == AveragingMode::PrimalDual) {
        r.dual_bound = pda.psi(x);
      }
      if (cfg.record_wolfe_gap || cfg.stop_tolerance) {
        Vector gy = f.grad(y);
        Vector probe = set.lmo(gy);
        ++rec.trace.gap_probe_calls;
        double gap = gy.dot(y - probe);
        r.wolfe_gap = gap;
        if (cfg.stop_tolerance && gap <= *cfg.stop_tolerance) break;
      }
    }
  }

  rec.trace.final_iterate = y;
  rec.trace.oracle_calls = oracle.calls() - base_calls;
  return rec.trace;
}

}  // namespace

IterationTrace cndg(const SmoothObjective& f, const FeasibleSet& set,
                    Lmo& oracle, const SolverConfig& cfg) {
  return run_gradient_cndg(f, set, oracle, cfg, AveragingMode::None);
}

IterationTrace cndg(const SmoothObjective& f, const FeasibleSet& set,
                    const SolverConfig& cfg) {
  SetLmo oracle(set);
  return cndg(f, set, oracle, cfg);
}

IterationTrace pa_cndg(const SmoothObjective& f, const FeasibleSet& set,
                       Lmo& oracle, const SolverConfig& cfg) {
  return run_gradient_cndg(f, set, oracle, cfg, AveragingMode::Primal);
}

IterationTrace pa_cndg(const SmoothObjective& f, const FeasibleSet& set,
                       const SolverConfig& cfg) {
  SetLmo oracle(set);
  return pa_cndg(f, set, oracle, cfg);
}

IterationTrace pda_cndg(const SmoothObjective& f, const FeasibleSet& set,
                        Lmo& oracle, const SolverConfig& cfg) {
  return run_gradient_cndg(f, set, oracle, cfg, AveragingMode::PrimalDual);
}

IterationTrace pda_cndg(const SmoothObjective& f, const FeasibleSet& set,
                        const SolverConfig& cfg) {
  SetLmo oracle(set);
  return pda_cndg(f, set, oracle, cfg);
}

IterationTrace smoothing_cndg(const SaddleObjective& s, const FeasibleSet& set,
                              const std::function<double(int)>& eta_of_k,
                              const SolverConfig& cfg) {
  validate(cfg);
  if (s.primal_dim() != set.dim()) {
    throw std::invalid_argument("smoothing_cndg: dimension mismatch");
  }
  Recorder rec;
  rec.cfg = &cfg;
  rec.set = &set;
  SetLmo oracle(set);

  Vector y = initial_point(set, cfg);
  double cert = 0.0;
  const double d2 = s.prox().d_squared();
  const double a2 = s.a_norm() * s.a_norm();
  const double sigma = s.prox().sigma();
  double eta_prev = std::numeric_limits<double>::infinity();
  rec.base_record(s.value_exact(y));

  for (int k = 1; k <= cfg.max_iterations; ++k) {
    const double eta = eta_of_k(k);
    if (!(eta > 0.0) || eta > eta_prev + 1e-15) {
      throw std::invalid_argument(
          "smoothing_cndg: eta schedule must be positive and nonincreasing");
    }
    eta_prev = eta;

    SmoothedEval ev = s.smoothed(y, eta);
    ++rec.trace.gradient_evals;
    Vector x = oracle.minimize(ev.grad);
    if (cfg.retain_oracle_pairs) {
      rec.trace.oracle_inputs.push_back(ev.grad);
      rec.trace.oracle_outputs.push_back(x);
    }
    cert += k * eta * d2 + (a2 / (sigma * eta)) * (x - y).squaredNorm();

    double alpha;
    if (cfg.step == StepRule::OpenLoop) {
      alpha = gamma(k);
    } else {
      alpha = golden_section(
          [&](double a) { return s.smoothed((1.0 - a) * y + a * x, eta).value; },
          0.0, 1.0, 1e-10);
    }
    y = (1.0 - alpha) * y + alpha * x;

    if (rec.due(k)) {
      rec.add(k, s.value_exact(y), alpha, cert, oracle.calls());
    }
  }

  rec.trace.final_iterate = y;
  rec.trace.oracle_calls = oracle.calls();
  return rec.trace;
}

IterationTrace smoothing_cndg(const SaddleObjective& s, const FeasibleSet& set,
                              const SolverConfig& cfg) {
  const double a_norm = s.a_norm();
  const double d_x = set.diameter();
  const double d_yv = std::sqrt(s.prox().d_squared());
  const double sigma = s.prox().sigma();
  if (!(a_norm > 0.0)) {
    // A zero operator makes f identically zero; any feasible point is
    // optimal and the schedule below would divide by zero.
    SolverConfig one = cfg;
    one.max_iterations = 1;
    return smoothing_cndg(s, set, [](int) { return 1.0; }, one);
  }
  return smoothing_cndg(
      s, set,
      [=](int k) { return eta_schedule(k, a_norm, d_x, d_yv, sigma); }, cfg);
}

IterationTrace randomized_cndg(const NonsmoothObjective& f,
                               const FeasibleSet& set, Lmo& oracle,
                               const SolverConfig& cfg) {
  validate(cfg);
  Recorder rec;
  rec.cfg = &cfg;
  rec.set = &set;

  Vector y = initial_point(set, cfg);
  const int n = set.dim();
  const double d_x = set.diameter();
  RandomizedSmoother smoother(n, RngStream::derive(cfg.seed, 0x59300002ULL));
  double cert = 0.0;
  rec.base_record(f.value(y));

  const long long base_calls = oracle.calls();
  for (int k = 1; k <= cfg.max_iterations; ++k) {
    auto [T, u] = u_schedule(k, n, d_x);
    Vector p = smoother.average_gradient(f.subgrad, y, u, T);
    rec.trace.gradient_evals += T;
    Vector x = oracle.minimize(p);
    if (cfg.retain_oracle_pairs) {
      rec.trace.oracle_inputs.push_back(p);
      rec.trace.oracle_outputs.push_back(x);
    }
    cert += (x - y).squaredNorm();

    double alpha;
    if (cfg.step == StepRule::OpenLoop) {
      alpha = gamma(k);
    } else {
      alpha = golden_section(
          [&](double a) { return f.value((1.0 - a) * y + a * x); }, 0.0, 1.0,
          1e-10);
    }
    y = (1.0 - alpha) * y + alpha * x;

    if (rec.due(k)) {
      rec.add(k, f.value(y), alpha, cert, oracle.calls() - base_calls);
    }
  }

  rec.trace.final_iterate = y;
  rec.trace.oracle_calls = oracle.calls() - base_calls;
  return rec.trace;
}

IterationTrace randomized_cndg(const NonsmoothObjective& f,
                               const FeasibleSet& set,
                               const SolverConfig& cfg) {
  SetLmo oracle(set);
  return randomized_cndg(f, set, oracle, cfg);
}

IterationTrace shrinking_cndg(const SmoothObjective& f, const FeasibleSet& set,
                              double epsilon, const SolverConfig& cfg) {
  validate(cfg);
  if (!(f.strong_convexity > 0.0)) {
    throw std::invalid_argument("shrinking_cndg: requires mu > 0");
  }
  if (!set.has_enhanced_lmo()) {
    throw UnsupportedDomainError(
        "shrinking_cndg: enhanced oracle unavailable for this domain");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("shrinking_cndg: epsilon must be positive");
  }

  const double mu = f.strong_convexity;
  const int inner = static_cast<int>(std::ceil(8.0 * f.lipschitz / mu));
  Recorder rec;
  rec.cfg = &cfg;
  rec.set = &set;

  Vector center = initial_point(set, cfg);
  // The ball radius lives in the same norm as the enhanced oracle's ball
  // (l-infinity), so R_0 is the l-infinity diameter of the set.
  double radius = set.linf_diameter();
  rec.base_record(f.value(center));

  long long calls = 0;
  int k_global = 0;
  int t = 0;
  while (mu * radius * radius / 2.0 > epsilon) {
    ++t;
    Vector y = center;
    for (int k = 1; k <= inner; ++k) {
      Vector g = f.grad(y);
      ++rec.trace.gradient_evals;
      Vector x = enhanced_lmo(g, center, radius, set);
      ++calls;
      double alpha = pick_step(f, cfg.step, k, y, x);
      y = (1.0 - alpha) * y + alpha * x;
      ++k_global;
      if (k_global % cfg.record_every == 0) {
        rec.add(k_global, f.value(y), alpha, 0.0, calls);
      }
    }
    center = y;
    radius /= std::sqrt(2.0);
    rec.trace.phases.push_back({t, radius, f.value(center), calls, center});
  }

  rec.trace.final_iterate = center;
  rec.trace.oracle_calls = calls;
  return rec.trace;
}

std::vector<double> holder_diagnostic(const IterationTrace& trace,
                                      double rho) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw std::invalid_argument("holder_diagnostic: rho outside (0,1]");
  }
  if (trace.oracle_inputs.size() != trace.oracle_outputs.size() ||
      trace.oracle_inputs.empty()) {
    throw std::invalid_argument(
        "holder_diagnostic: trace did not retain oracle pairs");
  }
  std::vector<double> ratios;
  for (std::size_t k = 1; k < trace.oracle_inputs.size(); ++k) {
    double num = (trace.oracle_outputs[k] - trace.oracle_outputs[k - 1]).norm();
    double den = (trace.oracle_inputs[k] - trace.oracle_inputs[k - 1]).norm();
    if (num == 0.0) {
      ratios.push_back(0.0);
    } else if (den == 0.0) {
      ratios.push_back(std::numeric_limits<double>::infinity());
    } else {
      ratios.push_back(num / std::pow(den, rho));
    }
  }
  return ratios;
}

}  // namespace lcpkit
