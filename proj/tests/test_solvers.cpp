#include <cmath>

#include <gtest/gtest.h>

#include "lcpkit/bench.hpp"
#include "lcpkit/schedule.hpp"
#include "lcpkit/solvers.hpp"

namespace lcpkit {
namespace {

// f(x) = ||x - c||^2 with the closed-form segment minimizer.
SmoothObjective shifted_norm_squared(Vector c) {
  SmoothObjective f;
  auto center = std::make_shared<Vector>(std::move(c));
  f.value = [center](const Vector& x) { return (x - *center).squaredNorm(); };
  f.grad = [center](const Vector& x) { return Vector(2.0 * (x - *center)); };
  f.lipschitz = 2.0;
  f.strong_convexity = 2.0;
  f.exact_linesearch = [center](const Vector& y, const Vector& x) {
    Vector d = x - y;
    double denom = d.squaredNorm();
    if (denom == 0.0) return 0.0;
    return std::min(1.0, std::max(0.0, (*center - y).dot(d) / denom));
  };
  return f;
}

SmoothObjective linear_objective(Vector c) {
  SmoothObjective f;
  auto coef = std::make_shared<Vector>(std::move(c));
  f.value = [coef](const Vector& x) { return coef->dot(x); };
  f.grad = [coef](const Vector&) { return *coef; };
  f.lipschitz = 0.0;
  return f;
}

InstanceSpec small_planted_spec(SetKind domain, int n, int m,
                                std::uint64_t seed) {
  InstanceSpec spec;
  spec.name = "unit";
  spec.domain = domain;
  spec.n = n;
  spec.m = m;
  spec.density = 1.0;
  spec.ratio = 0.5;
  spec.seed = seed;
  return spec;
}

TEST(Cndg, InteriorOptimumBound) {
  Vector c(2);
  c << 0.3, 0.7;
  SmoothObjective f = shifted_norm_squared(c);
  FeasibleSet cube = FeasibleSet::hypercube(2);
  SolverConfig cfg;
  cfg.max_iterations = 1000;
  IterationTrace trace = cndg(f, cube, cfg);
  // L = 2 and D^2 = 2, so f(y_K) <= 2 L D^2 / (K+1).
  EXPECT_LE(trace.records.back().objective, 2.0 * 2.0 * 2.0 / 1001.0);
  EXPECT_EQ(trace.oracle_calls, 1000);
}

TEST(Cndg, LinearObjectiveConvergesInOneStep) {
  Vector c(4);
  c << 0.5, -1.0, 2.0, 0.25;
  FeasibleSet simplex = FeasibleSet::standard_simplex(4);
  Vector best = simplex.lmo(c);
  for (StepRule rule : {StepRule::OpenLoop, StepRule::LineSearch}) {
    SolverConfig cfg;
    cfg.max_iterations = 1;
    cfg.step = rule;
    IterationTrace trace = cndg(linear_objective(c), simplex, cfg);
    EXPECT_TRUE(trace.final_iterate.isApprox(best, 1e-12));
  }
}

TEST(Cndg, LineSearchMonotone) {
  InstanceSpec spec = small_planted_spec(SetKind::Hypercube, 30, 12, 5);
  GeneratedInstance inst = generate_instance(spec);
  SolverConfig cfg;
  cfg.max_iterations = 200;
  cfg.step = StepRule::LineSearch;
  cfg.random_start = true;
  cfg.seed = 7;
  IterationTrace trace = cndg(inst.objective.as_smooth(), inst.set, cfg);
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    EXPECT_LE(trace.records[i].objective,
              trace.records[i - 1].objective + 1e-10);
  }
}

TEST(Cndg, IteratesStayFeasible) {
  for (SetKind domain : {SetKind::ScaledSimplex, SetKind::Hypercube,
                         SetKind::KnapsackBox, SetKind::Spectrahedron}) {
    InstanceSpec spec = small_planted_spec(domain, 10, 6, 11);
    GeneratedInstance inst = generate_instance(spec);
    SolverConfig cfg;
    cfg.max_iterations = 50;
    cfg.random_start = true;
    IterationTrace trace = cndg(inst.objective.as_smooth(), inst.set, cfg);
    EXPECT_LE(inst.set.feasibility_residual(trace.final_iterate), 1e-9);
  }
}

TEST(Cndg, WolfeGapProbesTalliedSeparately) {
  InstanceSpec spec = small_planted_spec(SetKind::ScaledSimplex, 20, 8, 13);
  GeneratedInstance inst = generate_instance(spec);
  SolverConfig cfg;
  cfg.max_iterations = 40;
  cfg.record_every = 10;
  cfg.record_wolfe_gap = true;
  IterationTrace trace = cndg(inst.objective.as_smooth(), inst.set, cfg);
  EXPECT_EQ(trace.oracle_calls, 40);
  EXPECT_EQ(trace.gap_probe_calls, 4);
  for (const TraceRecord& r : trace.records) {
    if (r.k >= 1) {
      ASSERT_TRUE(r.wolfe_gap.has_value());
      EXPECT_GE(*r.wolfe_gap, -1e-12);
    }
  }
}

TEST(Cndg, WolfeGapStopping) {
  InstanceSpec spec = small_planted_spec(SetKind::ScaledSimplex, 20, 8, 17);
  GeneratedInstance inst = generate_instance(spec);
  SolverConfig cfg;
  cfg.max_iterations = 5000;
  cfg.step = StepRule::LineSearch;
  cfg.stop_tolerance = 1e-4;
  IterationTrace trace = cndg(inst.objective.as_smooth(), inst.set, cfg);
  EXPECT_LT(trace.records.back().k, 5000);
  EXPECT_LE(*trace.records.back().wolfe_gap, 1e-4);
}

TEST(Cndg, RejectsInfeasibleStart) {
  FeasibleSet simplex = FeasibleSet::standard_simplex(3);
  SolverConfig cfg;
  cfg.start = Vector::Ones(3);  // sums to 3
  EXPECT_THROW(cndg(shifted_norm_squared(Vector::Zero(3)), simplex, cfg),
               std::invalid_argument);
}

TEST(PaCndg, FirstStepMatchesClassic) {
  InstanceSpec spec = small_planted_spec(SetKind::Hypercube, 12, 5, 19);
  GeneratedInstance inst = generate_instance(spec);
  SmoothObjective f = inst.objective.as_smooth();
  SolverConfig cfg;
  cfg.max_iterations = 1;
  IterationTrace a = cndg(f, inst.set, cfg);
  IterationTrace b = pa_cndg(f, inst.set, cfg);
  EXPECT_TRUE(a.final_iterate.isApprox(b.final_iterate, 1e-14));
}

TEST(PaCndg, CertificateAndDrift) {
  InstanceSpec spec = small_planted_spec(SetKind::ScaledSimplex, 60, 20, 23);
  GeneratedInstance inst = generate_instance(spec);
  SmoothObjective f = inst.objective.as_smooth();
  const double lip = f.lipschitz;
  const double dx = inst.set.diameter();
  SolverConfig cfg;
  cfg.max_iterations = 300;
  cfg.random_start = true;
  cfg.retain_oracle_pairs = true;
  IterationTrace trace = pa_cndg(f, inst.set, cfg);
  for (const TraceRecord& r : trace.records) {
    if (r.k < 1) continue;
    double bound = 2.0 * lip / (static_cast<double>(r.k) * (r.k + 1.0)) *
                   r.cert_sum;
    EXPECT_LE(r.objective, bound + 1e-8);
    EXPECT_LE(bound, 2.0 * lip * dx * dx / (r.k + 1.0) + 1e-8);
  }
  // Successive oracle inputs drift by at most 3 gamma_{k-1} L D_X.
  for (std::size_t k = 1; k < trace.oracle_inputs.size(); ++k) {
    double drift =
        (trace.oracle_inputs[k] - trace.oracle_inputs[k - 1]).norm();
    EXPECT_LE(drift, 3.0 * gamma(static_cast<int>(k)) * lip * dx + 1e-8);
  }
}

TEST(PdaCndg, LinearObjectiveTightAfterOneStep) {
  Vector c(5);
  c << 1.0, -0.5, 0.25, 2.0, 0.0;
  FeasibleSet simplex = FeasibleSet::standard_simplex(5);
  SolverConfig cfg;
  cfg.max_iterations = 1;
  IterationTrace trace = pda_cndg(linear_objective(c), simplex, cfg);
  const TraceRecord& r = trace.records.back();
  ASSERT_TRUE(r.dual_bound.has_value());
  double fstar = c.minCoeff();
  EXPECT_NEAR(*r.dual_bound, fstar, 1e-14);
  EXPECT_NEAR(r.objective, fstar, 1e-14);
}

// Transparent replay of the primal-dual recursion, storing everything, to
// validate the incremental aggregates against direct summation.
TEST(PdaCndg, IncrementalPsiMatchesDirectSummation) {
  InstanceSpec spec = small_planted_spec(SetKind::Hypercube, 25, 10, 29);
  GeneratedInstance inst = generate_instance(spec);
  SmoothObjective f = inst.objective.as_smooth();
  FeasibleSet set = inst.set;
  const int K = 50;

  SolverConfig cfg;
  cfg.max_iterations = K;
  cfg.retain_oracle_pairs = true;
  IterationTrace trace = pda_cndg(f, set, cfg);

  Vector y = set.lmo(Vector::Ones(set.dim()));
  Vector x_prev = y;
  std::vector<Vector> zs, gzs, xs;
  std::vector<double> fzs;
  for (int k = 1; k <= K; ++k) {
    Vector z = ((k - 1.0) * y + 2.0 * x_prev) / (k + 1.0);
    zs.push_back(z);
    gzs.push_back(f.grad(z));
    fzs.push_back(f.value(z));
    double theta_sum = 0.0;
    Vector p = Vector::Zero(set.dim());
    for (int i = 1; i <= k; ++i) {
      p += i * gzs[i - 1];
      theta_sum += i;
    }
    p /= theta_sum;
    Vector x = set.lmo(p);
    xs.push_back(x);

    // Direct evaluation of the aggregated linearization at x_k.
    double psi_direct = 0.0;
    for (int i = 1; i <= k; ++i) {
      psi_direct += i * (fzs[i - 1] + gzs[i - 1].dot(x - zs[i - 1]));
    }
    psi_direct /= theta_sum;

    ASSERT_TRUE(trace.records[k].dual_bound.has_value());
    double psi_solver = *trace.records[k].dual_bound;
    EXPECT_NEAR(psi_solver, psi_direct,
                1e-9 * std::max(1.0, std::abs(psi_direct)));

    // The per-step aggregate inequality behind the primal-dual bound.
    if (k >= 2) {
      double theta_prev = theta_sum - k;
      double psi_prev_direct = 0.0;
      for (int i = 1; i <= k - 1; ++i) {
        psi_prev_direct +=
            i * (fzs[i - 1] + gzs[i - 1].dot(xs[k - 2] - zs[i - 1]));
      }
      psi_prev_direct /= theta_prev;
      double lhs = k * (fzs[k - 1] + gzs[k - 1].dot(x - zs[k - 1]));
      double rhs = theta_sum * psi_direct - theta_prev * psi_prev_direct;
      EXPECT_LE(lhs, rhs + 1e-9);
    }

    double alpha = gamma(k);
    y = (1.0 - alpha) * y + alpha * x;
    x_prev = x;
  }
  // The replay reproduces the solver's iterate exactly.
  EXPECT_TRUE(y.isApprox(trace.final_iterate, 1e-12));
}

TEST(PdaCndg, PrimalDualSandwichOnPlantedInstance) {
  InstanceSpec spec = small_planted_spec(SetKind::Hypercube, 40, 15, 31);
  GeneratedInstance inst = generate_instance(spec);
  SmoothObjective f = inst.objective.as_smooth();
  SolverConfig cfg;
  cfg.max_iterations = 400;
  cfg.random_start = true;
  IterationTrace trace = pda_cndg(f, inst.set, cfg);
  for (const TraceRecord& r : trace.records) {
    if (r.k < 1) continue;
    ASSERT_TRUE(r.dual_bound.has_value());
    EXPECT_LE(*r.dual_bound, 1e-8);    // psi_k(x_k) <= f* = 0
    EXPECT_GE(r.objective, -1e-12);    // f >= 0
    double bound = 2.0 * f.lipschitz /
                   (static_cast<double>(r.k) * (r.k + 1.0)) * r.cert_sum;
    EXPECT_LE(r.objective - *r.dual_bound, bound + 1e-8);
  }
}

TEST(SmoothingCndg, ZeroOperatorIsImmediatelyOptimal) {
  SaddleObjective s(Matrix::Zero(3, 4), ProxSetup::entropy_simplex(3));
  FeasibleSet simplex = FeasibleSet::standard_simplex(4);
  SolverConfig cfg;
  cfg.max_iterations = 100;
  IterationTrace trace = smoothing_cndg(s, simplex, cfg);
  EXPECT_NEAR(trace.records.back().objective, 0.0, 1e-15);
}

TEST(SmoothingCndg, AntisymmetricGameRate) {
  // f(x) = max(x_2, -x_1) over the simplex; f >= x_2 >= 0 and f((1,0)) = 0.
  Matrix a(2, 2);
  a << 0, 1, -1, 0;
  SaddleObjective s(a, ProxSetup::entropy_simplex(2));
  FeasibleSet simplex = FeasibleSet::standard_simplex(2);
  SolverConfig cfg;
  cfg.max_iterations = 500;
  IterationTrace trace = smoothing_cndg(s, simplex, cfg);
  const double dx = simplex.diameter();
  const double dyv = std::sqrt(std::log(2.0));
  const double constant = 8.0 * std::sqrt(2.0) / 3.0;
  for (const TraceRecord& r : trace.records) {
    if (r.k < 1) continue;
    EXPECT_GE(r.objective, -1e-12);
    EXPECT_LE(r.objective,
              constant * s.a_norm() * dx * dyv / std::sqrt(r.k) + 1e-9);
    // Certificate along the trace.
    double cert_bound =
        2.0 / (static_cast<double>(r.k) * (r.k + 1.0)) * r.cert_sum;
    EXPECT_LE(r.objective, cert_bound + 1e-9);
  }
}

TEST(SmoothingCndg, MisspecifiedScheduleKeepsSqrtRate) {
  Matrix a(2, 2);
  a << 0, 1, -1, 0;
  SaddleObjective s(a, ProxSetup::entropy_simplex(2));
  FeasibleSet simplex = FeasibleSet::standard_simplex(2);
  SolverConfig cfg;
  cfg.max_iterations = 500;
  IterationTrace trace = smoothing_cndg(
      s, simplex, [](int k) { return 1.0 / std::sqrt(k); }, cfg);
  const double dx = simplex.diameter();
  const double d2 = std::log(2.0);
  const double fallback =
      8.0 * std::sqrt(2.0) / 3.0 * (d2 + s.a_norm() * s.a_norm() * dx * dx);
  for (const TraceRecord& r : trace.records) {
    if (r.k < 1) continue;
    EXPECT_LE(r.objective, fallback / std::sqrt(r.k) + 1e-9);
  }
}

TEST(SmoothingCndg, RejectsIncreasingEta) {
  Matrix a(2, 2);
  a << 0, 1, -1, 0;
  SaddleObjective s(a, ProxSetup::entropy_simplex(2));
  FeasibleSet simplex = FeasibleSet::standard_simplex(2);
  SolverConfig cfg;
  cfg.max_iterations = 5;
  EXPECT_THROW(smoothing_cndg(s, simplex,
                              [](int k) { return static_cast<double>(k); },
                              cfg),
               std::invalid_argument);
}

TEST(RandomizedCndg, LinearObjectiveMatchesClassic) {
  Vector c(6);
  c << 0.5, -1.0, 0.2, 0.9, -0.3, 0.0;
  FeasibleSet cube = FeasibleSet::hypercube(6);
  NonsmoothObjective nf;
  nf.value = [c](const Vector& x) { return c.dot(x); };
  nf.subgrad = [c](const Vector&) { return c; };
  nf.lipschitz = c.norm();
  SolverConfig cfg;
  cfg.max_iterations = 30;
  cfg.seed = 3;
  IterationTrace randomized = randomized_cndg(nf, cube, cfg);
  IterationTrace classic = cndg(linear_objective(c), cube, cfg);
  EXPECT_TRUE(randomized.final_iterate.isApprox(classic.final_iterate, 1e-12));
}

TEST(RandomizedCndg, SubgradientBudget) {
  NonsmoothObjective nf;
  nf.value = [](const Vector& x) { return x.norm(); };
  nf.subgrad = [](const Vector& x) {
    double n = x.norm();
    return n == 0.0 ? Vector(Vector::Zero(x.size())) : Vector(x / n);
  };
  nf.lipschitz = 1.0;
  FeasibleSet cube = FeasibleSet::hypercube(8);
  SolverConfig cfg;
  cfg.max_iterations = 40;
  IterationTrace trace = randomized_cndg(nf, cube, cfg);
  EXPECT_EQ(trace.gradient_evals, 40LL * 41 / 2);
  EXPECT_EQ(trace.oracle_calls, 40);
}

TEST(ShrinkingCndg, TerminationGuard) {
  Vector c = Vector::Constant(4, 0.5);
  SmoothObjective f = shifted_norm_squared(c);
  FeasibleSet cube = FeasibleSet::hypercube(4);
  SolverConfig cfg;
  // epsilon >= mu R_0^2 / 2 = 1: nothing to do.
  IterationTrace trace = shrinking_cndg(f, cube, 1.5, cfg);
  EXPECT_EQ(trace.oracle_calls, 0);
  EXPECT_TRUE(trace.phases.empty());
}

TEST(ShrinkingCndg, ContractsAndTracksOptimum) {
  Vector c(4);
  c << 0.3, 0.6, 0.45, 0.52;
  SmoothObjective f = shifted_norm_squared(c);
  FeasibleSet cube = FeasibleSet::hypercube(4);
  SolverConfig cfg;
  cfg.step = StepRule::LineSearch;
  const double eps = 1e-5;
  IterationTrace trace = shrinking_cndg(f, cube, eps, cfg);
  const double mu = 2.0;
  ASSERT_FALSE(trace.phases.empty());
  for (const IterationTrace::Phase& phase : trace.phases) {
    // x* remains inside the shrunken ball and the phase certificate holds.
    EXPECT_LE((phase.center - c).cwiseAbs().maxCoeff(), phase.radius + 1e-12);
    EXPECT_LE(phase.objective, mu * phase.radius * phase.radius / 2.0 + 1e-12);
  }
  EXPECT_LE(mu * trace.phases.back().radius * trace.phases.back().radius / 2.0,
            eps);
  EXPECT_LE(f.value(trace.final_iterate), eps);
  // Inner loop length is ceil(8 L / mu) = 8 per phase.
  EXPECT_EQ(trace.oracle_calls,
            static_cast<long long>(trace.phases.size()) * 8);
}

TEST(ShrinkingCndg, RejectsBadInputs) {
  Vector c = Vector::Constant(3, 0.5);
  SmoothObjective f = shifted_norm_squared(c);
  SmoothObjective weak = f;
  weak.strong_convexity = 0.0;
  FeasibleSet cube = FeasibleSet::hypercube(3);
  EXPECT_THROW(shrinking_cndg(weak, cube, 1e-3, {}), std::invalid_argument);
  FeasibleSet simplex = FeasibleSet::standard_simplex(3);
  EXPECT_THROW(shrinking_cndg(f, simplex, 1e-3, {}), UnsupportedDomainError);
  EXPECT_THROW(shrinking_cndg(f, cube, 0.0, {}), std::invalid_argument);
}

TEST(HolderDiagnostic, Examples) {
  IterationTrace trace;
  Vector p1(2), p2(2), p3(2);
  p1 << 1e-6, 0.0;
  p2 << -1e-6, 0.0;
  p3 << -1e-6, 0.0;
  FeasibleSet simplex = FeasibleSet::standard_simplex(2);
  trace.oracle_inputs = {p1, p2, p3};
  trace.oracle_outputs = {simplex.lmo(p1), simplex.lmo(p2), simplex.lmo(p3)};
  auto ratios = holder_diagnostic(trace, 0.5);
  ASSERT_EQ(ratios.size(), 2u);
  // A sign flip in the direction jumps between vertices: the ratio spikes.
  EXPECT_GT(ratios[0], 500.0);
  // Identical consecutive outputs give ratio zero.
  EXPECT_DOUBLE_EQ(ratios[1], 0.0);

  EXPECT_THROW(holder_diagnostic(IterationTrace{}, 0.5),
               std::invalid_argument);
  EXPECT_THROW(holder_diagnostic(trace, 0.0), std::invalid_argument);
}

TEST(HolderDiagnostic, BallOracleHasBoundedRatios) {
  FeasibleSet ball = FeasibleSet::euclidean_ball(Vector::Zero(3), 2.0);
  RngStream rng(67);
  IterationTrace trace;
  double min_norm = 1e300;
  Vector p(3);
  p << 1.0, 0.5, -0.25;
  for (int k = 0; k < 20; ++k) {
    trace.oracle_inputs.push_back(p);
    trace.oracle_outputs.push_back(ball.lmo(p));
    min_norm = std::min(min_norm, p.norm());
    for (int i = 0; i < 3; ++i) p[i] += rng.uniform(-0.05, 0.05);
  }
  auto ratios = holder_diagnostic(trace, 1.0);
  for (double q : ratios) {
    EXPECT_LE(q, 2.0 * 2.0 / min_norm + 1e-9);
  }
}

}  // namespace
}  // namespace lcpkit
