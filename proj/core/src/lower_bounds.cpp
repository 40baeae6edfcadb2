#include "lcpkit/lower_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lcpkit {

HardInstance::HardInstance(Family family, int n, double lipschitz,
                           double scale, double dual_radius)
    : family_(family),
      n_(n),
      lipschitz_(lipschitz),
      scale_(scale),
      dual_radius_(dual_radius) {
  if (n < 1) throw std::invalid_argument("HardInstance: n must be >= 1");
  if (!(lipschitz > 0.0) || !(scale > 0.0) || !(dual_radius > 0.0)) {
    throw std::invalid_argument("HardInstance: parameters must be positive");
  }
}

HardInstance HardInstance::smooth_quadratic(int n, double lipschitz,
                                            double scale) {
  return HardInstance(Family::SmoothQuadratic, n, lipschitz, scale, 1.0);
}

HardInstance HardInstance::nonsmooth_norm(int n, double lipschitz,
                                          double scale) {
  return HardInstance(Family::NonsmoothNorm, n, lipschitz, scale, 1.0);
}

HardInstance HardInstance::saddle_scaled(int n, double lipschitz, double scale,
                                         double dual_radius) {
  return HardInstance(Family::SaddleScaled, n, lipschitz, scale, dual_radius);
}

double HardInstance::effective_lipschitz() const {
  return family_ == Family::SaddleScaled ? lipschitz_ * dual_radius_
                                         : lipschitz_;
}

double HardInstance::optimal_value() const {
  if (family_ == Family::SmoothQuadratic) {
    return lipschitz_ * scale_ * scale_ / (2.0 * n_);
  }
  return effective_lipschitz() * scale_ / std::sqrt(static_cast<double>(n_));
}

double HardInstance::objective(const Vector& x) const {
  if (family_ == Family::SmoothQuadratic) {
    return 0.5 * lipschitz_ * x.squaredNorm();
  }
  return effective_lipschitz() * x.norm();
}

SmoothObjective HardInstance::smooth() const {
  if (family_ != Family::SmoothQuadratic) {
    throw std::invalid_argument("HardInstance::smooth: family is nonsmooth");
  }
  const double l = lipschitz_;
  SmoothObjective f;
  f.value = [l](const Vector& x) { return 0.5 * l * x.squaredNorm(); };
  f.grad = [l](const Vector& x) { return Vector(l * x); };
  f.lipschitz = l;
  f.strong_convexity = l;
  f.exact_linesearch = [](const Vector& y, const Vector& x) {
    Vector d = x - y;
    double denom = d.squaredNorm();
    if (denom == 0.0) return 0.0;
    return std::min(1.0, std::max(0.0, -y.dot(d) / denom));
  };
  return f;
}

NonsmoothObjective HardInstance::nonsmooth() const {
  const double m = effective_lipschitz();
  NonsmoothObjective f;
  if (family_ == Family::SmoothQuadratic) {
    const double l = lipschitz_;
    f.value = [l](const Vector& x) { return 0.5 * l * x.squaredNorm(); };
    f.subgrad = [l](const Vector& x) { return Vector(l * x); };
    // Gradient norm over the simplex is at most L * D.
    f.lipschitz = lipschitz_ * scale_;
    return f;
  }
  f.value = [m](const Vector& x) { return m * x.norm(); };
  f.subgrad = [m](const Vector& x) {
    double norm = x.norm();
    if (norm == 0.0) return Vector(Vector::Zero(x.size()));
    return Vector((m / norm) * x);
  };
  f.lipschitz = m;
  return f;
}

std::string to_string(HardInstance::Family family) {
  switch (family) {
    case HardInstance::Family::SmoothQuadratic: return "smooth";
    case HardInstance::Family::NonsmoothNorm: return "nonsmooth";
    case HardInstance::Family::SaddleScaled: return "saddle";
  }
  return "unknown";
}

double face_minimum(const HardInstance& inst, int support_size) {
  if (support_size < 1 || support_size > inst.dim()) {
    throw std::invalid_argument("face_minimum: support size outside [1, n]");
  }
  const double d = inst.scale();
  const double q = support_size;
  if (inst.family() == HardInstance::Family::SmoothQuadratic) {
    return inst.lipschitz() * d * d / (2.0 * q);
  }
  return inst.effective_lipschitz() * d / std::sqrt(q);
}

double gap_floor(const HardInstance& inst, int k) {
  if (k < 1 || k >= inst.dim()) {
    throw std::invalid_argument("gap_floor: k must satisfy 1 <= k <= n-1");
  }
  return face_minimum(inst, k + 1) - inst.optimal_value();
}

nlohmann::json FloorReport::to_json() const {
  nlohmann::json out{{"algorithm", algorithm}, {"family", family},
                     {"n", n},                 {"lipschitz", lipschitz},
                     {"scale", scale},         {"seed", seed},
                     {"all_hold", all_hold},   {"max_violation", max_violation}};
  nlohmann::json rows_json = nlohmann::json::array();
  for (const Row& r : rows) {
    rows_json.push_back({{"k", r.k},
                         {"gap", r.gap},
                         {"floor", r.floor},
                         {"lower_bound_iterations", r.lower_bound_iterations}});
  }
  out["rows"] = std::move(rows_json);
  return out;
}

FloorReport certify_floor(Algorithm alg, const HardInstance& inst,
                          int iterations, const SolverConfig& cfg) {
  if (iterations < 1 || iterations > inst.dim() - 1) {
    throw std::invalid_argument(
        "certify_floor: iterations must satisfy 1 <= K <= n-1");
  }
  const bool smooth_family =
      inst.family() == HardInstance::Family::SmoothQuadratic;
  const bool randomized = alg == Algorithm::RandomizedCndg;
  if (!randomized && !smooth_family) {
    throw std::invalid_argument(
        "certify_floor: nonsmooth families require the randomized solver");
  }
  if (alg != Algorithm::Cndg && alg != Algorithm::PaCndg &&
      alg != Algorithm::PdaCndg && !randomized) {
    throw std::invalid_argument(
        "certify_floor: unsupported solver for floor certification");
  }

  FeasibleSet domain = inst.domain();
  // Start at D e_1; the start vertex counts as already emitted.
  Vector start = Vector::Zero(inst.dim());
  start[0] = inst.scale();
  ResistingOracleState state(inst.dim(), inst.scale(), 0);
  ResistingLmo oracle(state);

  SolverConfig run_cfg = cfg;
  run_cfg.max_iterations = iterations;
  run_cfg.record_every = 1;
  run_cfg.start = start;
  run_cfg.random_start = false;
  run_cfg.stop_tolerance.reset();
  run_cfg.record_wolfe_gap = false;

  IterationTrace trace;
  switch (alg) {
    case Algorithm::Cndg:
      trace = cndg(inst.smooth(), domain, oracle, run_cfg);
      break;
    case Algorithm::PaCndg:
      trace = pa_cndg(inst.smooth(), domain, oracle, run_cfg);
      break;
    case Algorithm::PdaCndg:
      trace = pda_cndg(inst.smooth(), domain, oracle, run_cfg);
      break;
    default:
      trace = randomized_cndg(inst.nonsmooth(), domain, oracle, run_cfg);
      break;
  }

  FloorReport report;
  report.algorithm = to_string(alg);
  report.family = to_string(inst.family());
  report.n = inst.dim();
  report.lipschitz = inst.lipschitz();
  report.scale = inst.scale();
  report.seed = cfg.seed;

  const double fstar = inst.optimal_value();
  const double dx = domain.diameter();
  report.all_hold = true;
  for (const TraceRecord& r : trace.records) {
    if (r.k < 1) continue;
    FloorReport::Row row;
    row.k = r.k;
    row.gap = r.objective - fstar;
    row.floor = gap_floor(inst, r.k);
    double eps = std::max(row.gap, 1e-300);
    double bound;
    if (smooth_family) {
      bound = std::ceil(std::min(inst.dim() / 2.0,
                                 inst.lipschitz() * dx * dx / (4.0 * eps)));
    } else {
      const double m = inst.effective_lipschitz();
      bound = 0.25 * std::min(static_cast<double>(inst.dim()),
                              m * m * dx * dx / (2.0 * eps * eps));
    }
    row.lower_bound_iterations =
        std::max<long long>(0, static_cast<long long>(bound) - 1);
    if (row.gap < row.floor - 1e-10) {
      report.all_hold = false;
    }
    report.max_violation = std::max(report.max_violation, row.floor - row.gap);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace lcpkit
