#include "lcpkit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace lcpkit {

namespace {

constexpr std::uint64_t kPlantedStream = 1;
constexpr std::uint64_t kOperatorStream = 2;
constexpr std::uint64_t kStartStream = 3;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SetKind domain_from_tag(const std::string& tag) {
  if (tag == "simplex") return SetKind::ScaledSimplex;
  if (tag == "spectrahedron") return SetKind::Spectrahedron;
  if (tag == "hypercube") return SetKind::Hypercube;
  if (tag == "knapsack_box") return SetKind::KnapsackBox;
  throw std::invalid_argument("unknown domain tag: " + tag);
}

FeasibleSet make_set(const InstanceSpec& spec) {
  switch (spec.domain) {
    case SetKind::ScaledSimplex:
      return FeasibleSet::standard_simplex(spec.n);
    case SetKind::Spectrahedron:
      return FeasibleSet::spectrahedron(spec.n);
    case SetKind::Hypercube:
      return FeasibleSet::hypercube(spec.n);
    case SetKind::KnapsackBox:
      return FeasibleSet::knapsack_box(spec.n, spec.ratio);
    default:
      throw std::invalid_argument("bench: unsupported domain");
  }
}

std::shared_ptr<const SparseLinearMap> draw_operator(const InstanceSpec& spec,
                                                     int ambient_dim) {
  RngStream rng(RngStream::derive(spec.seed, kOperatorStream));
  std::vector<Eigen::Triplet<double>> triplets;
  if (spec.domain == SetKind::Spectrahedron) {
    // Rows are vectorized sparse symmetric matrices; the upper triangle
    // is drawn and mirrored.
    const int side = spec.n;
    for (int r = 0; r < spec.m; ++r) {
      for (int i = 0; i < side; ++i) {
        for (int j = i; j < side; ++j) {
          if (rng.uniform() < spec.density) {
            double v = rng.uniform();
            triplets.emplace_back(r, i * side + j, v);
            if (i != j) triplets.emplace_back(r, j * side + i, v);
          }
        }
      }
    }
  } else {
    for (int r = 0; r < spec.m; ++r) {
      for (int c = 0; c < spec.n; ++c) {
        if (rng.uniform() < spec.density) {
          triplets.emplace_back(r, c, rng.uniform());
        }
      }
    }
  }
  return std::make_shared<SparseLinearMap>(spec.m, ambient_dim, triplets);
}

int pool_size(int requested, int cells) {
  int threads = requested;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (const char* cap = std::getenv("LCPKIT_THREADS")) {
    int limit = std::atoi(cap);
    if (limit >= 1) threads = std::min(threads, limit);
  }
  return std::max(1, std::min(threads, cells));
}

double record_value(const IterationTrace& trace, int k) {
  int best_k = 0;
  double value = trace.records.empty() ? 0.0 : trace.records.front().objective;
  for (const TraceRecord& r : trace.records) {
    if (r.k <= k && r.k >= best_k) {
      best_k = r.k;
      value = r.objective;
    }
  }
  return value;
}

std::string check_certificate(Algorithm alg, const IterationTrace& trace,
                              double lipschitz) {
  for (const TraceRecord& r : trace.records) {
    if (r.k < 1) continue;
    double bound =
        2.0 * lipschitz / (static_cast<double>(r.k) * (r.k + 1.0)) * r.cert_sum;
    if (r.objective > bound + 1e-8) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "certificate violated at k=%d: f=%.6e bound=%.6e", r.k,
                    r.objective, bound);
      return buf;
    }
    if (alg == Algorithm::PdaCndg && r.dual_bound &&
        *r.dual_bound > 1e-8) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "dual bound above optimum at k=%d: psi=%.6e", r.k,
                    *r.dual_bound);
      return buf;
    }
  }
  return {};
}

struct CatalogRow {
  const char* name;
  const char* domain;
  int n;
  int m;
  double density;
  double ratio;
};

constexpr CatalogRow kCatalog[] = {
    {"SIM11", "simplex", 2000, 500, 1.0, 0.0},
    {"SIM12", "simplex", 2000, 1000, 1.0, 0.0},
    {"SIM21", "simplex", 4000, 1000, 0.8, 0.0},
    {"SIM22", "simplex", 4000, 2000, 0.8, 0.0},
    {"SIM31", "simplex", 8000, 2000, 0.6, 0.0},
    {"SIM32", "simplex", 8000, 4000, 0.6, 0.0},
    {"SPE41", "spectrahedron", 100, 500, 0.6, 0.0},
    {"SPE42", "spectrahedron", 100, 1000, 0.6, 0.0},
    {"SPE51", "spectrahedron", 200, 500, 0.4, 0.0},
    {"SPE52", "spectrahedron", 200, 1000, 0.4, 0.0},
    {"SPE61", "spectrahedron", 400, 500, 0.2, 0.0},
    {"SPE62", "spectrahedron", 400, 1000, 0.2, 0.0},
    {"CUB11", "hypercube", 500, 100, 1.0, 0.0},
    {"CUB12", "hypercube", 500, 200, 1.0, 0.0},
    {"CUB21", "hypercube", 1000, 250, 1.0, 0.0},
    {"CUB22", "hypercube", 1000, 500, 1.0, 0.0},
    {"CUB31", "hypercube", 2000, 500, 1.0, 0.0},
    {"CUB32", "hypercube", 2000, 1000, 1.0, 0.0},
    {"CUB41", "hypercube", 4000, 1000, 0.8, 0.0},
    {"CUB42", "hypercube", 4000, 2000, 0.8, 0.0},
    {"CUB51", "hypercube", 8000, 2000, 0.6, 0.0},
    {"CUB52", "hypercube", 8000, 4000, 0.6, 0.0},
    {"CUB61", "hypercube", 16000, 4000, 0.4, 0.0},
    {"CUB62", "hypercube", 16000, 8000, 0.4, 0.0},
    {"HYB11", "knapsack_box", 4000, 1000, 0.8, 0.25},
    {"HYB12", "knapsack_box", 4000, 2000, 0.8, 0.25},
    {"HYB21", "knapsack_box", 4000, 1000, 0.8, 0.5},
    {"HYB22", "knapsack_box", 4000, 2000, 0.8, 0.5},
    {"HYB31", "knapsack_box", 8000, 2000, 0.6, 0.25},
    {"HYB32", "knapsack_box", 8000, 4000, 0.6, 0.25},
    {"HYB41", "knapsack_box", 8000, 2000, 0.6, 0.5},
    {"HYB42", "knapsack_box", 8000, 4000, 0.6, 0.5},
    {"HYB51", "knapsack_box", 16000, 4000, 0.4, 0.25},
    {"HYB52", "knapsack_box", 16000, 8000, 0.4, 0.25},
    {"HYB61", "knapsack_box", 16000, 4000, 0.4, 0.5},
    {"HYB62", "knapsack_box", 16000, 8000, 0.4, 0.5},
};

InstanceSpec make_spec(const CatalogRow& row, BenchScale scale,
                       std::uint64_t seed_base) {
  InstanceSpec spec;
  spec.name = row.name;
  spec.domain = domain_from_tag(row.domain);
  int divisor = scale == BenchScale::Desk ? 8 : 1;
  spec.n = std::max(2, row.n / divisor);
  spec.m = std::max(1, row.m / divisor);
  spec.density = row.density;
  spec.ratio = row.ratio > 0.0 ? row.ratio : 0.5;
  spec.seed = RngStream::derive(seed_base, fnv1a(row.name));
  return spec;
}

}  // namespace

nlohmann::json InstanceSpec::to_json() const {
  return {{"name", name},       {"domain", lcpkit::to_string(domain)},
          {"n", n},             {"m", m},
          {"density", density}, {"ratio", ratio},
          {"seed", seed}};
}

InstanceSpec InstanceSpec::from_json(const nlohmann::json& j) {
  InstanceSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.domain = domain_from_tag(j.at("domain").get<std::string>());
  spec.n = j.at("n").get<int>();
  spec.m = j.at("m").get<int>();
  spec.density = j.at("density").get<double>();
  spec.ratio = j.at("ratio").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

GeneratedInstance generate_instance(const InstanceSpec& spec) {
  if (!(spec.density > 0.0) || spec.density > 1.0) {
    throw std::invalid_argument("generate_instance: density outside (0,1]");
  }
  if (spec.n < 1 || spec.m < 1) {
    throw std::invalid_argument("generate_instance: dimensions must be >= 1");
  }
  FeasibleSet set = make_set(spec);
  RngStream planted_rng(RngStream::derive(spec.seed, kPlantedStream));
  Vector s0 = set.sample(planted_rng);
  auto op = draw_operator(spec, set.dim());
  Vector b = op->apply(s0);
  return GeneratedInstance{QuadraticObjective(op, std::move(b)), std::move(set),
                           std::move(s0)};
}

Vector starting_point(const InstanceSpec& spec, const FeasibleSet& set) {
  RngStream rng(RngStream::derive(spec.seed, kStartStream));
  return set.sample(rng);
}

nlohmann::json instance_to_json(const InstanceSpec& spec,
                                const GeneratedInstance& inst) {
  nlohmann::json triplets = nlohmann::json::array();
  const auto& m = inst.objective.op().matrix();
  for (int r = 0; r < m.outerSize(); ++r) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(m, r);
         it; ++it) {
      triplets.push_back({it.row(), it.col(), it.value()});
    }
  }
  const Vector& b = inst.objective.rhs();
  return {{"spec", spec.to_json()},
          {"operator",
           {{"rows", inst.objective.op().rows()},
            {"cols", inst.objective.op().cols()},
            {"triplets", std::move(triplets)}}},
          {"b", std::vector<double>(b.data(), b.data() + b.size())},
          {"s0", std::vector<double>(inst.planted.data(),
                                     inst.planted.data() + inst.planted.size())}};
}

std::pair<InstanceSpec, GeneratedInstance> instance_from_json(
    const nlohmann::json& j) {
  InstanceSpec spec = InstanceSpec::from_json(j.at("spec"));
  FeasibleSet set = make_set(spec);
  const auto& op_json = j.at("operator");
  int rows = op_json.at("rows").get<int>();
  int cols = op_json.at("cols").get<int>();
  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& t : op_json.at("triplets")) {
    triplets.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(),
                          t.at(2).get<double>());
  }
  auto op = std::make_shared<SparseLinearMap>(rows, cols, triplets);
  auto b_vec = j.at("b").get<std::vector<double>>();
  auto s0_vec = j.at("s0").get<std::vector<double>>();
  Vector b = Eigen::Map<const Vector>(b_vec.data(), b_vec.size());
  Vector s0 = Eigen::Map<const Vector>(s0_vec.data(), s0_vec.size());
  return {spec, GeneratedInstance{QuadraticObjective(op, std::move(b)),
                                  std::move(set), std::move(s0)}};
}

std::vector<RunResult> run_experiment(const std::vector<InstanceSpec>& specs,
                                      const std::vector<Algorithm>& algorithms,
                                      const ExperimentOptions& opts) {
  const int n_algs = static_cast<int>(algorithms.size());
  std::vector<RunResult> results(specs.size() * algorithms.size());

  for (std::size_t si = 0; si < specs.size(); ++si) {
    const InstanceSpec& spec = specs[si];
    GeneratedInstance inst = generate_instance(spec);
    SmoothObjective f = inst.objective.as_smooth();
    Vector y0 = starting_point(spec, inst.set);

    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int ai = next.fetch_add(1); ai < n_algs; ai = next.fetch_add(1)) {
        RunResult& out = results[si * n_algs + ai];
        out.instance = spec.name;
        out.algorithm = to_string(algorithms[ai]);
        try {
          SolverConfig cfg;
          cfg.max_iterations = opts.iterations;
          cfg.step = opts.step;
          cfg.start = y0;
          IterationTrace trace;
          switch (algorithms[ai]) {
            case Algorithm::Cndg:
              trace = cndg(f, inst.set, cfg);
              break;
            case Algorithm::PaCndg:
              trace = pa_cndg(f, inst.set, cfg);
              break;
            case Algorithm::PdaCndg:
              trace = pda_cndg(f, inst.set, cfg);
              break;
            default:
              throw std::invalid_argument(
                  "run_experiment: only the cndg/pa/pda comparison set is "
                  "supported");
          }
          if (opts.certify) {
            out.error = check_certificate(algorithms[ai], trace, f.lipschitz);
          }
          out.f_y0 = record_value(trace, 0);
          out.f_y100 = record_value(trace, 100);
          out.f_y1000 = record_value(trace, 1000);
          out.time_s = trace.records.back().elapsed_seconds;
          out.oracle_calls = trace.oracle_calls;
          out.trace = std::move(trace);
        } catch (const std::exception& e) {
          out.error = e.what();
        }
      }
    };

    int threads = pool_size(opts.threads, n_algs);
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }
  return results;
}

void export_csv(const std::vector<RunResult>& results,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_csv: cannot open " + path);
  out << "instance,algorithm,f_y0,f_y100,f_y1000,time_s,oracle_calls\n";
  std::vector<const RunResult*> ordered;
  ordered.reserve(results.size());
  for (const RunResult& r : results) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const RunResult* a, const RunResult* b) {
                     if (a->instance != b->instance)
                       return a->instance < b->instance;
                     return a->algorithm < b->algorithm;
                   });
  char buf[64];
  for (const RunResult* r : ordered) {
    out << r->instance << ',' << r->algorithm;
    for (double v : {r->f_y0, r->f_y100, r->f_y1000, r->time_s}) {
      std::snprintf(buf, sizeof(buf), "%.2e", v);
      out << ',' << buf;
    }
    out << ',' << r->oracle_calls << '\n';
  }
  if (!out.flush()) throw std::runtime_error("export_csv: write failed: " + path);
}

void export_json(const std::vector<RunResult>& results,
                 const std::string& path) {
  nlohmann::json rows = nlohmann::json::array();
  std::vector<const RunResult*> ordered;
  ordered.reserve(results.size());
  for (const RunResult& r : results) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const RunResult* a, const RunResult* b) {
                     if (a->instance != b->instance)
                       return a->instance < b->instance;
                     return a->algorithm < b->algorithm;
                   });
  for (const RunResult* r : ordered) {
    nlohmann::json row{{"instance", r->instance},
                       {"algorithm", r->algorithm},
                       {"f_y0", r->f_y0},
                       {"f_y100", r->f_y100},
                       {"f_y1000", r->f_y1000},
                       {"time_s", r->time_s},
                       {"oracle_calls", r->oracle_calls}};
    if (!r->error.empty()) row["error"] = r->error;
    nlohmann::json summary{{"iterations",
                            r->trace.records.empty()
                                ? 0
                                : r->trace.records.back().k},
                           {"gap_probe_calls", r->trace.gap_probe_calls},
                           {"gradient_evals", r->trace.gradient_evals}};
    row["trace_summary"] = std::move(summary);
    rows.push_back(std::move(row));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_json: cannot open " + path);
  out << nlohmann::json{{"results", std::move(rows)}}.dump(2) << '\n';
  if (!out.flush()) {
    throw std::runtime_error("export_json: write failed: " + path);
  }
}

std::vector<RunResult> import_results_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("import_results_json: cannot open " + path);
  nlohmann::json j;
  in >> j;
  std::vector<RunResult> results;
  for (const auto& row : j.at("results")) {
    RunResult r;
    r.instance = row.at("instance").get<std::string>();
    r.algorithm = row.at("algorithm").get<std::string>();
    r.f_y0 = row.at("f_y0").get<double>();
    r.f_y100 = row.at("f_y100").get<double>();
    r.f_y1000 = row.at("f_y1000").get<double>();
    r.time_s = row.at("time_s").get<double>();
    r.oracle_calls = row.at("oracle_calls").get<long long>();
    if (row.contains("error")) r.error = row.at("error").get<std::string>();
    results.push_back(std::move(r));
  }
  return results;
}

Suite suite_from_string(const std::string& name) {
  if (name == "sim") return Suite::Sim;
  if (name == "spe") return Suite::Spe;
  if (name == "cub") return Suite::Cub;
  if (name == "hyb") return Suite::Hyb;
  throw std::invalid_argument("unknown suite: " + name);
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Sim: return "sim";
    case Suite::Spe: return "spe";
    case Suite::Cub: return "cub";
    case Suite::Hyb: return "hyb";
  }
  return "unknown";
}

std::vector<InstanceSpec> suite_specs(Suite suite, BenchScale scale,
                                      std::uint64_t seed_base) {
  std::vector<InstanceSpec> specs;
  const char* prefix = nullptr;
  switch (suite) {
    case Suite::Sim: prefix = "SIM"; break;
    case Suite::Spe: prefix = "SPE"; break;
    case Suite::Cub: prefix = "CUB"; break;
    case Suite::Hyb: prefix = "HYB"; break;
  }
  const bool pick_first_column =
      suite == Suite::Cub || suite == Suite::Hyb;
  for (const CatalogRow& row : kCatalog) {
    if (std::string(row.name).rfind(prefix, 0) != 0) continue;
    // The hypercube and knapsack families publish six size tiers with two
    // row counts each; the benchmark suite takes one instance per tier.
    if (pick_first_column && row.name[4] != '1') continue;
    specs.push_back(make_spec(row, scale, seed_base));
  }
  return specs;
}

InstanceSpec catalog_spec(const std::string& name, BenchScale scale,
                          std::uint64_t seed_base) {
  for (const CatalogRow& row : kCatalog) {
    if (name == row.name) return make_spec(row, scale, seed_base);
  }
  throw std::invalid_argument("unknown catalog instance: " + name);
}

}  // namespace lcpkit
