#include "lcpkit/trace.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lcpkit {

const TraceRecord& IterationTrace::at_iteration(int k) const {
  for (const TraceRecord& r : records) {
    if (r.k == k) return r;
  }
  throw std::out_of_range("IterationTrace: no record for iteration " +
                          std::to_string(k));
}

nlohmann::json IterationTrace::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRecord& r : records) {
    nlohmann::json row{{"k", r.k},
                       {"objective", r.objective},
                       {"alpha", r.alpha},
                       {"cert_sum", r.cert_sum},
                       {"oracle_calls", r.oracle_calls},
                       {"elapsed_seconds", r.elapsed_seconds}};
    if (r.wolfe_gap) row["wolfe_gap"] = *r.wolfe_gap;
    if (r.dual_bound) row["dual_bound"] = *r.dual_bound;
    rows.push_back(std::move(row));
  }
  nlohmann::json out{{"records", std::move(rows)},
                     {"oracle_calls", oracle_calls},
                     {"gap_probe_calls", gap_probe_calls},
                     {"gradient_evals", gradient_evals}};
  out["final_iterate"] = std::vector<double>(
      final_iterate.data(), final_iterate.data() + final_iterate.size());
  if (!phases.empty()) {
    nlohmann::json ph = nlohmann::json::array();
    for (const Phase& p : phases) {
      ph.push_back({{"t", p.t},
                    {"radius", p.radius},
                    {"objective", p.objective},
                    {"oracle_calls", p.oracle_calls}});
    }
    out["phases"] = std::move(ph);
  }
  return out;
}

}  // namespace lcpkit
