#include "lcpkit/lmo.hpp"

#include <stdexcept>

namespace lcpkit {

ResistingOracleState::ResistingOracleState(int n, double scale,
                                           int initial_index)
    : n_(n), scale_(scale), in_support_(n, 0) {
  if (n < 1) {
    throw std::invalid_argument("ResistingOracleState: n must be >= 1");
  }
  if (!(scale > 0.0)) {
    throw std::invalid_argument("ResistingOracleState: scale must be positive");
  }
  if (initial_index < 0 || initial_index >= n) {
    throw std::invalid_argument("ResistingOracleState: bad initial index");
  }
  support_order_.push_back(initial_index);
  in_support_[initial_index] = 1;
}

Vector ResistingOracleState::minimize(const Vector& p) {
  if (p.size() != n_) {
    throw std::invalid_argument("ResistingOracleState: dimension mismatch");
  }
  if (!p.allFinite()) {
    throw std::invalid_argument("ResistingOracleState: non-finite entries");
  }
  double min_value = p.minCoeff();
  int chosen = -1;
  for (int i = 0; i < n_; ++i) {
    if (p[i] == min_value && !in_support_[i]) {
      chosen = i;
      break;
    }
  }
  if (chosen < 0) {
    for (int i = 0; i < n_; ++i) {
      if (p[i] == min_value) {
        chosen = i;
        break;
      }
    }
  }
  if (!in_support_[chosen]) {
    in_support_[chosen] = 1;
    support_order_.push_back(chosen);
  }
  Vector x = Vector::Zero(n_);
  x[chosen] = scale_;
  return x;
}

Vector resisting_lmo(ResistingOracleState& state, const Vector& p) {
  return state.minimize(p);
}

}  // namespace lcpkit
