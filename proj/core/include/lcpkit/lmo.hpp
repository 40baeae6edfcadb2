#ifndef LCPKIT_LMO_HPP_
#define LCPKIT_LMO_HPP_

#include <vector>

#include "lcpkit/feasible_set.hpp"

namespace lcpkit {

// Call-counted linear minimization oracle. Solvers only see this surface,
// so the adversarial oracle below can be swapped in transparently.
class Lmo {
 public:
  virtual ~Lmo() = default;

  Vector minimize(const Vector& p) {
    ++calls_;
    return do_minimize(p);
  }
  long long calls() const { return calls_; }

 private:
  virtual Vector do_minimize(const Vector& p) = 0;
  long long calls_ = 0;
};

class SetLmo final : public Lmo {
 public:
  explicit SetLmo(const FeasibleSet& set) : set_(&set) {}

 private:
  Vector do_minimize(const Vector& p) override { return set_->lmo(p); }
  const FeasibleSet* set_;
};

// Adversarial oracle over the scaled simplex {sum x = scale, x >= 0}.
// Every output is a vertex scale * e_j; ties among minimizing coordinates
// are broken toward the lowest index not yet emitted, else the lowest
// index overall. The start vertex counts as already emitted.
class ResistingOracleState {
 public:
  ResistingOracleState(int n, double scale, int initial_index = 0);

  Vector minimize(const Vector& p);

  int dim() const { return n_; }
  double scale() const { return scale_; }
  const std::vector<int>& returned_support() const { return support_order_; }

 private:
  int n_;
  double scale_;
  std::vector<int> support_order_;
  std::vector<char> in_support_;
};

Vector resisting_lmo(ResistingOracleState& state, const Vector& p);

class ResistingLmo final : public Lmo {
 public:
  explicit ResistingLmo(ResistingOracleState& state) : state_(&state) {}

 private:
  Vector do_minimize(const Vector& p) override { return state_->minimize(p); }
  ResistingOracleState* state_;
};

}  // namespace lcpkit

#endif  // LCPKIT_LMO_HPP_
