#ifndef LCPKIT_SCHEDULE_HPP_
#define LCPKIT_SCHEDULE_HPP_

#include <functional>
#include <span>

namespace lcpkit {

// Stepsize policies: open loop alpha_k = 2/(k+1), or exact one-dimensional
// minimization over [0,1].
enum class StepRule { OpenLoop, LineSearch };

// gamma_k = 2/(k+1), k >= 1.
double gamma(int k);

// Gamma_k = 2/(k(k+1)), the closed form of the product recursion
// Gamma_1 = 1, Gamma_k = (1 - gamma_k) Gamma_{k-1}.
double big_gamma(int k);

// Upper bound produced by unrolling
//   D_k <= (1 - g_k) D_{k-1} + B_k
// with g_k in (0,1]:
//   D_k <= Gamma_k (1 - g_1) D_0 + Gamma_k sum_i B_i / Gamma_i,
// where Gamma follows the product recursion above for the given g sequence.
double unroll_recursion(double delta0, std::span<const double> gammas,
                        std::span<const double> bs);

// Golden-section minimization of a unimodal function on [lo, hi].
double golden_section(const std::function<double(double)>& phi, double lo,
                      double hi, double tol = 1e-10);

}  // namespace lcpkit

#endif  // LCPKIT_SCHEDULE_HPP_
