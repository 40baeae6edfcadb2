#include "lcpkit/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace lcpkit {

double gamma(int k) {
  if (k < 1) throw std::invalid_argument("gamma: k must be >= 1");
  return 2.0 / (k + 1.0);
}

double big_gamma(int k) {
  if (k < 1) throw std::invalid_argument("big_gamma: k must be >= 1");
  return 2.0 / (static_cast<double>(k) * (k + 1.0));
}

double unroll_recursion(double delta0, std::span<const double> gammas,
                        std::span<const double> bs) {
  if (gammas.empty() || gammas.size() != bs.size()) {
    throw std::invalid_argument(
        "unroll_recursion: sequences must be non-empty and equal length");
  }
  for (double g : gammas) {
    if (!(g > 0.0) || g > 1.0) {
      throw std::invalid_argument("unroll_recursion: gamma outside (0,1]");
    }
  }
  // Iterating the recursion with equality reproduces the closed form
  // Gamma_k (1 - gamma_1) Delta_0 + Gamma_k sum_i B_i / Gamma_i and stays
  // well defined when some interior gamma equals 1.
  double bound = delta0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    bound = (1.0 - gammas[i]) * bound + bs[i];
  }
  return bound;
}

double golden_section(const std::function<double(double)>& phi, double lo,
                      double hi, double tol) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = phi(c), fd = phi(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = phi(d);
    }
  }
  double mid = 0.5 * (a + b);
  // Endpoints matter for clamped steps; keep whichever evaluates best.
  double fm = phi(mid);
  double flo = phi(lo), fhi = phi(hi);
  if (flo <= fm && flo <= fhi) return lo;
  if (fhi <= fm && fhi <= flo) return hi;
  return mid;
}

}  // namespace lcpkit
