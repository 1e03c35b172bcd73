#include "qmem/quantum_volume.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmem {

double circuit_depth(const SystemParams& p) {
  return circuit_depth(p, static_cast<double>(p.n_resonators));
}

double circuit_depth(const SystemParams& p, double n) {
  return 1.0 / (n * optimal_error(p, n));
}

VolumeResult solve_balance(const SystemParams& p, double n_min, double n_max) {
  if (!(n_min >= 2.0) || !(n_max > n_min))
    throw std::invalid_argument("balance range must satisfy 2 <= n_min < n_max");

  const auto excess = [&](double n) { return circuit_depth(p, n) - n; };

  double lo = n_min;
  double hi = n_max;
  if (!(excess(lo) > 0.0) || !(excess(hi) < 0.0)) {
    std::ostringstream msg;
    msg << "no balance point in range [" << n_min << ", " << n_max << "]";
    throw std::runtime_error(msg.str());
  }

  // d(N) is strictly decreasing, so d(N) - N has a single root.
  for (int i = 0; i < 200 && (hi - lo) > 1e-13 * (hi + lo); ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }

  VolumeResult r;
  r.n_star = 0.5 * (lo + hi);
  r.depth_at_n_star = circuit_depth(p, r.n_star);
  if (std::abs(r.n_star - r.depth_at_n_star) > 1e-6 * r.n_star)
    throw std::runtime_error("balance bisection failed to converge");
  r.volume_continuous = r.n_star * r.n_star;

  const int ilo = static_cast<int>(std::ceil(n_min));
  const int ihi = static_cast<int>(std::floor(n_max));
  for (int n = ilo; n <= ihi; ++n) {
    const double s = std::min(static_cast<double>(n), circuit_depth(p, n));
    if (s * s > r.volume_integer) {
      r.volume_integer = s * s;
      r.n_best_integer = n;
    }
  }
  return r;
}

double closed_form_volume(double q_qubit, double crosstalk_a, Regime regime) {
  if (!(q_qubit > 0.0) || !(crosstalk_a > 0.0))
    throw std::domain_error("Qq and A must be positive");
  const double pi = constants::pi;
  const double root3a = std::sqrt(3.0 * crosstalk_a);
  switch (regime) {
    case Regime::Mechanical:
      return std::sqrt(2.0 * q_qubit / (9.0 * pi * root3a));
    case Regime::Microwave:
      return std::pow(q_qubit / (6.0 * pi * root3a), 0.4);
  }
  throw std::invalid_argument("unknown regime");
}

}  // namespace qmem
