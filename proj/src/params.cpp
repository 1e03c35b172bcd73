#include "qmem/params.hpp"

#include <cmath>

namespace qmem {

SystemParams SystemParams::from_rates(double omega0, double gamma_q,
                                      double gamma_r, double crosstalk_a,
                                      int n_resonators) {
  SystemParams p;
  p.omega0 = omega0;
  p.gamma_q = gamma_q;
  p.gamma_r = gamma_r;
  p.crosstalk_a = crosstalk_a;
  p.n_resonators = n_resonators;
  p.validate();
  return p;
}

SystemParams SystemParams::from_quality_factors(double omega0, double q_qubit,
                                                double q_mech,
                                                double crosstalk_a,
                                                int n_resonators) {
  return from_rates(omega0, rate_from_quality(omega0, q_qubit),
                    rate_from_quality(omega0, q_mech), crosstalk_a,
                    n_resonators);
}

SystemParams SystemParams::with_n(int n) const {
  SystemParams p = *this;
  p.n_resonators = n;
  p.validate();
  return p;
}

void SystemParams::validate() const {
  if (!(omega0 > 0.0))
    throw std::invalid_argument("omega0 must be positive");
  if (!(gamma_q >= 0.0) || !std::isfinite(gamma_q))
    throw std::invalid_argument("gamma_q must be finite and nonnegative");
  if (!(gamma_r >= 0.0) || !std::isfinite(gamma_r))
    throw std::invalid_argument("gamma_r must be finite and nonnegative");
  if (!(crosstalk_a > 0.0))
    throw std::invalid_argument("crosstalk prefactor A must be positive");
  if (n_resonators < 2)
    throw std::invalid_argument(
        "n_resonators must be at least 2; a single resonator admits no "
        "two-qubit gate");
}

std::vector<std::string> SystemParams::warnings() const {
  std::vector<std::string> out;
  if (gamma_q / omega0 > 1e-3)
    out.push_back("gamma_q/omega0 exceeds 1e-3; the weak-decoherence model "
                  "may not apply");
  if (gamma_r / omega0 > 1e-3)
    out.push_back("gamma_r/omega0 exceeds 1e-3; the weak-decoherence model "
                  "may not apply");
  return out;
}

double nearest_neighbor_detuning(const SystemParams& p) {
  return p.omega0 / (2.0 * p.n_resonators);
}

double effective_min_detuning(const SystemParams& p) {
  return p.omega0 / (4.0 * p.n_resonators);
}

double swap_time(double g) {
  if (!(g > 0.0)) throw std::domain_error("coupling g must be positive");
  return constants::pi / (2.0 * g);
}

double gate_time(double g) { return 2.0 * swap_time(g); }

double step_duration(const SystemParams& p, double g) {
  return 2.0 * p.n_resonators * swap_time(g);
}

}  // namespace qmem
