#include "qmem/error_model.hpp"

#include <cmath>

namespace qmem {

namespace {

void require_coupling(double g) {
  if (!(g > 0.0)) throw std::domain_error("coupling g must be positive");
}

// pi (n Gr + 3 Gq/4) / g, written as (2n Gr + 3 Gq/2) T_s so the two public
// entry points agree bit for bit.
double decoherence_term(double gamma_q, double gamma_r, double n, double g) {
  return (2.0 * n * gamma_r + 1.5 * gamma_q) * (constants::pi / (2.0 * g));
}

double crosstalk_term(double omega0, double a, double n, double g) {
  const double x = 4.0 * n * g / omega0;
  return a * x * x;
}

double rate_combination(const SystemParams& p, double n) {
  return n * p.gamma_r + 0.75 * p.gamma_q;
}

}  // namespace

double decoherence_error(const SystemParams& p, double g,
                         DecoherenceForm form) {
  require_coupling(g);
  const double n = p.n_resonators;
  if (form == DecoherenceForm::Approximate)
    return decoherence_term(p.gamma_q, p.gamma_r, n, g);
  return ((2.0 * n - 1.5) * p.gamma_r + 1.5 * p.gamma_q) * swap_time(g);
}

double crosstalk_error(const SystemParams& p, double g) {
  require_coupling(g);
  return crosstalk_term(p.omega0, p.crosstalk_a, p.n_resonators, g);
}

ErrorBreakdown total_error(const SystemParams& p, double g) {
  return total_error(p, static_cast<double>(p.n_resonators), g);
}

ErrorBreakdown total_error(const SystemParams& p, double n, double g) {
  require_coupling(g);
  ErrorBreakdown b;
  b.decoherence = decoherence_term(p.gamma_q, p.gamma_r, n, g);
  b.crosstalk = crosstalk_term(p.omega0, p.crosstalk_a, n, g);
  b.total = b.decoherence + b.crosstalk;
  b.out_of_model = b.total > 1.0;
  return b;
}

double optimal_coupling(const SystemParams& p) {
  return optimal_coupling(p, static_cast<double>(p.n_resonators));
}

double optimal_coupling(const SystemParams& p, double n) {
  if (p.gamma_q <= 0.0 && p.gamma_r <= 0.0)
    throw std::domain_error(
        "optimal coupling is undefined when both decoherence rates vanish");
  const double c = rate_combination(p, n);
  return std::cbrt(constants::pi * c * p.omega0 * p.omega0 /
                   (32.0 * p.crosstalk_a * n * n));
}

double optimal_error(const SystemParams& p) {
  return optimal_error(p, static_cast<double>(p.n_resonators));
}

double optimal_error(const SystemParams& p, double n) {
  if (p.gamma_q <= 0.0 && p.gamma_r <= 0.0)
    throw std::domain_error(
        "optimal error is undefined when both decoherence rates vanish");
  const double c = rate_combination(p, n);
  const double pi = constants::pi;
  return 3.0 * std::cbrt(4.0 * p.crosstalk_a * pi * pi * n * n * c * c /
                         (p.omega0 * p.omega0));
}

PurcellCorrection purcell_corrections(const SystemParams& p, double g) {
  require_coupling(g);
  const double n = p.n_resonators;
  PurcellCorrection c;
  const double x = n * g / p.omega0;
  c.excess_rate = 4.0 * p.gamma_q * x * x;
  c.error_increase = constants::pi * c.excess_rate * n / g;
  c.ratio = c.error_increase / total_error(p, g).total;
  return c;
}

double purcell_ratio_bound(double n, double crosstalk_a, double q_qubit) {
  if (!(q_qubit > 0.0) || !(crosstalk_a > 0.0) || !(n > 0.0))
    throw std::domain_error("n, A and Qq must be positive");
  const double pi = constants::pi;
  return (2.0 / 3.0) * std::cbrt(pi * pi * std::pow(n, 5) /
                                 (12.0 * crosstalk_a * crosstalk_a * q_qubit *
                                  q_qubit));
}

double purcell_ratio_bound_at_volume_optimum(double crosstalk_a,
                                             double q_qubit) {
  if (!(q_qubit > 0.0) || !(crosstalk_a > 0.0))
    throw std::domain_error("A and Qq must be positive");
  const double pi = constants::pi;
  return (1.0 / (9.0 * crosstalk_a)) *
         std::pow(8.0 * pi * std::sqrt(crosstalk_a / 3.0) / (3.0 * q_qubit),
                  0.25);
}

}  // namespace qmem
