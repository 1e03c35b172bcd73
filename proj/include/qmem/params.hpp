#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qmem/constants.hpp"

namespace qmem {

// All frequencies inside the library are angular (rad/s). Plain Hz appears
// only at file and CLI boundaries, converted exactly once, here.
inline double hz_to_angular(double hz) { return constants::two_pi * hz; }
inline double angular_to_hz(double omega) { return omega / constants::two_pi; }

inline double rate_from_lifetime(double lifetime_s) {
  if (!(lifetime_s > 0.0)) throw std::domain_error("lifetime must be positive");
  return 1.0 / lifetime_s;
}

inline double rate_from_quality(double omega0, double quality) {
  if (!(omega0 > 0.0) || !(quality > 0.0))
    throw std::domain_error("omega0 and Q must be positive");
  return omega0 / quality;
}

/// Physical rates and counts defining one design point. Immutable value type;
/// the rates are generic decoherence rates (no T1/T2 distinction).
struct SystemParams {
  double omega0 = 0.0;       // band-gap center / qubit operating point, rad/s
  double gamma_q = 0.0;      // qubit decoherence rate, 1/s
  double gamma_r = 0.0;      // resonator decoherence rate, 1/s
  double crosstalk_a = 1.0;  // cross-talk prefactor A, dimensionless
  int n_resonators = 2;      // N >= 2

  static SystemParams from_rates(double omega0, double gamma_q, double gamma_r,
                                 double crosstalk_a, int n_resonators);
  static SystemParams from_quality_factors(double omega0, double q_qubit,
                                           double q_mech, double crosstalk_a,
                                           int n_resonators);

  /// Same rates, different resonator count (used by N-sweeps).
  SystemParams with_n(int n) const;

  double qubit_quality() const { return omega0 / gamma_q; }
  double mechanical_quality() const { return omega0 / gamma_r; }

  /// Throws std::invalid_argument on hard invariant violations.
  void validate() const;

  /// Soft diagnostics: rates that are not small compared to omega0.
  std::vector<std::string> warnings() const;
};

/// omega0 / 2N: the resonators fill the band gap uniformly.
double nearest_neighbor_detuning(const SystemParams& p);

/// omega0 / 4N: smallest detuning in the system. The spurious qubit
/// transition is placed half-way between neighboring resonators.
double effective_min_detuning(const SystemParams& p);

/// T_s = pi / 2g
double swap_time(double g);

/// Phase gate is a full 2-pi rotation, T_g = 2 T_s.
double gate_time(double g);

/// One circuit layer executed sequentially: N (T_s + T_g/2) = 2 N T_s.
double step_duration(const SystemParams& p, double g);

}  // namespace qmem
