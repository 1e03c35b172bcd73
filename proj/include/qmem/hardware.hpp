#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmem/params.hpp"

namespace qmem {

/// Electrical parameters of the qubit-resonator couplers.
struct HardwareProfile {
  double q_eff = 4.0e-21;              // effective piezoelectric charge, C
  double coupler_capacitance = 1e-15;  // C1 per coupler, F
  double min_anharmonicity =
      constants::two_pi * 50e6;  // rad/s, floor on the transmon anharmonicity
  double omega0 = 0.0;           // rad/s

  static HardwareProfile with_defaults(double omega0);
  void validate() const;
};

/// The five capacitance constraints at one N. Floors come from the transmon
/// condition and the couplers; ceilings from reaching the optimal coupling
/// and from the two anharmonicity requirements.
struct CapacitanceBounds {
  double lower_transmon = 0.0;                // 4 e^2 / hbar omega0
  double lower_couplers = 0.0;                // N C1
  double upper_coupling = 0.0;                // largest C reaching g*
  double upper_anharmonicity_fixed = 0.0;     // e^2 / 2 hbar alpha_min
  double upper_anharmonicity_detuning = 0.0;  // 2 e^2 N / hbar omega0
  // [max(floors), min(ceilings)] when nonempty.
  std::optional<std::pair<double, double>> feasible_interval;
};

/// Sum-rule ceiling on the coupling: g <= q_eff sqrt(omega0 / 2 hbar C).
double trk_coupling_bound(const HardwareProfile& profile, double c_sigma);

/// Inverts the sum-rule bound at a reference design point:
/// q_eff = sqrt(2 hbar C g^2 / omega0).
double calibrate_qeff(double g_ref, double c_sigma_ref, double omega0_ref);

/// Largest total capacitance at which the sum-rule ceiling still reaches the
/// optimal coupling. Computed by two algebraically equivalent routes and
/// cross-checked to 1e-9.
double max_capacitance_for_coupling(const HardwareProfile& profile,
                                    const SystemParams& p);

CapacitanceBounds capacitance_bounds(const HardwareProfile& profile,
                                     const SystemParams& p);

struct FeasibilityScan {
  std::vector<int> n;
  std::vector<CapacitanceBounds> bounds;
  // Closure point: first N with an empty interval, minus one. Unset when the
  // region is already empty at n_min (largest) or never closes (first).
  std::optional<int> largest_feasible_n;
  std::optional<int> first_infeasible_n;
  // Binding constraint pair at the first infeasible N.
  std::string binding_floor;
  std::string binding_ceiling;
};

FeasibilityScan feasibility_scan(const HardwareProfile& profile,
                                 const SystemParams& p_template, int n_min,
                                 int n_max);

}  // namespace qmem
