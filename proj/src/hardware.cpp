#include "qmem/hardware.hpp"

#include <algorithm>
#include <cmath>

#include "qmem/error_model.hpp"

namespace qmem {

HardwareProfile HardwareProfile::with_defaults(double omega0) {
  HardwareProfile profile;
  profile.omega0 = omega0;
  profile.validate();
  return profile;
}

void HardwareProfile::validate() const {
  if (!(q_eff >= 0.0))
    throw std::invalid_argument("q_eff must be nonnegative");
  if (!(coupler_capacitance > 0.0))
    throw std::invalid_argument("coupler capacitance must be positive");
  if (!(min_anharmonicity > 0.0))
    throw std::invalid_argument("minimum anharmonicity must be positive");
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
}

double trk_coupling_bound(const HardwareProfile& profile, double c_sigma) {
  if (!(c_sigma > 0.0))
    throw std::domain_error("total capacitance must be positive");
  return profile.q_eff *
         std::sqrt(profile.omega0 / (2.0 * constants::hbar * c_sigma));
}

double calibrate_qeff(double g_ref, double c_sigma_ref, double omega0_ref) {
  if (!(g_ref > 0.0) || !(c_sigma_ref > 0.0) || !(omega0_ref > 0.0))
    throw std::domain_error("calibration inputs must be positive");
  return std::sqrt(2.0 * constants::hbar * c_sigma_ref * g_ref * g_ref /
                   omega0_ref);
}

double max_capacitance_for_coupling(const HardwareProfile& profile,
                                    const SystemParams& p) {
  const double g_opt = optimal_coupling(p);
  const double direct =
      profile.q_eff * profile.q_eff * profile.omega0 /
      (2.0 * constants::hbar * g_opt * g_opt);

  // Same ceiling with the cube root spelled out; kept as a cross-check.
  const double n = p.n_resonators;
  const double c = n * p.gamma_r + 0.75 * p.gamma_q;
  const double expanded =
      (2.0 * profile.q_eff * profile.q_eff / (constants::hbar * profile.omega0)) *
      std::pow(4.0 * p.crosstalk_a * n * n * profile.omega0 /
                   (constants::pi * c),
               2.0 / 3.0);
  if (std::abs(direct - expanded) > 1e-9 * std::max(direct, expanded))
    throw std::logic_error(
        "capacitance ceiling routes disagree beyond 1e-9; formula error");
  return direct;
}

CapacitanceBounds capacitance_bounds(const HardwareProfile& profile,
                                     const SystemParams& p) {
  profile.validate();
  const double e = constants::electron_charge;
  const double hbar = constants::hbar;
  const double n = p.n_resonators;

  CapacitanceBounds b;
  b.lower_transmon = 4.0 * e * e / (hbar * profile.omega0);
  b.lower_couplers = n * profile.coupler_capacitance;
  b.upper_coupling = max_capacitance_for_coupling(profile, p);
  b.upper_anharmonicity_fixed = e * e / (2.0 * hbar * profile.min_anharmonicity);
  // E_C >= hbar omega0 / 4N: anharmonicity above half the neighbor detuning.
  b.upper_anharmonicity_detuning = 2.0 * e * e * n / (hbar * profile.omega0);

  const double floor = std::max(b.lower_transmon, b.lower_couplers);
  const double ceiling =
      std::min({b.upper_coupling, b.upper_anharmonicity_fixed,
                b.upper_anharmonicity_detuning});
  if (floor <= ceiling) b.feasible_interval = {{floor, ceiling}};
  return b;
}

namespace {

std::pair<std::string, std::string> binding_pair(const CapacitanceBounds& b) {
  std::string floor_name = "lower_transmon";
  double floor = b.lower_transmon;
  if (b.lower_couplers > floor) {
    floor = b.lower_couplers;
    floor_name = "lower_couplers";
  }
  std::string ceil_name = "upper_coupling";
  double ceiling = b.upper_coupling;
  if (b.upper_anharmonicity_fixed < ceiling) {
    ceiling = b.upper_anharmonicity_fixed;
    ceil_name = "upper_anharmonicity_fixed";
  }
  if (b.upper_anharmonicity_detuning < ceiling) {
    ceil_name = "upper_anharmonicity_detuning";
  }
  return {floor_name, ceil_name};
}

}  // namespace

FeasibilityScan feasibility_scan(const HardwareProfile& profile,
                                 const SystemParams& p_template, int n_min,
                                 int n_max) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("scan range must satisfy 2 <= n_min <= n_max");

  FeasibilityScan scan;
  for (int n = n_min; n <= n_max; ++n) {
    scan.n.push_back(n);
    scan.bounds.push_back(capacitance_bounds(profile, p_template.with_n(n)));
    const CapacitanceBounds& b = scan.bounds.back();
    if (!b.feasible_interval && !scan.first_infeasible_n) {
      scan.first_infeasible_n = n;
      const auto [floor_name, ceil_name] = binding_pair(b);
      scan.binding_floor = floor_name;
      scan.binding_ceiling = ceil_name;
    }
  }
  if (scan.first_infeasible_n) {
    if (*scan.first_infeasible_n > n_min)
      scan.largest_feasible_n = *scan.first_infeasible_n - 1;
  } else {
    scan.largest_feasible_n = n_max;
  }
  return scan;
}

}  // namespace qmem
