#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qmem/dynamics.hpp"
#include "qmem/hardware.hpp"
#include "qmem/quantum_volume.hpp"

namespace qmem::reports {

/// Fixed "%.12g" formatting; the one number-to-text path for CSV output so
/// identical configs produce byte-identical files.
std::string format_number(double v);

/// One row per integer N in [n_min, n_max]: the optimal coupling and the
/// error it achieves. Throws std::invalid_argument on an empty range.
std::string optimize_csv(const SystemParams& p, int n_min, int n_max);

/// Balance-point solve plus both closed-form branch values.
nlohmann::json volume_report(const SystemParams& p, double n_min, double n_max);

std::string feasibility_csv(const FeasibilityScan& scan);
nlohmann::json feasibility_closure_report(const FeasibilityScan& scan);

/// Cross-talk sweep: for each pulse shape, a resonant single-mode calibration
/// row followed by one row per g/delta ratio.
std::string simulate_csv(const SystemParams& p,
                         const std::vector<PulseShape>& shapes,
                         const std::vector<double>& delta_over_g,
                         const EvolveOptions& options = {});

/// Timeline of one full sequential layer with the natural pairing
/// (0,1),(2,3),... at the given coupling, with per-resonator error accounting.
nlohmann::json schedule_report(const SystemParams& p, double g);

}  // namespace qmem::reports
