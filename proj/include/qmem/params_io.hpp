#pragma once

#include <string>

#include "json.hpp"
#include "qmem/hardware.hpp"
#include "qmem/params.hpp"

namespace qmem {

struct LoadedParams {
  SystemParams system;
  HardwareProfile hardware;
};

/// Parses the explicit-unit parameter schema:
///   omega0_hz               required
///   gamma_q_per_s | qubit_t_s   exactly one
///   gamma_r_per_s | q_mech      exactly one
///   crosstalk_prefactor_a   required
///   n_resonators            required
///   q_eff_c, coupler_c1_f, min_anharmonicity_hz   optional (defaults apply)
/// Keys starting with "_" are free-text documentation and are ignored; any
/// other unknown key is rejected. Throws std::invalid_argument on schema or
/// value errors.
LoadedParams parse_params_json(const nlohmann::json& j);

/// Reads and parses a parameter file; file and JSON syntax problems surface
/// as std::invalid_argument.
LoadedParams load_params_file(const std::string& path);

}  // namespace qmem
