#include "qmem/params_io.hpp"

#include <fstream>

namespace qmem {

namespace {

const char* const kKnownKeys[] = {
    "omega0_hz",      "gamma_q_per_s", "qubit_t_s",
    "gamma_r_per_s",  "q_mech",        "crosstalk_prefactor_a",
    "n_resonators",   "q_eff_c",       "coupler_c1_f",
    "min_anharmonicity_hz",
};

bool known_key(const std::string& key) {
  if (!key.empty() && key.front() == '_') return true;  // documentation field
  for (const char* k : kKnownKeys)
    if (key == k) return true;
  return false;
}

double get_number(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number())
    throw std::invalid_argument("field '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

LoadedParams parse_params_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("parameter file must hold a JSON object");
  for (const auto& item : j.items())
    if (!known_key(item.key()))
      throw std::invalid_argument("unknown field '" + item.key() + "'");

  for (const char* k : {"omega0_hz", "crosstalk_prefactor_a", "n_resonators"})
    if (!j.contains(k))
      throw std::invalid_argument(std::string("missing field '") + k + "'");

  const double omega0 = hz_to_angular(get_number(j, "omega0_hz"));

  const bool has_gq = j.contains("gamma_q_per_s");
  const bool has_t1 = j.contains("qubit_t_s");
  if (has_gq == has_t1)
    throw std::invalid_argument(
        "specify exactly one of 'gamma_q_per_s' and 'qubit_t_s'");
  const double gamma_q = has_gq ? get_number(j, "gamma_q_per_s")
                                : rate_from_lifetime(get_number(j, "qubit_t_s"));

  const bool has_gr = j.contains("gamma_r_per_s");
  const bool has_qm = j.contains("q_mech");
  if (has_gr == has_qm)
    throw std::invalid_argument(
        "specify exactly one of 'gamma_r_per_s' and 'q_mech'");
  const double gamma_r =
      has_gr ? get_number(j, "gamma_r_per_s")
             : rate_from_quality(omega0, get_number(j, "q_mech"));

  const auto& n_field = j.at("n_resonators");
  if (!n_field.is_number_integer())
    throw std::invalid_argument("'n_resonators' must be an integer");

  LoadedParams loaded;
  try {
    loaded.system = SystemParams::from_rates(
        omega0, gamma_q, gamma_r, get_number(j, "crosstalk_prefactor_a"),
        n_field.get<int>());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }

  loaded.hardware = HardwareProfile::with_defaults(omega0);
  if (j.contains("q_eff_c")) loaded.hardware.q_eff = get_number(j, "q_eff_c");
  if (j.contains("coupler_c1_f"))
    loaded.hardware.coupler_capacitance = get_number(j, "coupler_c1_f");
  if (j.contains("min_anharmonicity_hz"))
    loaded.hardware.min_anharmonicity =
        hz_to_angular(get_number(j, "min_anharmonicity_hz"));
  loaded.hardware.validate();
  return loaded;
}

LoadedParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("parameter file " + path + ": " + e.what());
  }
  return parse_params_json(j);
}

}  // namespace qmem
