#include "qmem/reports.hpp"

#include <cstdio>
#include <sstream>

#include "qmem/schedule.hpp"

namespace qmem::reports {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string optimize_csv(const SystemParams& p, int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("N range must satisfy 2 <= n_min <= n_max");
  std::ostringstream out;
  out << "n,g_opt_rad_per_s,g_opt_over_2pi_hz,epsilon_opt_dimensionless\n";
  for (int n = n_min; n <= n_max; ++n) {
    const SystemParams pn = p.with_n(n);
    const double g = optimal_coupling(pn);
    out << n << ',' << format_number(g) << ',' << format_number(angular_to_hz(g))
        << ',' << format_number(optimal_error(pn)) << '\n';
  }
  return out.str();
}

nlohmann::json volume_report(const SystemParams& p, double n_min,
                             double n_max) {
  const VolumeResult r = solve_balance(p, n_min, n_max);
  const double q_qubit = p.qubit_quality();
  return {
      {"n_range_min", n_min},
      {"n_range_max", n_max},
      {"q_qubit_dimensionless", q_qubit},
      {"n_star", r.n_star},
      {"depth_at_n_star", r.depth_at_n_star},
      {"volume_continuous", r.volume_continuous},
      {"n_best_integer", r.n_best_integer},
      {"volume_integer", r.volume_integer},
      {"closed_form_volume_mechanical",
       closed_form_volume(q_qubit, p.crosstalk_a, Regime::Mechanical)},
      {"closed_form_volume_microwave",
       closed_form_volume(q_qubit, p.crosstalk_a, Regime::Microwave)},
  };
}

std::string feasibility_csv(const FeasibilityScan& scan) {
  std::ostringstream out;
  out << "n,lower_transmon_ff,lower_couplers_ff,upper_coupling_ff,"
         "upper_anharmonicity_fixed_ff,upper_anharmonicity_detuning_ff,"
         "feasible_min_ff,feasible_max_ff,feasible_flag\n";
  const double to_ff = 1e15;
  for (std::size_t i = 0; i < scan.n.size(); ++i) {
    const CapacitanceBounds& b = scan.bounds[i];
    out << scan.n[i] << ',' << format_number(b.lower_transmon * to_ff) << ','
        << format_number(b.lower_couplers * to_ff) << ','
        << format_number(b.upper_coupling * to_ff) << ','
        << format_number(b.upper_anharmonicity_fixed * to_ff) << ','
        << format_number(b.upper_anharmonicity_detuning * to_ff) << ',';
    if (b.feasible_interval) {
      out << format_number(b.feasible_interval->first * to_ff) << ','
          << format_number(b.feasible_interval->second * to_ff) << ",1\n";
    } else {
      out << ",,0\n";
    }
  }
  return out.str();
}

nlohmann::json feasibility_closure_report(const FeasibilityScan& scan) {
  nlohmann::json report;
  report["largest_feasible_n"] =
      scan.largest_feasible_n ? nlohmann::json(*scan.largest_feasible_n)
                              : nlohmann::json();
  report["first_infeasible_n"] =
      scan.first_infeasible_n ? nlohmann::json(*scan.first_infeasible_n)
                              : nlohmann::json();
  report["binding_floor"] = scan.binding_floor;
  report["binding_ceiling"] = scan.binding_ceiling;
  return report;
}

namespace {

const char* shape_name(PulseShape shape) {
  switch (shape) {
    case PulseShape::Rectangular:
      return "rectangular";
    case PulseShape::CosineRamp:
      return "cosine";
    case PulseShape::FullSine:
      return "full_sine";
  }
  return "?";
}

}  // namespace

std::string simulate_csv(const SystemParams& p,
                         const std::vector<PulseShape>& shapes,
                         const std::vector<double>& delta_over_g,
                         const EvolveOptions& options) {
  if (shapes.empty() || delta_over_g.empty())
    throw std::invalid_argument("simulation sweep must be nonempty");
  const double delta = effective_min_detuning(p);

  std::ostringstream out;
  out << "pulse_shape,g_over_delta_dimensionless,n_modes_dimensionless,"
         "analytic_bound_dimensionless,numerical_leakage_dimensionless\n";
  for (PulseShape shape : shapes) {
    // Resonant single-mode calibration row: swap infidelity only.
    {
      const double g = delta / delta_over_g.front();
      ModeSet single;
      single.target_index = 0;
      single.modes.push_back({0.0, g});
      const WaveState psi = evolve(mode_state(single, 0), single,
                                   make_swap_pulse(shape, g), options);
      out << shape_name(shape) << ",inf,1,0,"
          << format_number(1.0 - std::norm(psi(0))) << '\n';
    }
    for (double ratio : delta_over_g) {
      if (!(ratio > 0.0))
        throw std::invalid_argument("delta/g ratios must be positive");
      const double g = delta / ratio;
      const CrosstalkResult r = crosstalk_experiment(p, g, shape, options);
      out << shape_name(shape) << ',' << format_number(1.0 / ratio) << ','
          << p.n_resonators << ',' << format_number(r.analytic_bound) << ','
          << format_number(r.numerical_leakage) << '\n';
    }
  }
  return out.str();
}

nlohmann::json schedule_report(const SystemParams& p, double g) {
  std::vector<std::pair<int, int>> pairing;
  for (int i = 0; i + 1 < p.n_resonators; i += 2) pairing.push_back({i, i + 1});
  const ScheduleTimeline tl = build_step_schedule(p.n_resonators, pairing, g);
  const std::vector<double> errors =
      accumulate_decoherence(tl, p.gamma_q, p.gamma_r);

  nlohmann::json report = timeline_to_json(tl);
  report["g_rad_per_s"] = g;
  report["per_resonator_error_probability"] = errors;
  return report;
}

}  // namespace qmem::reports
