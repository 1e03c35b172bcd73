#include "qmem/schedule.hpp"

#include <set>

namespace qmem {

double ScheduleTimeline::qubit_time(int resonator) const {
  double total = 0.0;
  for (const ResidencyInterval& iv : qubit_residency.at(resonator))
    total += iv.duration;
  return total;
}

double ScheduleTimeline::resonator_time(int resonator) const {
  return total_duration - qubit_time(resonator);
}

ScheduleTimeline build_step_schedule(
    int n_resonators, const std::vector<std::pair<int, int>>& pairing,
    double g) {
  if (n_resonators < 2)
    throw std::invalid_argument("need at least two resonators");
  const double ts = swap_time(g);

  std::set<int> used;
  for (const auto& [i, j] : pairing) {
    if (i < 0 || j < 0 || i >= n_resonators || j >= n_resonators)
      throw std::invalid_argument("pair index out of range");
    if (i == j) throw std::invalid_argument("pair members must differ");
    if (!used.insert(i).second || !used.insert(j).second)
      throw std::invalid_argument("pairs must be disjoint");
  }

  ScheduleTimeline tl;
  tl.n_resonators = n_resonators;
  tl.swap_duration = ts;
  tl.qubit_residency.resize(n_resonators);
  if (pairing.empty()) return tl;

  double t = 0.0;
  for (const auto& [i, j] : pairing) {
    tl.segments.push_back({GateKind::Swap, i, t, ts});
    tl.segments.push_back({GateKind::Phase, j, t + ts, 2.0 * ts});
    tl.segments.push_back({GateKind::Swap, i, t + 3.0 * ts, ts});
    // Half in the qubit during each swap: T_s/2 + T_g + T_s/2 = 3 T_s.
    tl.qubit_residency[i].push_back({t + 0.5 * ts, 3.0 * ts});
    t += 4.0 * ts;
  }
  // A nonempty layer spans the full step regardless of how many pairs it
  // holds; unpaired resonators idle through the remainder.
  tl.total_duration = 2.0 * n_resonators * ts;
  if (t > tl.total_duration) tl.total_duration = t;
  return tl;
}

std::vector<double> accumulate_decoherence(const ScheduleTimeline& timeline,
                                           double gamma_q, double gamma_r) {
  if (gamma_q < 0.0 || gamma_r < 0.0)
    throw std::domain_error("decoherence rates must be nonnegative");
  std::vector<double> errors(timeline.n_resonators, 0.0);
  for (int r = 0; r < timeline.n_resonators; ++r) {
    const double in_qubit = timeline.qubit_time(r);
    errors[r] = gamma_r * (timeline.total_duration - in_qubit) +
                gamma_q * in_qubit;
  }
  return errors;
}

nlohmann::json timeline_to_json(const ScheduleTimeline& timeline) {
  nlohmann::json segments = nlohmann::json::array();
  for (const GateSegment& s : timeline.segments) {
    segments.push_back({{"kind", s.kind == GateKind::Swap ? "swap" : "phase"},
                        {"resonator", s.resonator},
                        {"start_s", s.start},
                        {"duration_s", s.duration}});
  }
  nlohmann::json residency = nlohmann::json::array();
  for (const auto& intervals : timeline.qubit_residency) {
    nlohmann::json per_res = nlohmann::json::array();
    for (const ResidencyInterval& iv : intervals)
      per_res.push_back({{"start_s", iv.start}, {"duration_s", iv.duration}});
    residency.push_back(per_res);
  }
  return {{"n_resonators", timeline.n_resonators},
          {"swap_time_s", timeline.swap_duration},
          {"total_duration_s", timeline.total_duration},
          {"segments", segments},
          {"qubit_residency", residency}};
}

}  // namespace qmem
