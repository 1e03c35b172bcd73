#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "qmem/params.hpp"

namespace qmem {

enum class GateKind { Swap, Phase };

struct GateSegment {
  GateKind kind = GateKind::Swap;
  int resonator = 0;  // resonator the gate addresses
  double start = 0.0;
  double duration = 0.0;
};

/// Interval during which a resonator's stored information resides in the
/// processing qubit.
struct ResidencyInterval {
  double start = 0.0;
  double duration = 0.0;
};

/// One sequential circuit layer. A nonempty layer spans the full step
/// duration 2 N T_s; resonators left out of the pairing idle through it.
struct ScheduleTimeline {
  int n_resonators = 0;
  double swap_duration = 0.0;  // T_s
  double total_duration = 0.0;
  std::vector<GateSegment> segments;
  std::vector<std::vector<ResidencyInterval>> qubit_residency;  // per resonator

  double qubit_time(int resonator) const;
  double resonator_time(int resonator) const;  // total - qubit_time
};

/// Builds the sequential layer for the given disjoint pairs. Each pair (i, j)
/// executes swap(i), phase(j), swap(i) with durations T_s, 2 T_s, T_s; the
/// swapped member's information sits in the qubit for T_s/2 + T_g + T_s/2 =
/// 3 T_s, its partner and idle resonators stay in their resonators.
ScheduleTimeline build_step_schedule(
    int n_resonators, const std::vector<std::pair<int, int>>& pairing,
    double g);

/// Rate-times-residency error accumulation, one value per resonator:
/// Gr * (time in resonator) + Gq * (time in qubit).
std::vector<double> accumulate_decoherence(const ScheduleTimeline& timeline,
                                           double gamma_q, double gamma_r);

nlohmann::json timeline_to_json(const ScheduleTimeline& timeline);

}  // namespace qmem
