#include <cmath>

#include "doctest.h"
#include "qmem/error_model.hpp"
#include "qmem/schedule.hpp"

using namespace qmem;

namespace {

std::vector<std::pair<int, int>> natural_pairing(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; i += 2) pairs.push_back({i, i + 1});
  return pairs;
}

}  // namespace

TEST_CASE("sequential layer construction") {
  const double g = hz_to_angular(2e6);
  const double ts = swap_time(g);

  SUBCASE("two pairs over four resonators") {
    const ScheduleTimeline tl =
        build_step_schedule(4, {{0, 1}, {2, 3}}, g);
    CHECK(tl.total_duration == doctest::Approx(8.0 * ts).epsilon(1e-15));
    CHECK(tl.segments.size() == 6);
    CHECK(tl.segments[0].kind == GateKind::Swap);
    CHECK(tl.segments[1].kind == GateKind::Phase);
    CHECK(tl.segments[1].duration == doctest::Approx(2.0 * ts));
    CHECK(tl.qubit_time(0) == doctest::Approx(3.0 * ts).epsilon(1e-15));
    CHECK(tl.qubit_time(2) == doctest::Approx(3.0 * ts).epsilon(1e-15));
    CHECK(tl.qubit_time(1) == 0.0);
    CHECK(tl.qubit_time(3) == 0.0);
  }

  SUBCASE("a single pair of two resonators spans 4 Ts") {
    const ScheduleTimeline tl = build_step_schedule(2, {{0, 1}}, g);
    CHECK(tl.total_duration == doctest::Approx(4.0 * ts).epsilon(1e-15));
  }

  SUBCASE("empty pairing gives an empty timeline") {
    const ScheduleTimeline tl = build_step_schedule(6, {}, g);
    CHECK(tl.total_duration == 0.0);
    CHECK(tl.segments.empty());
  }

  SUBCASE("overlapping or out-of-range pairs are rejected") {
    CHECK_THROWS_AS(build_step_schedule(4, {{0, 1}, {1, 2}}, g),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_step_schedule(4, {{0, 0}}, g), std::invalid_argument);
    CHECK_THROWS_AS(build_step_schedule(4, {{0, 4}}, g), std::invalid_argument);
    CHECK_THROWS_AS(build_step_schedule(4, {{-1, 2}}, g),
                    std::invalid_argument);
  }

  SUBCASE("time in qubit plus time in resonator equals the span") {
    const ScheduleTimeline tl = build_step_schedule(10, natural_pairing(10), g);
    for (int r = 0; r < 10; ++r)
      CHECK(tl.qubit_time(r) + tl.resonator_time(r) == tl.total_duration);
  }

  SUBCASE("duration is linear in N for full pairings") {
    for (int n : {2, 4, 8, 16, 32})
      CHECK(build_step_schedule(n, natural_pairing(n), g).total_duration ==
            doctest::Approx(2.0 * n * ts).epsilon(1e-15));
  }

  SUBCASE("a partial pairing still spans the full layer") {
    const ScheduleTimeline tl = build_step_schedule(15, natural_pairing(15), g);
    CHECK(tl.total_duration == doctest::Approx(30.0 * ts).epsilon(1e-15));
    CHECK(tl.qubit_time(14) == 0.0);  // unpaired resonator idles
  }
}

TEST_CASE("residency-weighted decoherence accounting") {
  const double g = 1.62e7;
  const double ts = swap_time(g);

  SUBCASE("lossless resonators leave only the qubit residency") {
    const ScheduleTimeline tl = build_step_schedule(4, natural_pairing(4), g);
    const auto errors = accumulate_decoherence(tl, 2e4, 0.0);
    CHECK(errors[0] == doctest::Approx(3.0 * 2e4 * ts).epsilon(1e-12));
    CHECK(errors[1] == 0.0);
    CHECK(0.5 * (errors[0] + errors[1]) ==
          doctest::Approx(1.5 * 2e4 * ts).epsilon(1e-12));
  }

  SUBCASE("uniform rates make the residency irrelevant") {
    const double rate = 123.0;
    const ScheduleTimeline tl = build_step_schedule(6, natural_pairing(6), g);
    for (double e : accumulate_decoherence(tl, rate, rate))
      CHECK(e == doctest::Approx(2.0 * 6 * rate * ts).epsilon(1e-14));
  }

  SUBCASE("pair average reproduces the exact decoherence formula") {
    const double w0 = hz_to_angular(4e9);
    const double gq = rate_from_lifetime(50e-6);
    const double gr = rate_from_quality(w0, 1e9);
    for (int n : {2, 4, 10, 16, 50, 15}) {
      const SystemParams p = SystemParams::from_rates(w0, gq, gr, 1.0, n);
      const ScheduleTimeline tl =
          build_step_schedule(n, natural_pairing(n), g);
      const auto errors = accumulate_decoherence(tl, gq, gr);
      const double pair_avg = 0.5 * (errors[0] + errors[1]);
      const double exact = decoherence_error(p, g, DecoherenceForm::Exact);
      CHECK(std::abs(pair_avg - exact) <= 1e-12 * exact);
      // Partners and idlers see the resonator rate for the whole layer.
      CHECK(errors[1] ==
            doctest::Approx(2.0 * n * gr * ts).epsilon(1e-12));
    }
  }
}

TEST_CASE("timeline JSON export") {
  const double g = hz_to_angular(2e6);
  const ScheduleTimeline tl = build_step_schedule(4, {{0, 1}, {2, 3}}, g);
  const nlohmann::json j = timeline_to_json(tl);
  CHECK(j.at("n_resonators") == 4);
  CHECK(j.at("segments").size() == 6);
  CHECK(j.at("segments")[0].at("kind") == "swap");
  CHECK(j.at("segments")[1].at("kind") == "phase");
  CHECK(j.at("segments")[1].at("resonator") == 1);
  CHECK(j.at("qubit_residency").size() == 4);
  CHECK(j.at("qubit_residency")[0].size() == 1);
  CHECK(j.at("qubit_residency")[1].empty());
  CHECK(j.at("total_duration_s").get<double>() ==
        doctest::Approx(8.0 * swap_time(g)));
}
