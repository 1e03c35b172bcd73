#include <cmath>
#include <random>

#include "doctest.h"
#include "qmem/quantum_volume.hpp"

using namespace qmem;

namespace {

SystemParams mechanical(int n = 15) {
  const double w0 = hz_to_angular(4e9);
  return SystemParams::from_rates(w0, rate_from_lifetime(50e-6),
                                  rate_from_quality(w0, 1e9), 1.0, n);
}

SystemParams microwave(int n = 8) {
  const double w0 = hz_to_angular(4e9);
  const double gq = rate_from_lifetime(50e-6);
  return SystemParams::from_rates(w0, gq, gq, 1.0, n);
}

}  // namespace

TEST_CASE("circuit depth at the optimal coupling") {
  CHECK(circuit_depth(mechanical(15)) ==
        doctest::Approx(14.88854983).epsilon(1e-8));
  CHECK(circuit_depth(microwave(8)) ==
        doctest::Approx(8.389641348).epsilon(1e-8));

  SUBCASE("strictly decreasing in N") {
    const SystemParams p = mechanical();
    double prev = circuit_depth(p, 2.0);
    for (double n = 3.0; n <= 500.0; n += 7.0) {
      const double d = circuit_depth(p, n);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("balance point and volume, mechanical baseline") {
  const VolumeResult r = solve_balance(mechanical());
  CHECK(r.n_star == doctest::Approx(14.9583632485).epsilon(1e-6));
  CHECK(r.volume_continuous == doctest::Approx(223.752631074).epsilon(1e-6));
  CHECK(r.depth_at_n_star == doctest::Approx(r.n_star).epsilon(1e-6));
  CHECK(r.n_best_integer == 15);
  CHECK(r.volume_integer == doctest::Approx(221.668916).epsilon(1e-6));
  CHECK(r.volume_integer <= r.volume_continuous);
  CHECK(r.volume_continuous ==
        doctest::Approx(r.n_star * r.n_star).epsilon(1e-12));
}

TEST_CASE("balance point and volume, microwave comparison") {
  const VolumeResult r = solve_balance(microwave());
  CHECK(r.n_star == doctest::Approx(8.11695901564).epsilon(1e-6));
  CHECK(r.volume_continuous == doctest::Approx(65.8850236616).epsilon(1e-6));
  CHECK(r.n_best_integer == 8);
  CHECK(r.volume_integer == doctest::Approx(64.0).epsilon(1e-9));

  const VolumeResult m = solve_balance(mechanical());
  const double ratio = m.volume_continuous / r.volume_continuous;
  CHECK(ratio == doctest::Approx(3.396107623).epsilon(1e-6));
  CHECK(ratio > 2.5);
  CHECK(ratio < 3.5);
}

TEST_CASE("no balance point in a range that never crosses the diagonal") {
  CHECK_THROWS_WITH_AS(solve_balance(mechanical(), 2.0, 5.0),
                       doctest::Contains("no balance point"),
                       std::runtime_error);
  CHECK_THROWS_AS(solve_balance(mechanical(), 1.0, 10.0),
                  std::invalid_argument);
}

TEST_CASE("closed-form volumes") {
  CHECK(closed_form_volume(1.25e6, 1.0, Regime::Mechanical) ==
        doctest::Approx(225.9401952).epsilon(1e-8));
  CHECK(closed_form_volume(1.25e6, 1.0, Regime::Microwave) ==
        doctest::Approx(68.11132126).epsilon(1e-8));

  SUBCASE("scaling the cross-talk prefactor by 16 halves the mechanical value") {
    CHECK(closed_form_volume(1.25e6, 16.0, Regime::Mechanical) ==
          doctest::Approx(0.5 * 225.9401952).epsilon(1e-10));
  }

  SUBCASE("within 15% of the balance solve") {
    const SystemParams pm = mechanical();
    const double vm = solve_balance(pm).volume_continuous;
    const double cm =
        closed_form_volume(pm.qubit_quality(), pm.crosstalk_a,
                           Regime::Mechanical);
    CHECK(std::abs(vm - cm) / vm < 0.15);

    const SystemParams pu = microwave();
    const double vu = solve_balance(pu).volume_continuous;
    const double cu = closed_form_volume(pu.qubit_quality(), pu.crosstalk_a,
                                         Regime::Microwave);
    CHECK(std::abs(vu - cu) / vu < 0.15);
  }
}

TEST_CASE("volume is invariant under a common rescaling of omega0 and rates") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> cd(0.01, 100.0);
  const SystemParams base = mechanical();
  const double v0 = solve_balance(base).volume_continuous;
  for (int i = 0; i < 10; ++i) {
    const double c = cd(rng);
    const SystemParams scaled = SystemParams::from_rates(
        c * base.omega0, c * base.gamma_q, c * base.gamma_r, base.crosstalk_a,
        base.n_resonators);
    CHECK(solve_balance(scaled).volume_continuous ==
          doctest::Approx(v0).epsilon(1e-6));
    CHECK(closed_form_volume(scaled.qubit_quality(), scaled.crosstalk_a,
                             Regime::Mechanical) ==
          doctest::Approx(closed_form_volume(base.qubit_quality(),
                                             base.crosstalk_a,
                                             Regime::Mechanical))
              .epsilon(1e-12));
  }
}

TEST_CASE("min(N, d(N)) is unimodal over integer N") {
  for (const SystemParams& p : {mechanical(), microwave()}) {
    int direction_changes = 0;
    double prev =
        std::min(2.0, circuit_depth(p, 2.0));
    bool rising = true;
    for (int n = 3; n <= 500; ++n) {
      const double s = std::min(static_cast<double>(n),
                                circuit_depth(p, static_cast<double>(n)));
      if (rising && s < prev) {
        rising = false;
        ++direction_changes;
      }
      // Once falling it must keep falling.
      if (!rising) CHECK(s < prev);
      prev = s;
    }
    CHECK(direction_changes == 1);
  }
}
