#pragma once

#include "qmem/error_model.hpp"

namespace qmem {

enum class Regime { Mechanical, Microwave };

struct VolumeResult {
  double n_star = 0.0;             // continuous balance point, N = d(N)
  double depth_at_n_star = 0.0;    // equals n_star to solver tolerance
  double volume_continuous = 0.0;  // n_star^2
  int n_best_integer = 0;
  double volume_integer = 0.0;     // max over integer N of min(N, d(N))^2
};

/// Achievable circuit depth d(N) = 1 / (N eps*(N)), with the coupling
/// re-optimized at each N.
double circuit_depth(const SystemParams& p);
double circuit_depth(const SystemParams& p, double n);

/// Solves N = d(N) by bisection on [n_min, n_max] and scans integer N for
/// the realizable volume. Throws std::runtime_error when d(N) - N does not
/// change sign over the range ("no balance point in range").
VolumeResult solve_balance(const SystemParams& p, double n_min = 2.0,
                           double n_max = 500.0);

/// Asymptotic volume from the balance equation:
/// (2 Qq / 9 pi sqrt(3A))^(1/2) when the qubit dominates the losses,
/// (Qq / 6 pi sqrt(3A))^(2/5) when resonators decay like the qubit.
double closed_form_volume(double q_qubit, double crosstalk_a, Regime regime);

}  // namespace qmem
