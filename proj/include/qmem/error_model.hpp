#pragma once

#include "qmem/params.hpp"

namespace qmem {

/// Additive per-qubit error budget for one circuit step.
struct ErrorBreakdown {
  double decoherence = 0.0;
  double crosstalk = 0.0;
  double total = 0.0;
  // The additive model stops being a probability above 1; flagged, never clamped.
  bool out_of_model = false;
};

enum class DecoherenceForm { Exact, Approximate };

/// ((2N - 3/2) Gr + (3/2) Gq) T_s, or the large-N form (2N Gr + 3Gq/2) T_s.
/// The approximate form always exceeds the exact one by (3/2) Gr T_s.
double decoherence_error(const SystemParams& p, double g,
                         DecoherenceForm form = DecoherenceForm::Approximate);

/// A g^2/delta^2 with delta = omega0/4N, i.e. 16 A N^2 g^2 / omega0^2.
double crosstalk_error(const SystemParams& p, double g);

/// eps(N) = pi (N Gr + 3Gq/4) / g + 16 A N^2 g^2 / omega0^2.
ErrorBreakdown total_error(const SystemParams& p, double g);

/// Coupling minimizing the total error:
/// g* = (pi (N Gr + 3Gq/4) omega0^2 / 32 A N^2)^(1/3).
/// Undefined (throws std::domain_error) when both rates are zero.
double optimal_coupling(const SystemParams& p);

/// Minimum of the total error:
/// eps* = 3 (4 A pi^2 N^2 (N Gr + 3Gq/4)^2 / omega0^2)^(1/3).
double optimal_error(const SystemParams& p);

// Continuous-N overloads; the quantum-volume balance equation relaxes the
// requirement that N be integer.
ErrorBreakdown total_error(const SystemParams& p, double n, double g);
double optimal_coupling(const SystemParams& p, double n);
double optimal_error(const SystemParams& p, double n);

/// Excess resonator relaxation inherited from the lossy qubit through
/// off-resonant coupling, and its effect on the step error.
struct PurcellCorrection {
  double excess_rate = 0.0;     // dGr = 4 Gq N^2 g^2 / omega0^2, 1/s
  double error_increase = 0.0;  // deps = pi dGr N / g per step
  double ratio = 0.0;           // deps / eps at the same coupling
};

PurcellCorrection purcell_corrections(const SystemParams& p, double g);

/// Closed-form ceiling on deps/eps at the optimal coupling:
/// (2/3) (pi^2 n^5 / 12 A^2 Qq^2)^(1/3).
double purcell_ratio_bound(double n, double crosstalk_a, double q_qubit);

/// Same ceiling evaluated at the volume-optimal n:
/// (1/9A) (8 pi sqrt(A/3) / 3 Qq)^(1/4).
double purcell_ratio_bound_at_volume_optimum(double crosstalk_a, double q_qubit);

}  // namespace qmem
