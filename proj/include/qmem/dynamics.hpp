#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qmem/params.hpp"

namespace qmem {

// Single-excitation register: component 0 is |e0>, component k+1 is |g1_k>.
using WaveState = Eigen::VectorXcd;

struct Mode {
  double detuning = 0.0;  // rad/s, relative to the qubit rotating frame
  double coupling = 0.0;  // rad/s
};

struct ModeSet {
  std::vector<Mode> modes;
  // Mode held resonant for the gate; -1 when no resonant target is configured.
  int target_index = -1;

  int dimension() const { return static_cast<int>(modes.size()) + 1; }
  void validate() const;
};

WaveState excited_qubit_state(const ModeSet& modes);
WaveState mode_state(const ModeSet& modes, int k);

enum class PulseShape { Rectangular, CosineRamp, FullSine };

/// Dimensionless coupling modulation with values in [0, 1]. CosineRamp is a
/// flat top with sin^2 ramps of length ramp_time on both ends; FullSine is a
/// single sin^2 arch over the whole duration.
struct PulseEnvelope {
  PulseShape shape = PulseShape::Rectangular;
  double duration = 0.0;   // s
  double ramp_time = 0.0;  // s, CosineRamp only

  double value(double t) const;
  /// Closed-form integral of value over [0, duration].
  double area() const;
};

/// Area-normalized gate pulses: integral of g * env equals pi/2 for a swap
/// and pi for a phase gate. Shaped pulses keep unit peak amplitude and extend
/// the duration instead. ramp_fraction is the ramp length in units of the
/// rectangular gate duration.
PulseEnvelope make_swap_pulse(PulseShape shape, double g,
                              double ramp_fraction = 0.5);
PulseEnvelope make_phase_pulse(PulseShape shape, double g,
                               double ramp_fraction = 0.5);

/// H(t)/hbar in the qubit rotating frame at a given envelope value:
/// sum_k dk |g1_k><g1_k| + env * sum_k gk (|e0><g1_k| + h.c.).
Eigen::MatrixXcd mode_hamiltonian(const ModeSet& modes, double envelope_value);

struct EvolveOptions {
  // Richardson error target for the final state, 2-norm.
  double tolerance = 1e-9;
  int max_refinements = 16;
};

/// Fixed-step classical RK4 propagation of the Schrodinger equation in the
/// single-excitation subspace, with the base step bounded by
/// 1 / (50 max(g_k, |d_k|)) and step halving until the Richardson estimate
/// meets the tolerance. Throws std::runtime_error when it cannot be met.
WaveState evolve(const WaveState& initial, const ModeSet& modes,
                 const PulseEnvelope& pulse, const EvolveOptions& options = {});

/// Single integration pass with an explicit step count, no refinement.
/// Intended for convergence diagnostics.
WaveState evolve_fixed_steps(const WaveState& initial, const ModeSet& modes,
                             const PulseEnvelope& pulse, long n_steps);

/// Excited-state population of the off-resonant two-level problem:
/// (4g^2 / (4g^2 + delta^2)) sin^2(sqrt(4g^2 + delta^2) t / 2).
double two_level_rabi(double g, double delta, double t);

/// Mode layout used by the cross-talk experiment: target at zero detuning,
/// the other N-1 resonators at +-delta, +-2 delta, ... with delta = omega0/4N
/// and uniform coupling g. include_anharmonic_channel appends the generic
/// qubit |e>->|f> channel at +delta with coupling sqrt(2) g.
ModeSet crosstalk_mode_set(const SystemParams& p, double g,
                           bool include_anharmonic_channel = false);

struct CrosstalkResult {
  double numerical_leakage = 0.0;  // 1 - population of the intended final state
  double analytic_bound = 0.0;     // sum_k gk^2 / dk^2
  double residual_target = 0.0;    // population left in |g1_target>
  std::vector<double> spectator_population;
};

/// Runs a swap pulse from |g1_target> against the spectator ladder and
/// compares the total leakage with the perturbative estimate.
CrosstalkResult crosstalk_experiment(const SystemParams& p, double g,
                                     PulseShape shape,
                                     const EvolveOptions& options = {},
                                     bool include_anharmonic_channel = false);

}  // namespace qmem
