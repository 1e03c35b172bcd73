#include "qmem/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace qmem {

void ModeSet::validate() const {
  if (modes.empty()) throw std::invalid_argument("mode set is empty");
  int zeros = 0;
  for (const Mode& m : modes) {
    if (!std::isfinite(m.detuning))
      throw std::invalid_argument("mode detuning must be finite");
    if (!(m.coupling >= 0.0) || !std::isfinite(m.coupling))
      throw std::invalid_argument("mode coupling must be finite and >= 0");
    if (m.detuning == 0.0) ++zeros;
  }
  if (target_index >= 0) {
    if (target_index >= static_cast<int>(modes.size()))
      throw std::invalid_argument("target index out of range");
    if (modes[target_index].detuning != 0.0)
      throw std::invalid_argument("resonant target must have zero detuning");
    if (zeros != 1)
      throw std::invalid_argument(
          "exactly one mode may sit at zero detuning for a resonant gate");
  }
}

WaveState excited_qubit_state(const ModeSet& modes) {
  WaveState psi = WaveState::Zero(modes.dimension());
  psi(0) = 1.0;
  return psi;
}

WaveState mode_state(const ModeSet& modes, int k) {
  if (k < 0 || k >= static_cast<int>(modes.modes.size()))
    throw std::invalid_argument("mode index out of range");
  WaveState psi = WaveState::Zero(modes.dimension());
  psi(k + 1) = 1.0;
  return psi;
}

double PulseEnvelope::value(double t) const {
  switch (shape) {
    case PulseShape::Rectangular:
      return 1.0;
    case PulseShape::CosineRamp: {
      if (ramp_time <= 0.0) return 1.0;
      if (t < ramp_time) {
        const double s = std::sin(constants::pi * t / (2.0 * ramp_time));
        return s * s;
      }
      if (t > duration - ramp_time) {
        const double s =
            std::sin(constants::pi * (duration - t) / (2.0 * ramp_time));
        return s * s;
      }
      return 1.0;
    }
    case PulseShape::FullSine: {
      const double s = std::sin(constants::pi * t / duration);
      return s * s;
    }
  }
  return 0.0;
}

double PulseEnvelope::area() const {
  switch (shape) {
    case PulseShape::Rectangular:
      return duration;
    case PulseShape::CosineRamp:
      // Each sin^2 ramp integrates to ramp_time / 2.
      return duration - ramp_time;
    case PulseShape::FullSine:
      return 0.5 * duration;
  }
  return 0.0;
}

namespace {

PulseEnvelope make_area_pulse(PulseShape shape, double g, double rotation_area,
                              double ramp_fraction) {
  if (!(g > 0.0)) throw std::domain_error("coupling g must be positive");
  if (!(ramp_fraction > 0.0) || ramp_fraction > 1.0)
    throw std::invalid_argument("ramp fraction must lie in (0, 1]");
  const double t_rect = rotation_area / g;
  PulseEnvelope env;
  env.shape = shape;
  switch (shape) {
    case PulseShape::Rectangular:
      env.duration = t_rect;
      break;
    case PulseShape::CosineRamp:
      env.ramp_time = ramp_fraction * t_rect;
      env.duration = t_rect + env.ramp_time;
      break;
    case PulseShape::FullSine:
      env.duration = 2.0 * t_rect;
      break;
  }
  return env;
}

}  // namespace

PulseEnvelope make_swap_pulse(PulseShape shape, double g,
                              double ramp_fraction) {
  return make_area_pulse(shape, g, constants::pi / 2.0, ramp_fraction);
}

PulseEnvelope make_phase_pulse(PulseShape shape, double g,
                               double ramp_fraction) {
  return make_area_pulse(shape, g, constants::pi, ramp_fraction);
}

Eigen::MatrixXcd mode_hamiltonian(const ModeSet& modes, double envelope_value) {
  modes.validate();
  const int dim = modes.dimension();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim - 1; ++k) {
    const double gk = envelope_value * modes.modes[k].coupling;
    h(0, k + 1) = gk;
    h(k + 1, 0) = gk;
    h(k + 1, k + 1) = modes.modes[k].detuning;
  }
  return h;
}

namespace {

// dpsi/dt = -i H(t) psi with H = diag(0, d_k) + env(t) * couplings.
struct Propagator {
  Eigen::VectorXcd detunings;  // cached as complex for cwise products
  Eigen::VectorXcd couplings;

  explicit Propagator(const ModeSet& modes) {
    const int m = static_cast<int>(modes.modes.size());
    detunings.resize(m);
    couplings.resize(m);
    for (int k = 0; k < m; ++k) {
      detunings(k) = modes.modes[k].detuning;
      couplings(k) = modes.modes[k].coupling;
    }
  }

  void rhs(double env, const WaveState& psi, WaveState& out) const {
    const int m = static_cast<int>(couplings.size());
    const std::complex<double> minus_i(0.0, -1.0);
    out(0) = minus_i * env * couplings.cwiseProduct(psi.tail(m)).sum();
    out.tail(m) = minus_i * (detunings.cwiseProduct(psi.tail(m)) +
                             (env * psi(0)) * couplings);
  }

  WaveState integrate(const WaveState& psi0, const PulseEnvelope& pulse,
                      long n_steps) const {
    WaveState y = psi0;
    const long dim = psi0.size();
    WaveState k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    const double h = pulse.duration / static_cast<double>(n_steps);
    for (long i = 0; i < n_steps; ++i) {
      const double t = static_cast<double>(i) * h;
      const double e0 = pulse.value(t);
      const double e1 = pulse.value(t + 0.5 * h);
      const double e2 = pulse.value(t + h);
      rhs(e0, y, k1);
      tmp = y + (0.5 * h) * k1;
      rhs(e1, tmp, k2);
      tmp = y + (0.5 * h) * k2;
      rhs(e1, tmp, k3);
      tmp = y + h * k3;
      rhs(e2, tmp, k4);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
  }
};

long base_step_count(const ModeSet& modes, const PulseEnvelope& pulse) {
  double scale = 0.0;
  for (const Mode& m : modes.modes)
    scale = std::max({scale, m.coupling, std::abs(m.detuning)});
  if (scale == 0.0) return 1;
  // Step no larger than 1/50 of the fastest timescale.
  return std::max<long>(4, static_cast<long>(
                               std::ceil(pulse.duration * 50.0 * scale)));
}

}  // namespace

WaveState evolve_fixed_steps(const WaveState& initial, const ModeSet& modes,
                             const PulseEnvelope& pulse, long n_steps) {
  modes.validate();
  if (initial.size() != modes.dimension())
    throw std::invalid_argument("state dimension does not match mode set");
  if (n_steps < 1) throw std::invalid_argument("need at least one step");
  if (!(pulse.duration > 0.0)) return initial;
  return Propagator(modes).integrate(initial, pulse, n_steps);
}

WaveState evolve(const WaveState& initial, const ModeSet& modes,
                 const PulseEnvelope& pulse, const EvolveOptions& options) {
  modes.validate();
  if (initial.size() != modes.dimension())
    throw std::invalid_argument("state dimension does not match mode set");
  if (std::abs(initial.squaredNorm() - 1.0) > 1e-6)
    throw std::invalid_argument("initial state must be normalized");
  if (!(pulse.duration > 0.0)) return initial;

  const Propagator prop(modes);
  long n = base_step_count(modes, pulse);
  WaveState coarse = prop.integrate(initial, pulse, n);
  for (int refinement = 0; refinement < options.max_refinements; ++refinement) {
    WaveState fine = prop.integrate(initial, pulse, 2 * n);
    // Classical RK4: halving the step shrinks the error 16x.
    const double estimate = (coarse - fine).norm() / 15.0;
    if (estimate < options.tolerance) return fine;
    coarse = std::move(fine);
    n *= 2;
  }
  throw std::runtime_error(
      "integrator failed to reach the requested tolerance; refine limit hit");
}

double two_level_rabi(double g, double delta, double t) {
  if (!(g > 0.0)) throw std::domain_error("coupling g must be positive");
  const double omega = std::hypot(2.0 * g, delta);
  const double amplitude = (2.0 * g / omega) * (2.0 * g / omega);
  const double s = std::sin(0.5 * omega * t);
  return amplitude * s * s;
}

ModeSet crosstalk_mode_set(const SystemParams& p, double g,
                           bool include_anharmonic_channel) {
  if (!(g > 0.0)) throw std::domain_error("coupling g must be positive");
  if (p.n_resonators < 3)
    throw std::invalid_argument(
        "cross-talk experiment needs N >= 3 so spectators exist");
  const double delta = effective_min_detuning(p);
  ModeSet ms;
  ms.target_index = 0;
  ms.modes.push_back({0.0, g});
  for (int k = 1; k < p.n_resonators; ++k) {
    const int rung = (k + 1) / 2;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    ms.modes.push_back({sign * rung * delta, g});
  }
  if (include_anharmonic_channel)
    ms.modes.push_back({delta, std::sqrt(2.0) * g});
  ms.validate();
  return ms;
}

CrosstalkResult crosstalk_experiment(const SystemParams& p, double g,
                                     PulseShape shape,
                                     const EvolveOptions& options,
                                     bool include_anharmonic_channel) {
  const ModeSet ms = crosstalk_mode_set(p, g, include_anharmonic_channel);
  const PulseEnvelope pulse = make_swap_pulse(shape, g);
  const WaveState final_state =
      evolve(mode_state(ms, 0), ms, pulse, options);

  CrosstalkResult r;
  // Ideal swap leaves the register in |e0>; everything else is leakage.
  r.numerical_leakage = 1.0 - std::norm(final_state(0));
  r.residual_target = std::norm(final_state(1));
  for (std::size_t k = 1; k < ms.modes.size(); ++k) {
    r.spectator_population.push_back(std::norm(final_state(k + 1)));
    const double ratio = ms.modes[k].coupling / ms.modes[k].detuning;
    r.analytic_bound += ratio * ratio;
  }
  return r;
}

}  // namespace qmem
