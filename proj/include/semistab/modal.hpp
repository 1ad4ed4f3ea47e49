// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semistab/damping.hpp"
#include "semistab/spectrum.hpp"

namespace semistab {

/// Truncated modal representation of a phase-space vector in the energy
/// coordinates (w, v) = (sqrt(s) u, v), so that the total energy is the
/// plain Euclidean quantity (|w|^2 + |v|^2)/2 summed over modes. Modes are
/// kept sorted ascending in s; states are immutable.
class ModalState {
public:
  ModalState(std::vector<double> s, std::vector<double> fs, Eigen::VectorXcd w,
             Eigen::VectorXcd v, double time = 0.0);

  int mode_count() const { return static_cast<int>(s_.size()); }
  const std::vector<double>& s() const { return s_; }
  const std::vector<double>& fs() const { return fs_; }
  const Eigen::VectorXcd& w() const { return w_; }
  const Eigen::VectorXcd& v() const { return v_; }
  double time() const { return time_; }

private:
  std::vector<double> s_;
  std::vector<double> fs_;
  Eigen::VectorXcd w_;
  Eigen::VectorXcd v_;
  double time_ = 0.0;
};

/// State over the first `budget` sampled modes with explicit coefficients
/// (shorter spans leave the remaining modes at zero).
ModalState make_state(const DampingFunction& f, const SpectrumSpec& spec, int budget,
                      std::span<const std::complex<double>> w0,
                      std::span<const std::complex<double>> v0);

/// Seeded random state of unit energy. The generator is a fixed mapping of
/// mt19937_64 output words to uniforms, so identical seeds give identical
/// states on every platform.
ModalState random_state(const DampingFunction& f, const SpectrumSpec& spec,
                        int budget, std::uint64_t seed);

/// Exact propagation by dt >= 0; no discretization error beyond rounding.
ModalState evolve(const ModalState& state, double dt);

/// Total energy (|w|^2 + |v|^2)/2, accumulated in ascending mode order with
/// compensated summation for reproducible output.
double energy(const ModalState& state);

/// dE/dt = -sum f(s) |v|^2 <= 0.
double dissipation_rate(const ModalState& state);

/// Finite-truncation estimate of the decay gauge psi(t) = |S(t) A^{-1}|.
struct PsiEstimate {
  double value = 0.0;
  double maximizing_s = 0.0;
  int maximizing_index = -1;
  /// Set when the maximizing mode is the last sampled one: the truncation
  /// horizon is exceeded and the value underestimates the true gauge.
  bool truncated = false;
};

PsiEstimate psi_norm(const DampingFunction& f, const SpectrumSpec& spec, double t,
                     int budget);

/// Single-mode solution of constant energy, available exactly when some
/// discrete eigenvalue lies in the zero-set of the damping. Verification
/// propagates the state across [0, t_max] and records the worst relative
/// energy drift.
struct EnergyWitness {
  double mode_s = 0.0;
  double initial_energy = 0.0;
  double max_relative_drift = 0.0;
  bool verified = false;
  ModalState initial;
};

std::optional<EnergyWitness> constant_energy_witness(const DampingFunction& f,
                                                     const SpectrumSpec& spec,
                                                     double t_max = 100.0,
                                                     int grid_points = 201);

}  // namespace semistab
