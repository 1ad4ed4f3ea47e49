// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/modal.hpp"

#include <cmath>
#include <random>

#include "semistab/generator.hpp"
#include "semistab/mode_algebra.hpp"

namespace semistab {

namespace {

// Compensated (Kahan) sum in the given order; energy reductions always run
// ascending in s so output files are reproducible.
class KahanSum {
public:
  void add(double x) {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

std::vector<double> damping_values(const DampingFunction& f,
                                   const std::vector<double>& s) {
  std::vector<double> fs;
  fs.reserve(s.size());
  for (double si : s) fs.push_back(f(si));
  return fs;
}

// Platform-independent uniform in [0, 1) from one mt19937_64 word.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

ModalState::ModalState(std::vector<double> s, std::vector<double> fs,
                       Eigen::VectorXcd w, Eigen::VectorXcd v, double time)
    : s_(std::move(s)), fs_(std::move(fs)), w_(std::move(w)), v_(std::move(v)), time_(time) {
  const auto n = static_cast<Eigen::Index>(s_.size());
  if (static_cast<Eigen::Index>(fs_.size()) != n || w_.size() != n || v_.size() != n)
    throw InvalidParameter("modal state arrays must have equal length");
  for (std::size_t i = 0; i + 1 < s_.size(); ++i)
    if (!(s_[i] < s_[i + 1])) throw InvalidParameter("modes must be sorted ascending in s");
}

ModalState make_state(const DampingFunction& f, const SpectrumSpec& spec, int budget,
                      std::span<const std::complex<double>> w0,
                      std::span<const std::complex<double>> v0) {
  std::vector<double> s = sample_modes(spec, budget);
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i < static_cast<Eigen::Index>(w0.size())) w[i] = w0[static_cast<std::size_t>(i)];
    if (i < static_cast<Eigen::Index>(v0.size())) v[i] = v0[static_cast<std::size_t>(i)];
  }
  std::vector<double> fs = damping_values(f, s);
  return ModalState(std::move(s), std::move(fs), std::move(w), std::move(v));
}

ModalState random_state(const DampingFunction& f, const SpectrumSpec& spec, int budget,
                        std::uint64_t seed) {
  std::vector<double> s = sample_modes(spec, budget);
  const auto n = static_cast<Eigen::Index>(s.size());
  std::mt19937_64 gen(seed);
  Eigen::VectorXcd w(n), v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w[i] = {2.0 * uniform01(gen) - 1.0, 2.0 * uniform01(gen) - 1.0};
    v[i] = {2.0 * uniform01(gen) - 1.0, 2.0 * uniform01(gen) - 1.0};
  }
  KahanSum sum;
  for (Eigen::Index i = 0; i < n; ++i) sum.add(std::norm(w[i]) + std::norm(v[i]));
  const double scale = 1.0 / std::sqrt(sum.value() / 2.0);  // unit energy
  w *= scale;
  v *= scale;
  std::vector<double> fs = damping_values(f, s);
  return ModalState(std::move(s), std::move(fs), std::move(w), std::move(v));
}

ModalState evolve(const ModalState& state, double dt) {
  if (dt < 0.0) throw InvalidParameter("time increment must be >= 0");
  const auto n = static_cast<Eigen::Index>(state.mode_count());
  Eigen::VectorXcd w(n), v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const Eigen::Matrix2cd p = mode_propagator(state.s()[idx], state.fs()[idx], dt);
    const Eigen::Vector2cd next = p * Eigen::Vector2cd(state.w()[i], state.v()[i]);
    w[i] = next[0];
    v[i] = next[1];
  }
  return ModalState(state.s(), state.fs(), std::move(w), std::move(v), state.time() + dt);
}

double energy(const ModalState& state) {
  KahanSum sum;
  for (Eigen::Index i = 0; i < state.w().size(); ++i)
    sum.add(std::norm(state.w()[i]) + std::norm(state.v()[i]));
  return 0.5 * sum.value();
}

double dissipation_rate(const ModalState& state) {
  KahanSum sum;
  for (Eigen::Index i = 0; i < state.v().size(); ++i)
    sum.add(state.fs()[static_cast<std::size_t>(i)] * std::norm(state.v()[i]));
  return -sum.value();
}

PsiEstimate psi_norm(const DampingFunction& f, const SpectrumSpec& spec, double t,
                     int budget) {
  if (t < 0.0) throw InvalidParameter("time must be >= 0");
  if (generator_bijective(f, spec) == Tristate::False)
    throw NotBijective("0 lies in the generator spectrum; the gauge is undefined");

  const std::vector<double> samples = sample_modes(spec, budget);
  PsiEstimate best;
  int index = 0;
  for (double s : samples) {
    if (!f.defined_at(s)) continue;
    const double fs = f(s);
    const Eigen::Matrix2cd m =
        mode_propagator(s, fs, t) * mode_generator_inverse(s, fs).cast<std::complex<double>>();
    const double norm = operator_norm_2x2(m);
    if (norm > best.value) {
      best.value = norm;
      best.maximizing_s = s;
      best.maximizing_index = index;
    }
    ++index;
  }
  best.truncated = best.maximizing_index == index - 1;
  return best;
}

std::optional<EnergyWitness> constant_energy_witness(const DampingFunction& f,
                                                     const SpectrumSpec& spec,
                                                     double t_max, int grid_points) {
  if (spec.kind() != SpectrumKind::Discrete) return {};
  const ZeroSetReport zs = zero_set(spec, f);
  if (zs.points.empty()) return {};

  // Single mode s* with f(s*) = 0, initial datum (u, v) = (0, s*^{-1/2} e),
  // i.e. (w, v) = (0, s*^{-1/2}) in energy coordinates.
  const double s_star = zs.points.front();
  ModalState initial({s_star}, {f(s_star)}, Eigen::VectorXcd::Zero(1),
                     Eigen::VectorXcd::Constant(1, 1.0 / std::sqrt(s_star)));

  EnergyWitness witness{s_star, energy(initial), 0.0, false, initial};
  for (int k = 0; k < grid_points; ++k) {
    const double t = t_max * static_cast<double>(k) / std::max(1, grid_points - 1);
    const double drift =
        std::abs(energy(evolve(initial, t)) - witness.initial_energy) / witness.initial_energy;
    witness.max_relative_drift = std::max(witness.max_relative_drift, drift);
  }
  witness.verified = witness.max_relative_drift <= 1e-12;
  return witness;
}

}  // namespace semistab
