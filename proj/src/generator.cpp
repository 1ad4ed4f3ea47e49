// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace semistab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double re_xi_plus(double s, double fs) {
  return characteristic_roots(s, fs).plus.real();
}

// limsup of Re xi over s -> inf when the damping behaves like C s^q.
// q in (0,1) sends both branches to -inf (no contribution).
std::optional<double> power_tail_limsup(double C, double q) {
  if (C == 0.0) return 0.0;
  if (q < 0.0) return 0.0;
  if (q == 0.0) return -C / 2.0;
  if (q < 1.0) return std::nullopt;
  if (q == 1.0) return -1.0 / C;
  return 0.0;  // q > 1: the generator is not bijective, 0 is in the spectrum
}

struct SpectralBound {
  double value = 0.0;
  bool exact = false;
};

// sup of Re xi over the full spectrum for the power damping s^theta.
// Underdamped region: Re = -s^theta/2, monotone. Overdamped region:
// Re = -q(s) with q the smaller root magnitude; q has one interior
// critical point where f'(s) q = 1, i.e. s^(1-2 theta) = theta (1-theta).
SpectralBound power_bound(double theta, const SpectrumSpec& spec, double candidates,
                          double s_budget_max) {
  std::optional<double> crossover;  // f(s) = 2 sqrt(s)
  if (theta > 0.5)
    crossover = std::pow(4.0, 1.0 / (2.0 * theta - 1.0));
  else if (theta < 0.5)
    crossover = std::pow(2.0, 1.0 / (theta - 0.5));
  std::optional<double> q_critical;
  if (theta > 0.0 && theta < 1.0 && theta != 0.5)
    q_critical = std::pow(theta * (1.0 - theta), 1.0 / (1.0 - 2.0 * theta));

  const auto limsup = power_tail_limsup(1.0, theta);
  auto eval = [&](double s) { return re_xi_plus(s, std::pow(s, theta)); };

  if (spec.kind() == SpectrumKind::Continuous) {
    double best = candidates;
    for (const auto& iv : spec.intervals()) {
      best = std::max(best, eval(iv.lo));
      if (!iv.unbounded) best = std::max(best, eval(iv.hi));
      for (const auto& cand : {crossover, q_critical})
        if (cand && iv.contains(*cand)) best = std::max(best, eval(*cand));
      if (iv.unbounded && limsup) best = std::max(best, *limsup);
    }
    return {best, true};
  }

  // Discrete: the sampled prefix is exhaustive up to s_budget_max; beyond
  // it Re xi is monotone once past the crossover and the q-critical point.
  double best = candidates;
  if (!spec.bounded() && limsup) best = std::max(best, *limsup);
  double settle = 0.0;
  if (theta > 0.5) {
    settle = crossover.value_or(0.0);
    if (q_critical) settle = std::max(settle, *q_critical);
  }
  const bool exact = !spec.bounded() && s_budget_max >= settle;
  return {best, exact};
}

SpectralBound constant_bound(double c, const SpectrumSpec& spec) {
  const double s0 = spec.s0();
  // Overdamped modes (s <= c^2/4): q increases with s, so the least
  // damped one sits at s0. Any underdamped mode contributes exactly -c/2.
  double best = re_xi_plus(s0, c);
  const bool has_underdamped = !spec.bounded() || spec.s_max() > c * c / 4.0;
  if (has_underdamped) best = std::max(best, -c / 2.0);
  return {best, true};
}

SpectralBound spectral_bound_analysis(const DampingFunction& f, const SpectrumSpec& spec,
                                      double sampled_max, double s_budget_max,
                                      bool enumerated_all, bool contains_zero,
                                      const RatioLimitSet& ratio) {
  if (f.family() == DampingFamily::Zero) return {0.0, true};
  if (contains_zero) return {0.0, true};

  double candidates = sampled_max;
  for (double ell : ratio.values) candidates = std::max(candidates, -1.0 / ell);

  // Every mode underdamped or critical: Re xi = -f(s)/2 throughout.
  const DampingExtremes ex = extremes(f, spec);
  if (ex.sup_f_over_sqrt_s.exact && ex.sup_f_over_sqrt_s.value <= 2.0 && ex.inf_f.exact)
    return {std::max(candidates, -ex.inf_f.value / 2.0), true};

  if (enumerated_all) return {candidates, true};

  if (f.family() == DampingFamily::Power)
    return power_bound(f.theta(), spec, candidates, s_budget_max);
  if (f.family() == DampingFamily::RotationalInertia && f.theta() == 2.0)
    return power_bound(1.0, spec, candidates, s_budget_max);  // f(s) = s exactly
  if (f.family() == DampingFamily::Constant)
    return constant_bound(f.constant_value(), spec);

  // Sampled refinement only: attach the asymptotic candidate when the
  // family metadata provides one and flag the result inexact.
  std::optional<double> limsup;
  if (!spec.bounded()) {
    if (f.family() == DampingFamily::RotationalInertia)
      limsup = power_tail_limsup(std::pow(f.omega(), f.theta() - 2.0), f.theta() - 1.0);
    else if (f.family() == DampingFamily::Tabulated && f.tail())
      limsup = power_tail_limsup(f.tail()->c, f.tail()->p);
  }
  if (limsup) candidates = std::max(candidates, *limsup);
  return {candidates, false};
}

}  // namespace

CharacteristicPair xi_pair(double s, double fs) {
  if (!(s > 0.0)) throw InvalidParameter("spectrum point must be positive");
  if (fs < 0.0) throw InvalidParameter("damping value must be >= 0");
  const auto roots = characteristic_roots(s, fs);
  return {roots.plus, roots.minus, roots.regime};
}

std::string to_string(PointLabel label) {
  switch (label) {
    case PointLabel::XiPlus: return "xi_plus";
    case PointLabel::XiMinus: return "xi_minus";
    case PointLabel::LimitPoint: return "limit_point";
    case PointLabel::Zero: return "zero";
  }
  return "";
}

std::string to_string(ModeRegime regime) {
  switch (regime) {
    case ModeRegime::Underdamped: return "underdamped";
    case ModeRegime::Critical: return "critical";
    case ModeRegime::Overdamped: return "overdamped";
  }
  return "";
}

Tristate generator_bijective(const DampingFunction& f, const SpectrumSpec& spec) {
  if (spec.bounded()) return Tristate::True;  // continuous f on a compact set
  const auto ex = extremes(f, spec);
  if (!ex.sup_f_over_s.exact) return Tristate::Unknown;
  return tristate_of(std::isfinite(ex.sup_f_over_s.value));
}

GeneratorPortrait portrait(const DampingFunction& f, const SpectrumSpec& spec,
                           int budget) {
  if (budget < 1) throw InvalidParameter("budget must be >= 1");
  GeneratorPortrait out;

  const std::vector<double> samples = sample_modes(spec, budget);
  const bool eigen_flag = spec.kind() == SpectrumKind::Discrete;
  double sampled_max = -kInf;
  double s_used_max = 0.0;
  bool skipped = false;
  for (double s : samples) {
    if (!f.defined_at(s)) {
      skipped = true;
      continue;
    }
    const double fs = f(s);
    const auto roots = characteristic_roots(s, fs);
    out.points.push_back({roots.plus, PointLabel::XiPlus, s, eigen_flag, roots.regime});
    out.points.push_back({roots.minus, PointLabel::XiMinus, s, eigen_flag, roots.regime});
    sampled_max = std::max(sampled_max, roots.plus.real());
    s_used_max = std::max(s_used_max, s);
  }
  if (skipped)
    out.warnings.push_back("samples outside the tabulated damping range were skipped");
  if (out.points.empty()) throw OutOfRange("no spectrum sample is covered by the damping data");

  const RatioLimitSet ratio = ratio_limit_points(f, spec);
  for (double ell : ratio.values)
    out.points.push_back({{-1.0 / ell, 0.0}, PointLabel::LimitPoint, ell, false,
                          ModeRegime::Underdamped});
  if (!ratio.certified)
    out.warnings.push_back("ratio limits uncertified: tabulated damping without tail metadata");

  const Tristate bij = generator_bijective(f, spec);
  out.contains_zero = (bij == Tristate::False);
  if (bij == Tristate::Unknown)
    out.warnings.push_back("bijectivity of the generator could not be certified");
  if (out.contains_zero)
    out.points.push_back({{0.0, 0.0}, PointLabel::Zero, 0.0, false, ModeRegime::Underdamped});

  const bool enumerated_all =
      spec.kind() == SpectrumKind::Discrete && spec.bounded() &&
      budget >= spec.eigenvalue_count() && !skipped;
  const SpectralBound sb = spectral_bound_analysis(f, spec, sampled_max, s_used_max,
                                                   enumerated_all, out.contains_zero, ratio);
  out.spectral_bound = sb.value == 0.0 ? 0.0 : sb.value;  // normalize -0
  out.spectral_bound_exact = sb.exact;
  return out;
}

bool ImaginaryAxisSpectrum::contains(double lambda, double tol) const {
  const double x = std::abs(lambda);
  for (double p : sqrt_points)
    if (std::abs(x - p) <= tol * (1.0 + p)) return true;
  for (const auto& iv : sqrt_intervals)
    if (iv.contains(x, tol * (1.0 + iv.lo))) return true;
  return false;
}

ImaginaryAxisSpectrum imaginary_spectrum(const DampingFunction& f,
                                         const SpectrumSpec& spec) {
  const ZeroSetReport zs = zero_set(spec, f);
  ImaginaryAxisSpectrum out;
  out.exact = zs.exact;
  if (zs.whole_spectrum && spec.kind() == SpectrumKind::Continuous) {
    for (const auto& iv : spec.intervals())
      out.sqrt_intervals.push_back({std::sqrt(iv.lo), iv.unbounded ? 0.0 : std::sqrt(iv.hi),
                                    iv.unbounded});
    return out;
  }
  for (double s : zs.points) out.sqrt_points.push_back(std::sqrt(s));
  for (const auto& iv : zs.zero_intervals)
    out.sqrt_intervals.push_back({std::sqrt(iv.lo), iv.unbounded ? 0.0 : std::sqrt(iv.hi),
                                  iv.unbounded});
  return out;
}

}  // namespace semistab
