// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semistab/generator.hpp"
#include "semistab/modal.hpp"
#include "semistab/mode_algebra.hpp"
#include "semistab/stability.hpp"

namespace semistab {

namespace {

struct NormScan {
  double norm = 0.0;
  double maximizing_s = 0.0;
  int maximizing_index = -1;
  int evaluated = 0;
};

NormScan scan_modes(const DampingFunction& f, const std::vector<double>& samples,
                    double lambda) {
  NormScan scan;
  for (double s : samples) {
    if (!f.defined_at(s)) continue;
    const double fs = f(s);
    // Guard against a sample sitting numerically on the spectrum: the
    // block determinant (s - lambda^2) + i lambda fs vanishes there.
    const double det2 = (s - lambda * lambda) * (s - lambda * lambda) +
                        lambda * lambda * fs * fs;
    if (det2 <= 1e-300 * (1.0 + s * s))
      throw OnSpectrum("i*lambda lies in the generator spectrum (lambda = " +
                       std::to_string(lambda) + ")");
    const double norm = operator_norm_2x2(mode_resolvent(s, fs, lambda));
    if (norm > scan.norm) {
      scan.norm = norm;
      scan.maximizing_s = s;
      scan.maximizing_index = scan.evaluated;
    }
    ++scan.evaluated;
  }
  return scan;
}

}  // namespace

double resolvent_norm(const DampingFunction& f, const SpectrumSpec& spec, double lambda,
                      int budget) {
  if (budget < 1) throw InvalidParameter("budget must be >= 1");
  if (lambda == 0.0 && generator_bijective(f, spec) == Tristate::False)
    throw OnSpectrum("0 lies in the generator spectrum");
  if (imaginary_spectrum(f, spec).contains(lambda))
    throw OnSpectrum("i*lambda lies in the generator spectrum (lambda = " +
                     std::to_string(lambda) + ")");
  if (lambda == 0.0) return psi_norm(f, spec, 0.0, budget).value;
  return scan_modes(f, sample_modes(spec, budget), lambda).norm;
}

ResolventProfile resolvent_profile(const DampingFunction& f, const SpectrumSpec& spec,
                                   double lambda_min, double lambda_max, int grid_points,
                                   int budget) {
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min))
    throw InvalidParameter("profile range must satisfy 0 < lambda_min < lambda_max");
  if (grid_points < 2) throw InvalidParameter("profile needs at least two grid points");

  const std::vector<double> samples = sample_modes(spec, budget);

  // Log grid merged with the resonance frequencies sqrt(s), where the
  // envelope peaks sit.
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(grid_points) + samples.size());
  const double llo = std::log(lambda_min), lhi = std::log(lambda_max);
  for (int i = 0; i < grid_points; ++i)
    grid.push_back(std::exp(llo + (lhi - llo) * i / (grid_points - 1)));
  for (double s : samples) {
    const double r = std::sqrt(s);
    if (r >= lambda_min && r <= lambda_max) grid.push_back(r);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12 * a; }),
             grid.end());

  const ImaginaryAxisSpectrum axis = imaginary_spectrum(f, spec);
  ResolventProfile profile;
  bool skipped = false;
  for (double lambda : grid) {
    if (axis.contains(lambda)) {
      skipped = true;
      continue;
    }
    const NormScan scan = scan_modes(f, samples, lambda);
    if (scan.evaluated == 0) continue;
    profile.samples.push_back({lambda, scan.norm, scan.maximizing_s,
                               scan.maximizing_index == scan.evaluated - 1});
  }
  if (skipped)
    profile.warnings.push_back("grid points on the imaginary spectrum were skipped");
  return profile;
}

LogLogFit growth_exponent(const DampingFunction& f, const SpectrumSpec& spec,
                          double lambda_min, double lambda_max, int grid_points,
                          int budget) {
  const StabilityReport report = classify(f, spec);
  if (report.verdict != StabilityVerdict::Semiuniform)
    throw NotSemiuniform("resolvent growth exponent requires a semiuniform system, got " +
                         to_string(report.verdict));

  const ResolventProfile profile =
      resolvent_profile(f, spec, lambda_min, lambda_max, grid_points, budget);

  std::vector<double> norms;
  norms.reserve(profile.samples.size());
  for (const auto& s : profile.samples) norms.push_back(s.norm);

  std::vector<double> ex, ey;
  for (std::size_t i : local_maxima(norms)) {
    if (profile.samples[i].truncated) continue;  // beyond the certified horizon
    ex.push_back(profile.samples[i].lambda);
    ey.push_back(profile.samples[i].norm);
  }
  if (ex.size() < 10)
    throw InsufficientRange("envelope fit needs at least 10 local maxima, got " +
                            std::to_string(ex.size()));
  return fit_loglog(ex, ey);
}

BtReport bt_consistency(const DampingFunction& f, const SpectrumSpec& spec, int budget) {
  const StabilityReport report = classify(f, spec);
  if (report.verdict != StabilityVerdict::Semiuniform)
    throw NotSemiuniform("consistency check requires a semiuniform system, got " +
                         to_string(report.verdict));

  BtReport out;
  out.resolvent_fit = growth_exponent(f, spec, 10.0, 1e3, 240, budget);
  out.resolvent_exponent = out.resolvent_fit.slope;

  // Decay gauge on a log time grid, restricted to the certified horizon
  // (the maximizing mode must stay strictly inside the truncation).
  std::vector<double> ts, psis;
  constexpr int kTimePoints = 40;
  for (int i = 0; i < kTimePoints; ++i) {
    const double t = std::exp(std::log(10.0) +
                              (std::log(1e3) - std::log(10.0)) * i / (kTimePoints - 1));
    const PsiEstimate est = psi_norm(f, spec, t, budget);
    if (est.truncated) continue;
    ts.push_back(t);
    psis.push_back(est.value);
  }
  if (ts.size() < 10)
    throw InsufficientRange("certified gauge horizon too short for a fit: " +
                            std::to_string(ts.size()) + " points");
  out.psi_fit = fit_loglog(ts, psis);
  out.psi_slope = out.psi_fit.slope;
  out.psi_exponent = -1.0 / out.psi_fit.slope;
  out.consistent = std::abs(out.resolvent_exponent - out.psi_exponent) <= 0.2;
  return out;
}

}  // namespace semistab
