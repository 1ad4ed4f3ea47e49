// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semistab/damping.hpp"
#include "semistab/fit.hpp"
#include "semistab/spectrum.hpp"

namespace semistab {

/// Resolvent norm |(i lambda - A)^{-1}| along the imaginary axis, computed
/// as the max over sampled modes of the closed-form 2x2 block resolvents.
/// Exact over the truncation for discrete spectra, a lower bound for
/// continuous ones. Throws OnSpectrum when i lambda lies in the computed
/// generator spectrum (within relative tolerance 1e-9).
double resolvent_norm(const DampingFunction& f, const SpectrumSpec& spec,
                      double lambda, int budget);

struct ResolventSample {
  double lambda = 0.0;
  double norm = 0.0;
  double maximizing_s = 0.0;
  bool truncated = false;  // maximizing mode sits at the truncation edge
};

struct ResolventProfile {
  std::vector<ResolventSample> samples;  // sorted by lambda
  std::optional<LogLogFit> fit;          // envelope fit, when requested
  std::vector<std::string> warnings;
};

/// Profile over a log-spaced lambda grid merged with the sampled resonance
/// frequencies sqrt(s) (where the envelope peaks sit).
ResolventProfile resolvent_profile(const DampingFunction& f, const SpectrumSpec& spec,
                                   double lambda_min, double lambda_max,
                                   int grid_points, int budget);

/// Envelope growth exponent: least-squares slope of log(norm) against
/// log(lambda) over the local maxima of the profile, excluding
/// truncation-saturated points. Requires a Semiuniform classification and
/// at least 10 envelope points (InsufficientRange otherwise).
LogLogFit growth_exponent(const DampingFunction& f, const SpectrumSpec& spec,
                          double lambda_min, double lambda_max, int grid_points,
                          int budget);

/// Two-sided consistency of the resolvent growth exponent nu_hat with the
/// reciprocal decay exponent nu_tilde measured from the psi(t) gauge: the
/// two agree within 0.2 exactly when the polynomial correspondence between
/// resolvent growth and semigroup decay holds at the truncated scale.
struct BtReport {
  double resolvent_exponent = 0.0;  // nu_hat
  double psi_exponent = 0.0;        // nu_tilde = -1 / psi slope
  double psi_slope = 0.0;
  bool consistent = false;
  LogLogFit resolvent_fit;
  LogLogFit psi_fit;
};

BtReport bt_consistency(const DampingFunction& f, const SpectrumSpec& spec,
                        int budget);

}  // namespace semistab
